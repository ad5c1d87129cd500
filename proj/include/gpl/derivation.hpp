#pragma once

#include "gpl/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace gpl {

// Tilt D^(n) for any n in N^d (zero allowed), or shift P_i for i in 1..d.
struct BasisDerivation {
    enum class Kind { Shift, Tilt };
    Kind kind = Kind::Tilt;
    int i = 0;           // shift index, 1-based
    std::vector<int> n;  // tilt vector
    int d = 0;

    static BasisDerivation tilt(std::vector<int> n);
    static BasisDerivation shift(int i, int d);

    bool is_shift() const { return kind == Kind::Shift; }
    bool is_tilt() const { return kind == Kind::Tilt; }
    // |P_i| = 1, |D^(n)| = -|n|
    HomDegree degree() const;

    std::strong_ordering operator<=>(const BasisDerivation& o) const;
    bool operator==(const BasisDerivation& o) const;
};

using DerivationCombo = std::map<BasisDerivation, Rational>;

void add_to(DerivationCombo& acc, const BasisDerivation& b, const Rational& c);

Polynomial apply(const BasisDerivation& D, const MultiIndex& g);
Polynomial apply(const BasisDerivation& D, const Polynomial& p);
Polynomial apply(const DerivationCombo& D, const Polynomial& p);
// D1(D2(...Dn(p)))
Polynomial apply_word(const std::vector<BasisDerivation>& word, const Polynomial& p);

DerivationCombo commutator_circ(const BasisDerivation& D1, const BasisDerivation& D2);
DerivationCombo diamond_D(const BasisDerivation& D1, const BasisDerivation& D2);
DerivationCombo diamond_D(const DerivationCombo& D1, const DerivationCombo& D2);

std::string to_string(const BasisDerivation& D);
std::string to_string(const DerivationCombo& D);
BasisDerivation parse_derivation(std::string_view text, int d);

}  // namespace gpl
