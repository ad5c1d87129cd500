#pragma once

#include "gpl/representation.hpp"

#include <cstdint>
#include <functional>

namespace gpl {

// Multiplicative functional on (Sym(L), *) given by its values on letters (default 0).
class Character {
public:
    Character() = default;

    void set(const LBasisKey& x, const Rational& v);
    Rational value(const LBasisKey& x) const;
    const std::map<LBasisKey, Rational>& values() const { return values_; }
    bool operator==(const Character& o) const { return values_ == o.values_; }

    // The unit 1*: counit.
    static Character unit() { return {}; }

private:
    std::map<LBasisKey, Rational> values_;
};

using WordFunctional = std::function<Rational(const Word&)>;

Rational char_eval(const Character& f, const Word& w);
Rational char_eval(const Character& f, const WordElement& u);
WordFunctional as_functional(const Character& f);

// (f1 * f2)(w) = (f1 (x) f2)(Delta_star w)
Rational convolve(const Character& f1, const Character& f2, const Word& w, DualCoproduct& dc);
Rational convolve(const Character& f1, const Character& f2, const Word& w, DualCoproduct& dc,
                  const TruncationParams& trunc);
Rational convolve(const WordFunctional& f1, const WordFunctional& f2, const Word& w, DualCoproduct& dc);
// Values of f1 * f2 on the given letters, as a character.
Character convolved_character(const Character& f1, const Character& f2, const std::vector<LBasisKey>& letters,
                              DualCoproduct& dc);

// Gamma_f(z^g) = sum c f(u) z^beta over the coaction contributions of g.
Polynomial gamma_apply(const Character& f, const MultiIndex& g, const Config& cfg);
Polynomial gamma_apply(const WordFunctional& f, const MultiIndex& g, const Config& cfg);
Polynomial gamma_apply(const WordFunctional& f, const Polynomial& p, const Config& cfg);

// Letters of L with |gamma| <= cutoff and |n| < |gamma|, plus the shifts.
std::vector<LBasisKey> letters_up_to(const Rational& cutoff, const Config& cfg);

// Values p/q with q in 1..4 and |p/q| <= 2 on every letter up to the cutoff.
Character random_character(uint64_t seed, const Rational& cutoff, const Config& cfg);

std::string write_character(const Character& f);
Character read_character(std::string_view text, int d);

}  // namespace gpl
