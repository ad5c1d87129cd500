#pragma once

#include "gpl/enveloping.hpp"

#include <vector>

namespace gpl {

using PsiWord = std::vector<BasisDerivation>;

// rho(a (x) D)(p) = a D(p), linear in x.
Polynomial rho(const LElement& x, const Polynomial& p);
// (a_1 D_1) o ... o (a_n D_n) applied to p.
Polynomial rho_hat(const LetterSeq& word, const Polynomial& p);

// Psi[D_0 D_1..D_n] = D_0 Psi[D_1..D_n] - sum_i Psi[D_1..(D_0 <> D_i)..D_n], scaled
// by `connection` on the diamond; connection 0 gives the plain composition.
Polynomial psi_apply(const PsiWord& word, const Polynomial& p, const Rational& connection = 1);

// a_1..a_n Psi[D_1..D_n](p) with the connection of the structure.
Polynomial rho_bar(const Structure& s, const LetterSeq& word, const Polynomial& p);
Polynomial rho_bar(const Structure& s, const Word& word, const Polynomial& p);
Polynomial rho_bar(const Structure& s, const WordElement& u, const Polynomial& p);

struct Contribution {
    Word word;
    MultiIndex source;
    Rational coefficient;
    bool operator==(const Contribution& o) const = default;
};

// Every (u, beta, c) with c = <rho_bar(u) z^beta, z^target> / sym(u) nonzero, u over
// commutative words of letters in L, for the (btr, 0) structure.
std::vector<Contribution> coaction_contributions(const MultiIndex& target, const Config& cfg);

std::string to_string(const Contribution& c);

}  // namespace gpl
