#pragma once

#include "gpl/group.hpp"
#include "gpl/sampling.hpp"

#include <doctest.h>

namespace t {

using namespace gpl;

inline MultiIndex M(std::string_view s) { return parse_multiindex(s); }
inline Polynomial P(std::string_view s) { return parse_polynomial(s); }
inline BasisDerivation D(std::string_view s) { return parse_derivation(s, 2); }
inline LBasisKey X(std::string_view s) { return parse_letter(s, 2); }
inline LElement L(std::string_view s) { return parse_lelement(s, 2); }
inline Word W(std::string_view s) { return parse_word(s, 2); }
inline Rational Q(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline DerivationCombo combo(std::initializer_list<std::pair<const char*, long>> terms) {
    DerivationCombo c;
    for (auto& [s, v] : terms) add_to(c, D(s), v);
    return c;
}

}  // namespace t

namespace doctest {
template <>
struct StringMaker<gpl::Rational> {
    static String convert(const gpl::Rational& r) { return gpl::to_string(r).c_str(); }
};
template <>
struct StringMaker<gpl::Polynomial> {
    static String convert(const gpl::Polynomial& p) { return gpl::to_string(p).c_str(); }
};
template <>
struct StringMaker<gpl::LElement> {
    static String convert(const gpl::LElement& x) { return gpl::to_string(x).c_str(); }
};
template <>
struct StringMaker<gpl::MultiIndex> {
    static String convert(const gpl::MultiIndex& g) { return gpl::to_string(g).c_str(); }
};
template <>
struct StringMaker<gpl::WordElement> {
    static String convert(const gpl::WordElement& u) { return gpl::to_string(u).c_str(); }
};
template <>
struct StringMaker<gpl::TensorElement> {
    static String convert(const gpl::TensorElement& u) { return ("\n" + gpl::to_string(u)).c_str(); }
};
template <>
struct StringMaker<gpl::DerivationCombo> {
    static String convert(const gpl::DerivationCombo& c) { return gpl::to_string(c).c_str(); }
};
}  // namespace doctest
