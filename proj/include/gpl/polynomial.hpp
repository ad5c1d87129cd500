#pragma once

#include "gpl/multiindex.hpp"

#include <map>
#include <string>

namespace gpl {

// Finite sum of c * z^gamma with nonzero exact coefficients.
class Polynomial {
public:
    using Terms = std::map<MultiIndex, Rational>;

    Polynomial() = default;
    static Polynomial one() { return monomial(MultiIndex{}); }
    static Polynomial monomial(const MultiIndex& g, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const MultiIndex& g, const Rational& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
Polynomial multiply(const Polynomial& p1, const Polynomial& p2);
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
// z^g * p
Polynomial shift_by(const Polynomial& p, const MultiIndex& g);

Rational coeff(const Polynomial& p, const MultiIndex& g);
std::map<HomDegree, Polynomial> grade_components(const Polynomial& p);

std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

// Joins signed terms as "a + b - c"; used by every printer.
std::string join_signed(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace gpl
