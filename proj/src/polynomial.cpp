#include "gpl/polynomial.hpp"

#include "gpl/text.hpp"

namespace gpl {

Polynomial Polynomial::monomial(const MultiIndex& g, const Rational& c) {
    Polynomial p;
    p.add_term(g, c);
    return p;
}

void Polynomial::add_term(const MultiIndex& g, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= -1; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial multiply(const Polynomial& p1, const Polynomial& p2) {
    Polynomial r;
    for (auto& [g1, c1] : p1.terms())
        for (auto& [g2, c2] : p2.terms()) r.add_term(g1 + g2, c1 * c2);
    return r;
}

Polynomial shift_by(const Polynomial& p, const MultiIndex& g) {
    if (g.is_zero()) return p;
    Polynomial r;
    for (auto& [h, c] : p.terms()) r.add_term(h + g, c);
    return r;
}

Rational coeff(const Polynomial& p, const MultiIndex& g) {
    auto it = p.terms().find(g);
    return it == p.terms().end() ? Rational(0) : it->second;
}

std::map<HomDegree, Polynomial> grade_components(const Polynomial& p) {
    std::map<HomDegree, Polynomial> out;
    for (auto& [g, c] : p.terms()) out[g.homogeneity()].add_term(g, c);
    return out;
}

std::string join_signed(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [c, body] : terms) {
        Rational a = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (body.empty()) {
            s += to_string(a);
        } else if (a == 1) {
            s += body;
        } else {
            s += to_string(a) + " " + body;
        }
    }
    return s;
}

std::string to_string(const Polynomial& p) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (auto& [g, c] : p.terms()) terms.emplace_back(c, g.is_zero() ? "" : "z" + to_string(g));
    return join_signed(terms);
}

namespace {

// One term: [rat] [z{...}] ; a bare rational is a multiple of the unit.
void parse_poly_term(Cursor& c, const Rational& sign, Polynomial& out) {
    Rational coef = sign;
    bool have_number = false;
    if (c.starts_rational() && c.peek() != '-' && c.peek() != '+') {
        coef *= c.parse_rational();
        have_number = true;
    }
    if (c.peek() == 'z') {
        out.add_term(parse_monomial(c), coef);
    } else if (have_number) {
        out.add_term(MultiIndex{}, coef);
    } else {
        c.fail("expected polynomial term");
    }
}

}  // namespace

Polynomial parse_polynomial(Cursor& c) {
    Polynomial out;
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    parse_poly_term(c, sign, out);
    while (true) {
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else break;
        parse_poly_term(c, sign, out);
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text) {
    Cursor c(text);
    Polynomial p = parse_polynomial(c);
    c.expect_end();
    return p;
}

}  // namespace gpl
