#include "gpl/postlie.hpp"

#include "gpl/text.hpp"

namespace gpl {

LBasisKey::LBasisKey(MultiIndex g, BasisDerivation D) : gamma(std::move(g)), deriv(std::move(D)) {
    if (deriv.is_shift() && !gamma.is_zero()) throw std::invalid_argument("shift letters carry the unit coefficient");
    auto gd = gamma.dim();
    if (gd && *gd != deriv.d) throw DimensionError("coefficient and derivation of different dimensions");
}

std::strong_ordering LBasisKey::operator<=>(const LBasisKey& o) const {
    if (deriv.kind != o.deriv.kind)
        return deriv.is_shift() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (deriv.is_shift()) return deriv.i <=> o.deriv.i;
    if (auto c = gamma <=> o.gamma; c != 0) return c;
    return deriv <=> o.deriv;
}

void LElement::add_term(const LBasisKey& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
    }
}

void LElement::add_poly(const Polynomial& p, const MultiIndex& g, const BasisDerivation& D, const Rational& c) {
    for (auto& [h, ch] : p.terms()) add_term(LBasisKey(h + g, D), c * ch);
}

LElement& LElement::operator+=(const LElement& o) {
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LElement& LElement::operator-=(const LElement& o) {
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LElement& LElement::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LElement operator+(LElement a, const LElement& b) { return a += b; }
LElement operator-(LElement a, const LElement& b) { return a -= b; }
LElement operator-(LElement a) { return a *= -1; }
LElement operator*(const Rational& c, LElement a) { return a *= c; }

LElement triangleright(const LElement& x, const LElement& y) {
    LElement out;
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            if (ky.gamma.is_zero()) continue;
            out.add_poly(apply(kx.deriv, ky.gamma), kx.gamma, ky.deriv, cx * cy);
        }
    return out;
}

namespace {

template <class Table>
LElement coefficientwise(const LElement& x, const LElement& y, Table table) {
    LElement out;
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            DerivationCombo r = table(kx.deriv, ky.deriv);
            if (r.empty()) continue;
            MultiIndex g = kx.gamma + ky.gamma;
            for (auto& [D, c] : r) out.add_term(LBasisKey(g, D), cx * cy * c);
        }
    return out;
}

}  // namespace

LElement bracket(const LElement& x, const LElement& y) {
    return coefficientwise(x, y, [](const BasisDerivation& a, const BasisDerivation& b) { return commutator_circ(a, b); });
}

LElement diamond_L(const LElement& x, const LElement& y) {
    return coefficientwise(x, y, [](const BasisDerivation& a, const BasisDerivation& b) { return diamond_D(a, b); });
}

LElement btr(const LElement& x, const LElement& y) { return triangleright(x, y) + diamond_L(x, y); }

LElement bbracket(const LElement& x, const LElement& y) {
    return bracket(x, y) - (diamond_L(x, y) - diamond_L(y, x));
}

LElement grand_bracket(const LElement& x, const LElement& y) {
    return triangleright(x, y) - triangleright(y, x) + bracket(x, y);
}

// BilinearOp

BilinearOp BilinearOp::triangleright() {
    BilinearOp op;
    op.terms_[{Prim::Triangleright, false}] = 1;
    return op;
}

BilinearOp BilinearOp::bracket() {
    BilinearOp op;
    op.terms_[{Prim::Bracket, false}] = 1;
    return op;
}

BilinearOp BilinearOp::diamond() {
    BilinearOp op;
    op.terms_[{Prim::Diamond, false}] = 1;
    return op;
}

BilinearOp BilinearOp::btr() { return triangleright() + diamond(); }

BilinearOp BilinearOp::bbracket() { return bracket() - (diamond() - diamond().transposed()); }

BilinearOp BilinearOp::grand_bracket() { return triangleright() - triangleright().transposed() + bracket(); }

BilinearOp BilinearOp::transposed() const {
    BilinearOp r;
    for (auto& [k, c] : terms_) r.terms_[{k.first, !k.second}] = c;
    return r;
}

BilinearOp BilinearOp::operator+(const BilinearOp& o) const {
    BilinearOp r = *this;
    for (auto& [k, c] : o.terms_) {
        Rational& v = r.terms_[k];
        v += c;
        if (v == 0) r.terms_.erase(k);
    }
    return r;
}

BilinearOp BilinearOp::operator-(const BilinearOp& o) const { return *this + o * Rational(-1); }

BilinearOp BilinearOp::operator*(const Rational& c) const {
    BilinearOp r;
    if (c == 0) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

Rational BilinearOp::coefficient(Prim p, bool transposed) const {
    auto it = terms_.find({p, transposed});
    return it == terms_.end() ? Rational(0) : it->second;
}

LElement BilinearOp::operator()(const LElement& x, const LElement& y) const {
    LElement out;
    for (auto& [k, c] : terms_) {
        const LElement& a = k.second ? y : x;
        const LElement& b = k.second ? x : y;
        LElement v;
        switch (k.first) {
            case Prim::Triangleright: v = gpl::triangleright(a, b); break;
            case Prim::Bracket: v = gpl::bracket(a, b); break;
            case Prim::Diamond: v = gpl::diamond_L(a, b); break;
        }
        v *= c;
        out += v;
    }
    return out;
}

std::pair<BilinearOp, BilinearOp> adjoint_products(const BilinearOp& prod, const BilinearOp& lie) {
    return {prod + lie, lie * Rational(-1)};
}

// Tensor calculus

LElement commutator(const BilinearOp& op, const LElement& x, const LElement& y) { return op(x, y) - op(y, x); }

LElement associator(const BilinearOp& op, const LElement& x, const LElement& y, const LElement& z) {
    return op(x, op(y, z)) - op(op(x, y), z);
}

LElement torsion(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y) {
    return commutator(op, x, y) - lie(x, y);
}

LElement curvature(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                   const LElement& z) {
    return op(x, op(y, z)) - op(y, op(x, z)) - op(lie(x, y), z);
}

LElement covariant_torsion(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                           const LElement& z) {
    return op(x, torsion(op, lie, y, z)) - torsion(op, lie, op(x, y), z) - torsion(op, lie, y, op(x, z));
}

LElement bianchi_residual(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                          const LElement& z) {
    auto term = [&](const LElement& a, const LElement& b, const LElement& c) {
        return torsion(op, lie, torsion(op, lie, a, b), c) - curvature(op, lie, a, b, c) +
               covariant_torsion(op, lie, a, b, c);
    };
    return term(x, y, z) + term(z, x, y) + term(y, z, x);
}

// Checkers

namespace {

void expect_zero(Report& r, const char* identity, size_t i, const LElement& residual) {
    if (!residual.is_zero()) r.failures.push_back({identity, i, residual});
}

}  // namespace

Report check_post_lie(const BilinearOp& prod, const BilinearOp& lie, const std::vector<Triple>& samples) {
    Report r;
    for (size_t i = 0; i < samples.size(); ++i) {
        auto& [x, y, z] = samples[i];
        expect_zero(r, "antisymmetry", i, lie(x, y) + lie(y, x));
        expect_zero(r, "jacobi", i, lie(x, lie(y, z)) + lie(y, lie(z, x)) + lie(z, lie(x, y)));
        expect_zero(r, "derivation", i, prod(x, lie(y, z)) - lie(prod(x, y), z) - lie(y, prod(x, z)));
        expect_zero(r, "associator", i,
                    prod(lie(x, y), z) - (associator(prod, x, y, z) - associator(prod, y, x, z)));
        ++r.checked;
    }
    return r;
}

Report check_pre_lie(const BilinearOp& prod, const std::vector<Triple>& samples) {
    Report r;
    for (size_t i = 0; i < samples.size(); ++i) {
        auto& [x, y, z] = samples[i];
        expect_zero(r, "pre-lie", i, associator(prod, x, y, z) - associator(prod, y, x, z));
        ++r.checked;
    }
    return r;
}

Report check_derivation_compat(const std::vector<Triple>& samples) {
    Report r;
    for (size_t i = 0; i < samples.size(); ++i) {
        auto& [x, y, z] = samples[i];
        expect_zero(r, "compatibility", i,
                    triangleright(x, diamond_L(y, z)) - diamond_L(triangleright(x, y), z) -
                        diamond_L(y, triangleright(x, z)));
        ++r.checked;
    }
    return r;
}

bool in_L0(const LElement& x) {
    for (auto& [k, c] : x.terms())
        if (k.deriv.is_shift() && !k.gamma.is_zero()) return false;
    return true;
}

bool in_L(const LBasisKey& key, const Config& cfg) {
    if (key.deriv.is_shift()) return key.gamma.is_zero();
    return compare_hom(key.gamma.homogeneity(), {0, norm1(key.deriv.n)}, cfg) > 0;
}

bool in_L(const LElement& x, const Config& cfg) {
    for (auto& [k, c] : x.terms())
        if (!in_L(k, cfg)) return false;
    return true;
}

// Text

std::string to_string(const LBasisKey& key) {
    if (key.deriv.is_shift()) return to_string(key.deriv);
    return "z" + to_string(key.gamma) + "x" + to_string(key.deriv);
}

std::string to_string(const LElement& x) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (auto& [k, c] : x.terms()) terms.emplace_back(c, to_string(k));
    return join_signed(terms);
}

LBasisKey parse_letter(Cursor& c, int d) {
    if (c.peek() == 'P') return LBasisKey(MultiIndex{}, parse_derivation(c, d));
    MultiIndex g = parse_monomial(c);
    c.expect('x');
    BasisDerivation D = parse_derivation(c, d);
    if (D.is_shift() && !g.is_zero()) c.fail("shift letters carry the unit coefficient");
    if (g.dim() && *g.dim() != d) c.fail("multi-index has wrong dimension");
    return LBasisKey(std::move(g), std::move(D));
}

LElement parse_lelement(Cursor& c, int d) {
    LElement out;
    Rational sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    while (true) {
        Rational coef = sign;
        if (c.starts_rational()) coef *= c.parse_rational();
        if (c.peek() == 'z' || c.peek() == 'P') {
            out.add_term(parse_letter(c, d), coef);
        } else if (coef == 0) {
            // "0" is the zero element
        } else {
            c.fail("expected element term");
        }
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else break;
    }
    return out;
}

LBasisKey parse_letter(std::string_view text, int d) {
    Cursor c(text);
    LBasisKey k = parse_letter(c, d);
    c.expect_end();
    return k;
}

LElement parse_lelement(std::string_view text, int d) {
    Cursor c(text);
    LElement x = parse_lelement(c, d);
    c.expect_end();
    return x;
}

}  // namespace gpl
