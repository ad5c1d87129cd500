#include "gpl/derivation.hpp"

#include "gpl/text.hpp"

namespace gpl {

BasisDerivation BasisDerivation::tilt(std::vector<int> n) {
    if (n.empty()) throw DimensionError("tilt needs a dimension");
    for (int v : n)
        if (v < 0) throw std::invalid_argument("tilt vector entries must be natural numbers");
    int d = static_cast<int>(n.size());
    return BasisDerivation{Kind::Tilt, 0, std::move(n), d};
}

BasisDerivation BasisDerivation::shift(int i, int d) {
    if (d < 1 || i < 1 || i > d) throw std::invalid_argument("shift index out of range 1..d");
    return BasisDerivation{Kind::Shift, i, {}, d};
}

HomDegree BasisDerivation::degree() const {
    if (is_shift()) return {0, 1};
    return {0, -static_cast<long>(norm1(n))};
}

std::strong_ordering BasisDerivation::operator<=>(const BasisDerivation& o) const {
    if (kind != o.kind) return is_shift() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_shift()) return i <=> o.i;
    if (auto c = norm1(n) <=> norm1(o.n); c != 0) return c;
    return n <=> o.n;
}

bool BasisDerivation::operator==(const BasisDerivation& o) const {
    return kind == o.kind && (is_shift() ? (i == o.i && d == o.d) : n == o.n);
}

void add_to(DerivationCombo& acc, const BasisDerivation& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

namespace {

void check_dim(const BasisDerivation& D, const MultiIndex& g) {
    auto gd = g.dim();
    if (gd && *gd != D.d) throw DimensionError("derivation and multi-index of different dimensions");
}

}  // namespace

Polynomial apply(const BasisDerivation& D, const MultiIndex& g) {
    check_dim(D, g);
    Polynomial out;
    if (D.is_tilt() && norm1(D.n) != 0) {
        int m = g[Key::N(D.n)];
        if (m > 0) out.add_term(g.shifted(Key::N(D.n), -1), m);
        return out;
    }
    std::optional<Key> extra;
    if (D.is_shift()) {
        std::vector<int> ei(D.d, 0);
        ei[D.i - 1] = 1;
        extra = Key::N(ei);
    }
    for (auto& [key, m] : g.entries()) {
        if (!key.is_n) {
            MultiIndex h = g.shifted(key, -1).shifted(Key::K(key.k + 1), 1);
            if (extra) h = h.shifted(*extra, 1);
            out.add_term(h, Rational((key.k + 1) * m));
        } else if (D.is_shift()) {
            std::vector<int> up = key.n;
            up[D.i - 1] += 1;
            MultiIndex h = g.shifted(key, -1).shifted(Key::N(up), 1);
            out.add_term(h, Rational((key.n[D.i - 1] + 1) * m));
        }
    }
    return out;
}

Polynomial apply(const BasisDerivation& D, const Polynomial& p) {
    Polynomial out;
    for (auto& [g, c] : p.terms()) {
        Polynomial t = apply(D, g);
        t *= c;
        out += t;
    }
    return out;
}

Polynomial apply(const DerivationCombo& D, const Polynomial& p) {
    Polynomial out;
    for (auto& [b, c] : D) out += apply(b, p) * c;
    return out;
}

Polynomial apply_word(const std::vector<BasisDerivation>& word, const Polynomial& p) {
    Polynomial r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply(*it, r);
    return r;
}

namespace {

// P_i composed against D^(n): [P_i, D^(n)] = -n_i D^(n - e_i)
DerivationCombo shift_tilt(const BasisDerivation& s, const BasisDerivation& t) {
    DerivationCombo out;
    int ni = t.n[s.i - 1];
    if (ni == 0) return out;
    std::vector<int> m = t.n;
    m[s.i - 1] -= 1;
    add_to(out, BasisDerivation::tilt(m), Rational(-ni));
    return out;
}

void check_pair(const BasisDerivation& D1, const BasisDerivation& D2) {
    if (D1.d != D2.d) throw DimensionError("derivations of different dimensions");
}

}  // namespace

DerivationCombo commutator_circ(const BasisDerivation& D1, const BasisDerivation& D2) {
    check_pair(D1, D2);
    if (D1.is_shift() && D2.is_tilt()) return shift_tilt(D1, D2);
    if (D1.is_tilt() && D2.is_shift()) {
        DerivationCombo r = shift_tilt(D2, D1);
        for (auto& t : r) t.second = -t.second;
        return r;
    }
    return {};
}

DerivationCombo diamond_D(const BasisDerivation& D1, const BasisDerivation& D2) {
    check_pair(D1, D2);
    if (D1.is_shift() && D2.is_tilt()) return shift_tilt(D1, D2);
    return {};
}

DerivationCombo diamond_D(const DerivationCombo& D1, const DerivationCombo& D2) {
    DerivationCombo out;
    for (auto& [a, ca] : D1)
        for (auto& [b, cb] : D2)
            for (auto& [r, cr] : diamond_D(a, b)) add_to(out, r, ca * cb * cr);
    return out;
}

std::string to_string(const BasisDerivation& D) {
    if (D.is_shift()) return "P" + std::to_string(D.i);
    return "D" + vector_to_string(D.n);
}

std::string to_string(const DerivationCombo& D) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (auto& [b, c] : D) terms.emplace_back(c, to_string(b));
    return join_signed(terms);
}

BasisDerivation parse_derivation(Cursor& c, int d) {
    if (c.accept('P')) {
        long i = c.parse_nat();
        if (i < 1 || i > d) c.fail("shift index out of range");
        return BasisDerivation::shift(static_cast<int>(i), d);
    }
    if (c.accept('D')) {
        c.expect('(');
        std::vector<int> n;
        do n.push_back(static_cast<int>(c.parse_nat()));
        while (c.accept(','));
        c.expect(')');
        if (static_cast<int>(n.size()) != d) c.fail("tilt vector has wrong dimension");
        return BasisDerivation::tilt(std::move(n));
    }
    c.fail("expected derivation 'P<i>' or 'D(...)'");
}

BasisDerivation parse_derivation(std::string_view text, int d) {
    Cursor c(text);
    BasisDerivation D = parse_derivation(c, d);
    c.expect_end();
    return D;
}

}  // namespace gpl
