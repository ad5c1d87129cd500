#include "gpl/group.hpp"

#include "gpl/text.hpp"

#include <random>
#include <sstream>

namespace gpl {

void Character::set(const LBasisKey& x, const Rational& v) {
    if (v == 0)
        values_.erase(x);
    else
        values_[x] = v;
}

Rational Character::value(const LBasisKey& x) const {
    auto it = values_.find(x);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational char_eval(const Character& f, const Word& w) {
    Rational r = 1;
    for (auto& x : w.letters()) {
        r *= f.value(x);
        if (r == 0) break;
    }
    return r;
}

Rational char_eval(const Character& f, const WordElement& u) {
    Rational s = 0;
    for (auto& [w, c] : u.terms()) s += c * char_eval(f, w);
    return s;
}

WordFunctional as_functional(const Character& f) {
    return [f](const Word& w) { return char_eval(f, w); };
}

Rational convolve(const WordFunctional& f1, const WordFunctional& f2, const Word& w, DualCoproduct& dc) {
    Rational s = 0;
    TensorElement t = dc(w);
    for (auto& [pq, c] : t.terms()) {
        Rational a = f1(pq.first);
        if (a == 0) continue;
        s += c * a * f2(pq.second);
    }
    return s;
}

Rational convolve(const Character& f1, const Character& f2, const Word& w, DualCoproduct& dc) {
    return convolve(as_functional(f1), as_functional(f2), w, dc);
}

Rational convolve(const Character& f1, const Character& f2, const Word& w, DualCoproduct& dc,
                  const TruncationParams& trunc) {
    Rational s = 0;
    TensorElement t = dc(w, trunc);
    for (auto& [pq, c] : t.terms()) s += c * char_eval(f1, pq.first) * char_eval(f2, pq.second);
    return s;
}

Character convolved_character(const Character& f1, const Character& f2, const std::vector<LBasisKey>& letters,
                              DualCoproduct& dc) {
    Character h;
    for (auto& x : letters) h.set(x, convolve(f1, f2, Word::letter(x), dc));
    return h;
}

Polynomial gamma_apply(const WordFunctional& f, const MultiIndex& g, const Config& cfg) {
    Polynomial out;
    for (auto& c : coaction_contributions(g, cfg)) {
        Rational v = f(c.word);
        if (v != 0) out.add_term(c.source, c.coefficient * v);
    }
    return out;
}

Polynomial gamma_apply(const Character& f, const MultiIndex& g, const Config& cfg) {
    return gamma_apply(as_functional(f), g, cfg);
}

Polynomial gamma_apply(const WordFunctional& f, const Polynomial& p, const Config& cfg) {
    Polynomial out;
    for (auto& [g, c] : p.terms()) out += gamma_apply(f, g, cfg) * c;
    return out;
}

std::vector<LBasisKey> letters_up_to(const Rational& cutoff, const Config& cfg) {
    std::vector<LBasisKey> out;
    for (int i = 1; i <= cfg.d(); ++i) out.push_back(LBasisKey::shift(i, cfg.d()));
    for (auto& g : enumerate_below(cutoff, cfg)) {
        if (g.is_zero()) continue;
        Rational h = g.homogeneity().value(cfg);
        for (auto& n : vectors_up_to(cfg.d(), floor_to_long(h), 0)) {
            LBasisKey k(g, BasisDerivation::tilt(n));
            if (in_L(k, cfg)) out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Character random_character(uint64_t seed, const Rational& cutoff, const Config& cfg) {
    std::mt19937_64 rng(seed);
    Character f;
    for (auto& x : letters_up_to(cutoff, cfg)) {
        long q = static_cast<long>(rng() % 4) + 1;
        long p = static_cast<long>(rng() % static_cast<uint64_t>(4 * q + 1)) - 2 * q;
        Rational v(p, q);
        v.canonicalize();
        f.set(x, v);
    }
    return f;
}

std::string write_character(const Character& f) {
    std::ostringstream os;
    for (auto& [x, v] : f.values()) os << to_string(x) << " = " << to_string(v) << '\n';
    return os.str();
}

Character read_character(std::string_view text, int d) {
    Character f;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected '<letter> = <rational>'", lineno, 1);
        LBasisKey x;
        Rational v;
        try {
            x = parse_letter(std::string_view(line).substr(0, eq), d);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineno, e.column());
        }
        try {
            v = parse_rational(std::string_view(line).substr(eq + 1));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineno, static_cast<int>(eq) + 1 + e.column());
        }
        f.set(x, f.value(x) + v);
    }
    return f;
}

}  // namespace gpl
