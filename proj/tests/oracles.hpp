#pragma once

// Brute-force reference implementations. They share the product code with the
// library (ext_action, star, rho) but none of its candidate enumeration.

#include "gpl/group.hpp"
#include "gpl/sampling.hpp"

#include <functional>

namespace oracle {

using namespace gpl;

// Shifts and every z^gamma (x) D^(n) in L with 0 < |gamma| <= max_gamma, K-indices <= kmax, |n| <= max_n.
inline std::vector<LBasisKey> alphabet(const Config& cfg, const Rational& max_gamma, int kmax, int max_n) {
    std::vector<LBasisKey> out;
    for (int i = 1; i <= cfg.d(); ++i) out.push_back(LBasisKey::shift(i, cfg.d()));
    std::vector<std::vector<int>> ns{std::vector<int>(cfg.d(), 0)};
    for (auto& n : vectors_up_to(cfg.d(), max_n)) ns.push_back(n);
    for (auto& g : enumerate_below(max_gamma, cfg, kmax)) {
        if (g.is_zero()) continue;
        for (auto& n : ns) {
            LBasisKey x = LBasisKey::tilt(g, n);
            if (in_L(x, cfg)) out.push_back(x);
        }
    }
    return out;
}

// Every multiset over `alphabet` whose letters all have positive grade, with
// total grade exactly `grade` (or at most, when !exact) and total K-count at most kcount.
inline void for_each_multiset(const std::vector<LBasisKey>& alphabet, const Config& cfg, const Rational& grade,
                              int kcount, bool exact, const std::function<void(const Word&)>& visit) {
    std::vector<Rational> g;
    for (auto& x : alphabet) g.push_back(x.grade().value(cfg));
    LetterSeq cur;
    std::function<void(size_t, Rational, int)> rec = [&](size_t from, Rational left, int kleft) {
        if (left == 0 || (!exact && left >= 0)) visit(Word::sorted(cur));
        for (size_t i = from; i < alphabet.size(); ++i) {
            int kc = alphabet[i].gamma.k_count();
            if (g[i] <= 0) throw std::logic_error("oracle alphabet letter of non-positive grade");
            if (g[i] > left || kc > kleft) continue;
            cur.push_back(alphabet[i]);
            rec(i, left - g[i], kleft - kc);
            cur.pop_back();
        }
    };
    rec(0, grade, kcount);
}

inline Rational total_grade(const Word& w, const Config& cfg) {
    Rational s = 0;
    for (auto& x : w.letters()) s += x.grade().value(cfg);
    return s;
}

inline int total_kcount(const Word& w) {
    int s = 0;
    for (auto& x : w.letters()) s += x.gamma.k_count();
    return s;
}

// Spatial degree: sum of gamma_n n over the coefficient, minus n for D^(n), plus e_i for P_i.
// Every product on L0 preserves it.
inline std::vector<int> spatial_degree(const Word& w, int d) {
    std::vector<int> s(d, 0);
    for (auto& x : w.letters()) {
        for (auto& [k, m] : x.gamma.entries())
            if (k.is_n)
                for (int i = 0; i < d; ++i) s[i] += m * k.n[i];
        if (x.deriv.is_shift())
            ++s[x.deriv.i - 1];
        else
            for (int i = 0; i < d; ++i) s[i] -= x.deriv.n[i];
    }
    return s;
}

// All ways of splitting a multiset into (p, q), each split listed once.
inline std::vector<std::pair<Word, Word>> splits(const Word& m) {
    std::vector<std::pair<Word, Word>> out;
    const auto& ls = m.letters();
    std::vector<std::pair<LBasisKey, int>> groups;
    for (auto& x : ls) {
        if (!groups.empty() && groups.back().first == x)
            ++groups.back().second;
        else
            groups.push_back({x, 1});
    }
    std::vector<int> take(groups.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == groups.size()) {
            LetterSeq p, q;
            for (size_t j = 0; j < groups.size(); ++j) {
                for (int t = 0; t < take[j]; ++t) p.push_back(groups[j].first);
                for (int t = take[j]; t < groups[j].second; ++t) q.push_back(groups[j].first);
            }
            out.push_back({Word::sorted(p), Word::sorted(q)});
            return;
        }
        for (take[i] = 0; take[i] <= groups[i].second; ++take[i]) rec(i + 1);
    };
    rec(0);
    return out;
}

// Delta_star(w) from duality: scan every pair (p, q) over an alphabet whose
// grades, K-counts and spatial degrees add up to those of w, and read off <p * q, w>.
inline TensorElement dual_coproduct(const Word& w, const Config& cfg, Envelope& env) {
    TensorElement out;
    if (w.empty()) {
        out.add_term(Word{}, Word{}, 1);
        return out;
    }
    MultiIndex gsum;
    int kmax = 0;
    for (auto& x : w.letters()) {
        gsum = gsum + x.gamma;
        kmax = std::max(kmax, x.gamma.max_k());
    }
    Rational g = total_grade(w, cfg);
    int kc = total_kcount(w);
    // A letter acting on another only adds to its coefficient modulo removing some z_n with
    // |n| below the acting letter's |gamma|, so no letter of p or q exceeds |gamma sum of w|.
    Rational gmax = gsum.homogeneity().value(cfg);
    std::vector<LBasisKey> letters;
    for (auto& x : alphabet(cfg, gmax, kmax, static_cast<int>(floor_to_long(gmax))))
        if (x.grade().value(cfg) <= g && x.gamma.k_count() <= kc) letters.push_back(x);
    const Rational sw = w.symmetry_factor();
    const auto sd = spatial_degree(w, cfg.d());
    for_each_multiset(letters, cfg, g, kc, true, [&](const Word& m) {
        if (total_kcount(m) != kc || spatial_degree(m, cfg.d()) != sd) return;
        for (auto& [p, q] : splits(m)) {
            // every word of p * q is at least as long as q
            if (q.size() > w.size()) continue;
            Rational c = env.star(p, q).coeff(w);
            if (c != 0) out.add_term(p, q, c * sw / (p.symmetry_factor() * q.symmetry_factor()));
        }
    });
    return out;
}

// rho_bar of the (btr, 0) structure from the morphism property alone:
// rho_bar(x w) = rho(x) rho_bar(w) - rho_bar(x |> w), since x * w = x w + x |> w.
inline Polynomial rho_bar_btr(const Word& w, const Polynomial& p, Envelope& env) {
    if (w.empty()) return p;
    const LBasisKey& x = w.letters().front();
    Word rest = w.tail();
    Polynomial out = rho(LElement(x), rho_bar_btr(rest, p, env));
    WordElement act = env.letter_action(x, rest);
    for (auto& [v, c] : act.terms()) out -= c * rho_bar_btr(v, p, env);
    return out;
}

// Coaction contributions from a scan of every word over letters with |gamma| <= |target|
// and every beta below |target|, K-indices up to those of the target.
inline std::vector<Contribution> coaction(const MultiIndex& target, const Config& cfg, Envelope& env) {
    Rational t = target.homogeneity().value(cfg);
    std::vector<Contribution> out;
    int kmax = std::max(target.max_k(), 0);
    std::vector<LBasisKey> letters;
    for (auto& x : alphabet(cfg, t, kmax, static_cast<int>(floor_to_long(t))))
        if (x.gamma.k_count() <= target.k_count()) letters.push_back(x);
    auto betas = enumerate_below(t, cfg, kmax);
    for_each_multiset(letters, cfg, t, target.k_count(), false, [&](const Word& u) {
        for (auto& b : betas) {
            Rational c = coeff(rho_bar_btr(u, Polynomial::monomial(b), env), target);
            if (c != 0) out.push_back({u, b, c / u.symmetry_factor()});
        }
    });
    std::sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
        return std::tie(a.word, a.source) < std::tie(b.word, b.source);
    });
    return out;
}

// Brute-force enumeration of multi-indices: every exponent vector over the keys
// K(0..kmax) and N(n) with |n| <= floor(bound), filtered by homogeneity.
inline std::vector<MultiIndex> multi_indices_below(const Rational& bound, const Config& cfg, int kmax) {
    std::vector<Key> keys;
    for (int k = 0; k <= kmax; ++k) keys.push_back(Key::K(k));
    for (auto& n : vectors_up_to(cfg.d(), static_cast<int>(floor_to_long(bound)))) keys.push_back(Key::N(n));
    std::vector<MultiIndex> out;
    std::vector<MultiIndex::Entry> cur;
    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational left) {
        if (i == keys.size()) {
            out.push_back(MultiIndex(cur));
            return;
        }
        Rational h = MultiIndex::e(keys[i]).homogeneity().value(cfg);
        for (int m = 0; h * m <= left; ++m) {
            if (m) cur.push_back({keys[i], m});
            rec(i + 1, left - h * m);
            if (m) cur.pop_back();
        }
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

// The empty word, letters with |gamma| <= cutoff and the pairs of them whose
// coefficients or grades add up to at most the cutoff.
inline std::vector<Word> dual_targets(const Rational& cutoff, const Config& cfg) {
    auto letters = letters_up_to(cutoff, cfg);
    std::vector<Word> out{Word{}};
    for (auto& x : letters) out.push_back(Word::letter(x));
    for (size_t i = 0; i < letters.size(); ++i)
        for (size_t j = i; j < letters.size(); ++j)
            if ((letters[i].gamma + letters[j].gamma).homogeneity().value(cfg) <= cutoff ||
                (letters[i].grade() + letters[j].grade()).value(cfg) <= cutoff)
                out.push_back(Word::sorted({letters[i], letters[j]}));
    return out;
}

}  // namespace oracle
