#include "gpl/representation.hpp"

#include <algorithm>
#include <functional>

namespace gpl {

Polynomial rho(const LElement& x, const Polynomial& p) {
    Polynomial out;
    for (auto& [k, c] : x.terms()) out += shift_by(apply(k.deriv, p), k.gamma) * c;
    return out;
}

Polynomial rho_hat(const LetterSeq& word, const Polynomial& p) {
    Polynomial r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = rho(LElement(*it), r);
    return r;
}

namespace {

class PsiEvaluator {
public:
    explicit PsiEvaluator(Rational connection) : conn_(std::move(connection)) {}

    Polynomial eval(const PsiWord& w, const MultiIndex& g) {
        if (w.empty()) return Polynomial::monomial(g);
        auto key = std::make_pair(w, g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        PsiWord rest(w.begin() + 1, w.end());
        Polynomial out = apply(w[0], eval(rest, g));
        if (conn_ != 0) {
            for (size_t i = 0; i < rest.size(); ++i) {
                for (auto& [D, c] : diamond_D(w[0], rest[i])) {
                    PsiWord v = rest;
                    v[i] = D;
                    out -= eval(v, g) * (c * conn_);
                }
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    Rational conn_;
    std::map<std::pair<PsiWord, MultiIndex>, Polynomial> memo_;
};

}  // namespace

Polynomial psi_apply(const PsiWord& word, const Polynomial& p, const Rational& connection) {
    PsiEvaluator ev(connection);
    Polynomial out;
    for (auto& [g, c] : p.terms()) out += ev.eval(word, g) * c;
    return out;
}

Polynomial rho_bar(const Structure& s, const LetterSeq& word, const Polynomial& p) {
    PsiWord ds;
    MultiIndex a;
    for (auto& x : word) {
        ds.push_back(x.deriv);
        a = a + x.gamma;
    }
    return shift_by(psi_apply(ds, p, s.connection), a);
}

Polynomial rho_bar(const Structure& s, const Word& word, const Polynomial& p) {
    return rho_bar(s, word.letters(), p);
}

Polynomial rho_bar(const Structure& s, const WordElement& u, const Polynomial& p) {
    Polynomial out;
    for (auto& [w, c] : u.terms()) out += rho_bar(s, w, p) * c;
    return out;
}

// Candidates: tilt letters with coefficients summing below the target, any shifts
// that keep |beta| >= 0; beta has the remaining K-count and K-indices bounded by the
// target, since no derivation changes the K-count or lowers a K-index.
std::vector<Contribution> coaction_contributions(const MultiIndex& target, const Config& cfg) {
    std::vector<Contribution> out;
    out.push_back({Word{}, target, 1});
    if (target.is_zero()) return out;
    auto gd = target.dim();
    const int d = gd ? *gd : cfg.d();
    if (d != cfg.d()) throw DimensionError("target has the wrong dimension");

    const Rational ht = target.homogeneity().value(cfg);
    const int kt = target.k_count();
    const int kmax = std::max(target.max_k(), 0);
    const Structure s = Structure::btr_sym();

    std::vector<LBasisKey> tilts;
    {
        std::vector<MultiIndex> subs;
        std::vector<MultiIndex::Entry> cur;
        const auto& es = target.entries();
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == es.size()) {
                if (!cur.empty()) subs.emplace_back(cur);
                return;
            }
            rec(i + 1);
            for (int m = 1; m <= es[i].second; ++m) {
                cur.emplace_back(es[i].first, m);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        for (auto& dl : subs) {
            Rational hd = dl.homogeneity().value(cfg);
            for (auto& n : vectors_up_to(d, floor_to_long(hd), 0)) {
                LBasisKey k(dl, BasisDerivation::tilt(n));
                if (in_L(k, cfg)) tilts.push_back(k);
            }
        }
        std::sort(tilts.begin(), tilts.end());
    }

    std::map<Rational, std::vector<MultiIndex>> below_cache;
    auto below = [&](const Rational& b) -> const std::vector<MultiIndex>& {
        auto it = below_cache.find(b);
        if (it == below_cache.end()) it = below_cache.emplace(b, enumerate_below(b, cfg, kmax)).first;
        return it->second;
    };

    std::vector<LBasisKey> u;
    std::vector<Contribution> found;
    auto try_word = [&](const MultiIndex& sum) {
        Word w = Word::sorted(u);
        Rational hb = ht - w.grade().value(cfg);
        if (hb <= 0) return;
        int kb = kt - sum.k_count();
        Rational sym = w.symmetry_factor();
        for (auto& beta : below(hb)) {
            if (beta.k_count() != kb || beta.homogeneity().value(cfg) != hb) continue;
            Rational c = coeff(rho_bar(s, w, Polynomial::monomial(beta)), target);
            if (c != 0) found.push_back({w, beta, c / sym});
        }
    };
    std::function<void(int, const MultiIndex&)> pick_shifts = [&](int from, const MultiIndex& sum) {
        if (!u.empty()) try_word(sum);
        for (int i = from; i <= d; ++i) {
            u.push_back(LBasisKey::shift(i, d));
            if (Word::sorted(u).grade().value(cfg) < ht) pick_shifts(i, sum);
            u.pop_back();
        }
    };
    std::function<void(size_t, const MultiIndex&)> pick_tilts = [&](size_t start, const MultiIndex& sum) {
        pick_shifts(1, sum);
        for (size_t t = start; t < tilts.size(); ++t) {
            MultiIndex s2 = sum + tilts[t].gamma;
            if (!s2.divides(target)) continue;
            u.push_back(tilts[t]);
            if (Word::sorted(u).grade().value(cfg) < ht) pick_tilts(t, s2);
            u.pop_back();
        }
    };
    pick_tilts(0, MultiIndex{});

    std::sort(found.begin(), found.end(), [](const Contribution& a, const Contribution& b) {
        if (a.word != b.word) return a.word < b.word;
        return a.source < b.source;
    });
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

std::string to_string(const Contribution& c) {
    return to_string(c.word) + " " + to_string(c.source) + " " + to_string(c.coefficient);
}

}  // namespace gpl
