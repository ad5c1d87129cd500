#include "gpl/suites.hpp"

#include "gpl/coordinates.hpp"
#include "gpl/group.hpp"
#include "gpl/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace gpl {

void SuiteResult::fail(std::string what) {
    ++failed;
    if (messages.size() < 10) messages.push_back(std::move(what));
}

void SuiteResult::merge(const SuiteResult& o) {
    checked += o.checked;
    failed += o.failed;
    for (auto& m : o.messages)
        if (messages.size() < 10) messages.push_back(m);
}

namespace {

using Op = BilinearOp;

void absorb(SuiteResult& r, const Report& rep, const std::string& tag) {
    r.checked += rep.checked;
    for (auto& f : rep.failures)
        r.fail(tag + " " + f.identity + " sample " + std::to_string(f.sample) + ": " + to_string(f.residual));
}

std::vector<Triple> triples(Sampler& s, const std::vector<LBasisKey>& pool, size_t n) {
    std::vector<Triple> out;
    for (size_t i = 0; i < n; ++i) {
        LElement x = s.element(pool), y = s.element(pool), z = s.element(pool);
        out.emplace_back(std::move(x), std::move(y), std::move(z));
    }
    return out;
}

void expect_zero(SuiteResult& r, const std::string& what, const LElement& residual) {
    ++r.checked;
    if (!residual.is_zero()) r.fail(what + ": " + to_string(residual));
}

template <class T>
void expect_equal(SuiteResult& r, const std::string& what, const T& a, const T& b) {
    ++r.checked;
    if (!(a == b)) r.fail(what + ": " + to_string(a) + " vs " + to_string(b));
}

std::vector<LBasisKey> small_L0(const Config& cfg) { return key_pool_L0(cfg, 2, 2); }

// Algebraic identities on L0 and L

SuiteResult post_lie_jz(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    absorb(r, check_post_lie(Op::triangleright(), Op::bracket(), triples(s, small_L0(cfg), n)), "jz");
    return r;
}

SuiteResult pre_lie_btr(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    absorb(r, check_pre_lie(Op::btr(), triples(s, key_pool_L(cfg, 2, 2), n)), "btr");
    return r;
}

SuiteResult l_closure_btr(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto pool = key_pool_L(cfg, 2, 2);
    for (size_t i = 0; i < n; ++i) {
        LElement x = s.element(pool), y = s.element(pool);
        LElement p = btr(x, y);
        ++r.checked;
        if (!in_L(p, cfg)) r.fail("btr(" + to_string(x) + ", " + to_string(y) + ") = " + to_string(p) + " leaves L");
    }
    return r;
}

SuiteResult derivation_compat(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    absorb(r, check_derivation_compat(triples(s, small_L0(cfg), n)), "compat");
    return r;
}

SuiteResult deformed_post_lie(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    absorb(r, check_post_lie(Op::btr(), Op::bbracket(), triples(s, small_L0(cfg), n)), "btr/bbracket");
    return r;
}

// Exhaustive over basis keys; work is split by the first argument.
SuiteResult flat_diamond(const Config& cfg, uint64_t, size_t, const Rational& cutoff) {
    auto keys = key_pool_L0(cfg, cutoff, 3);
    const size_t m = keys.size();
    std::vector<LElement> el(keys.begin(), keys.end());
    std::vector<LElement> dia(m * m), brk(m * m), tor(m * m);
    SuiteResult r;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            dia[i * m + j] = diamond_L(el[i], el[j]);
            brk[i * m + j] = bracket(el[i], el[j]);
            tor[i * m + j] = torsion(Op::diamond(), Op::bracket(), el[i], el[j]);
            expect_zero(r, "torsion(" + to_string(keys[i]) + ", " + to_string(keys[j]) + ")", tor[i * m + j]);
        }
    const Op D = Op::diamond(), B = Op::bracket();
    unsigned nt = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<SuiteResult> part(nt);
    std::atomic<size_t> next{0};
    auto work = [&](unsigned t) {
        SuiteResult& pr = part[t];
        for (size_t i; (i = next++) < m;) {
            for (size_t j = 0; j < m; ++j) {
                const LElement& xy = dia[i * m + j];
                const LElement& bxy = brk[i * m + j];
                for (size_t k = 0; k < m; ++k) {
                    const LElement& yz = dia[j * m + k];
                    const LElement& xz = dia[i * m + k];
                    LElement curv = D(el[i], yz) - D(el[j], xz) - D(bxy, el[k]);
                    LElement cov = D(el[i], tor[j * m + k]) - torsion(D, B, xy, el[k]) - torsion(D, B, el[j], xz);
                    ++pr.checked;
                    if (!curv.is_zero() || !cov.is_zero())
                        pr.fail("(" + to_string(keys[i]) + ", " + to_string(keys[j]) + ", " + to_string(keys[k]) +
                                "): curvature " + to_string(curv) + ", covariant torsion " + to_string(cov));
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
    for (auto& pr : part) r.merge(pr);
    return r;
}

SuiteResult bianchi(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    const std::pair<const char*, Op> ops[] = {
        {"diamond", Op::diamond()}, {"zero", Op::zero()}, {"bracket", Op::bracket()}};
    auto pool = small_L0(cfg);
    for (auto& [name, op] : ops)
        for (auto& [x, y, z] : triples(s, pool, n))
            expect_zero(r, std::string("bianchi ") + name, bianchi_residual(op, Op::bracket(), x, y, z));
    return r;
}

SuiteResult curvature_torsion(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    const std::pair<const char*, Op> ops[] = {{"diamond", Op::diamond()}, {"triangleright", Op::triangleright()}};
    auto pool = small_L0(cfg);
    for (auto& [name, op] : ops)
        for (auto& [x, y, z] : triples(s, pool, n)) {
            LElement rhs = associator(op, x, y, z) - associator(op, y, x, z) + op(torsion(op, Op::bracket(), x, y), z);
            expect_zero(r, std::string("curvature-torsion ") + name,
                        curvature(op, Op::bracket(), x, y, z) - rhs);
        }
    return r;
}

SuiteResult constant_torsion_leibniz(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    const Op tr = Op::triangleright(), bb = Op::bbracket();
    for (auto& [x, y, z] : triples(s, small_L0(cfg), n))
        expect_zero(r, "leibniz", tr(x, bb(y, z)) - bb(tr(x, y), z) - bb(y, tr(x, z)));
    return r;
}

SuiteResult curvature_identity(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    const Op b = Op::btr(), bb = Op::bbracket();
    for (auto& [x, y, z] : triples(s, small_L0(cfg), n))
        expect_zero(r, "curvature identity",
                    associator(b, x, y, z) - associator(b, y, x, z) - b(bb(x, y), z) -
                        curvature(Op::diamond(), Op::bracket(), x, y, z));
    return r;
}

// Enveloping algebras

struct Side {
    Structure st;
    std::vector<LBasisKey> pool;
};

std::vector<Side> sides(const Config& cfg) {
    return {{Structure::btr_sym(), key_pool_L(cfg, Rational(3, 2), 1)}, {Structure::jz(), key_pool_L0(cfg, 1, 1)}};
}

SuiteResult go_associativity(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    for (auto& [st, pool] : sides(cfg)) {
        Envelope env(st);
        for (size_t i = 0; i < n; ++i) {
            WordElement u(s.word(pool, 1, 3)), v(s.word(pool, 1, 3)), w(s.word(pool, 1, 3));
            if (!st.commutative()) {
                u = pbw_normal_form(s.sequence(pool, 1, 3), st.lie);
                v = pbw_normal_form(s.sequence(pool, 1, 3), st.lie);
                w = pbw_normal_form(s.sequence(pool, 1, 3), st.lie);
            }
            expect_equal(r, st.name + " associativity", env.star(env.star(u, v), w), env.star(u, env.star(v, w)));
        }
    }
    return r;
}

SuiteResult hopf_compat(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    for (auto& [st, pool] : sides(cfg)) {
        Envelope env(st);
        for (size_t i = 0; i < n; ++i) {
            WordElement u = pbw_normal_form(s.sequence(pool, 1, 3), st.lie);
            WordElement v = pbw_normal_form(s.sequence(pool, 1, 3), st.lie);
            ++r.checked;
            if (!(coshuffle(env.star(u, v)) == env.star(coshuffle(u), coshuffle(v))))
                r.fail(st.name + " coproduct compatibility on " + to_string(u) + ", " + to_string(v));
        }
    }
    return r;
}

SuiteResult phi_morphism(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    for (auto& [st, pool] : sides(cfg)) {
        Envelope env(st);
        Op grand = st.prod - st.prod.transposed() + st.lie;
        for (size_t i = 0; i < n; ++i) {
            LetterSeq w = s.sequence(pool, 2, 4);
            size_t cut = static_cast<size_t>(s.uniform(1, static_cast<long>(w.size()) - 1));
            LetterSeq a(w.begin(), w.begin() + cut), b(w.begin() + cut, w.end());
            expect_equal(r, st.name + " phi(ab) = phi(a) * phi(b)", env.phi(w), env.star(env.phi(a), env.phi(b)));
            // swapping adjacent letters costs the grand bracket
            size_t p = static_cast<size_t>(s.uniform(0, static_cast<long>(w.size()) - 2));
            LetterSeq sw = w;
            std::swap(sw[p], sw[p + 1]);
            WordElement lhs = env.phi(w) - env.phi(sw);
            WordElement rhs;
            LElement br = grand(LElement(w[p]), LElement(w[p + 1]));
            for (auto& [k, c] : br.terms()) {
                LetterSeq t(w.begin(), w.begin() + p);
                t.push_back(k);
                t.insert(t.end(), w.begin() + p + 2, w.end());
                rhs += c * env.phi(t);
            }
            expect_equal(r, st.name + " phi bracket relation", lhs, rhs);
        }
    }
    return r;
}

SuiteResult pbw_confluence(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto pool = key_pool_L0(cfg, 1, 2);
    for (size_t i = 0; i < n; ++i) {
        LetterSeq w = s.sequence(pool, 1, 4);
        expect_equal(r, "pbw confluence", pbw_normal_form(w, Op::bracket(), RewriteStrategy::Leftmost),
                     pbw_normal_form(w, Op::bracket(), RewriteStrategy::Rightmost));
    }
    return r;
}

// Representation

std::vector<MultiIndex> monomial_pool(const Config& cfg) {
    auto v = enumerate_below(Rational(3, 2), cfg);
    v.erase(v.begin());  // drop z^0
    return v;
}

SuiteResult rep_morphism(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto mons = monomial_pool(cfg);
    for (auto& [st, pool] : sides(cfg)) {
        Envelope env(st);
        for (size_t i = 0; i < n; ++i) {
            WordElement u = pbw_normal_form(s.sequence(pool, 1, 2), st.lie);
            WordElement v = pbw_normal_form(s.sequence(pool, 1, 2), st.lie);
            Polynomial p = Polynomial::monomial(s.monomial(mons));
            expect_equal(r, st.name + " rho_bar(u*v)", rho_bar(st, env.star(u, v), p), rho_bar(st, u, rho_bar(st, v, p)));
        }
    }
    return r;
}

std::vector<BasisDerivation> derivation_pool(const Config& cfg) { return derivation_truncation(cfg.d(), 2); }

SuiteResult psi_multiplicative(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto ds = derivation_pool(cfg);
    auto mons = monomial_pool(cfg);
    for (size_t i = 0; i < n; ++i) {
        PsiWord U;
        long len = s.uniform(1, 3);
        for (long j = 0; j < len; ++j) U.push_back(s.pick(ds));
        Polynomial b1 = Polynomial::monomial(s.monomial(mons)), b2 = Polynomial::monomial(s.monomial(mons));
        Polynomial rhs;
        for (unsigned mask = 0; mask < (1u << U.size()); ++mask) {
            PsiWord I, J;
            for (size_t j = 0; j < U.size(); ++j) ((mask >> j) & 1 ? I : J).push_back(U[j]);
            rhs += psi_apply(I, b1) * psi_apply(J, b2);
        }
        expect_equal(r, "psi multiplicativity", psi_apply(U, b1 * b2), rhs);
    }
    return r;
}

SuiteResult psi_grading(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto ds = derivation_pool(cfg);
    auto mons = monomial_pool(cfg);
    for (size_t i = 0; i < n; ++i) {
        PsiWord U;
        long len = s.uniform(1, 3);
        HomDegree deg;
        for (long j = 0; j < len; ++j) {
            U.push_back(s.pick(ds));
            deg = deg + U.back().degree();
        }
        MultiIndex g = s.monomial(mons);
        HomDegree want = g.homogeneity() + deg;
        Polynomial out = psi_apply(U, Polynomial::monomial(g));
        ++r.checked;
        bool good = want.value(cfg) >= 0 || out.is_zero();
        for (auto& [h, c] : out.terms())
            if (compare_hom(h.homogeneity(), want, cfg) != 0) good = false;
        if (!good) r.fail("psi grading on " + to_string(g) + ": " + to_string(out));
    }
    return r;
}

SuiteResult rho_lie_morphism(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto pool = key_pool_L0(cfg, 1, 2);
    auto mons = monomial_pool(cfg);
    for (size_t i = 0; i < n; ++i) {
        LElement x = s.element(pool), y = s.element(pool);
        Polynomial p = Polynomial::monomial(s.monomial(mons));
        expect_equal(r, "rho lie morphism", rho(grand_bracket(x, y), p), rho(x, rho(y, p)) - rho(y, rho(x, p)));
    }
    return r;
}

SuiteResult rho_hat_phi(const Config& cfg, uint64_t seed, size_t n, const Rational&) {
    Sampler s(seed);
    SuiteResult r;
    auto mons = monomial_pool(cfg);
    for (auto& [st, pool] : sides(cfg)) {
        Envelope env(st);
        for (size_t i = 0; i < n; ++i) {
            LetterSeq w = s.sequence(pool, 1, 3);
            Polynomial p = Polynomial::monomial(s.monomial(mons));
            expect_equal(r, st.name + " rho_hat = rho_bar o phi", rho_hat(w, p), rho_bar(st, env.phi(w), p));
        }
    }
    return r;
}

// Duality and the group

std::vector<Word> words_up_to(const std::vector<LBasisKey>& letters, size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<LBasisKey> cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (cur.size() == max_len) return;
        for (size_t i = from; i < letters.size(); ++i) {
            cur.push_back(letters[i]);
            out.push_back(Word::sorted(cur));
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

SuiteResult duality(const Config& cfg, uint64_t, size_t, const Rational& cutoff) {
    SuiteResult r;
    auto letters = key_pool_L(cfg, cutoff, 1);
    auto words = words_up_to(letters, 2);
    DualCoproduct dc(cfg);
    Envelope& env = dc.envelope();
    std::map<Word, TensorElement> cop;
    for (auto& w : words) cop.emplace(w, dc(w));
    for (auto& u : words)
        for (auto& v : words) {
            WordElement uv = env.star(u, v);
            Rational suv = u.symmetry_factor() * v.symmetry_factor();
            for (auto& w : words) {
                Rational lhs = uv.coeff(w) * w.symmetry_factor();
                Rational rhs = cop.at(w).coeff(u, v) * suv;
                ++r.checked;
                if (lhs != rhs)
                    r.fail("<" + to_string(u) + " * " + to_string(v) + ", " + to_string(w) + "> = " + to_string(lhs) +
                           " but coproduct side " + to_string(rhs));
            }
        }
    return r;
}

SuiteResult gamma_compose(const Config& cfg, uint64_t seed, size_t n, const Rational& cutoff) {
    SuiteResult r;
    DualCoproduct dc(cfg);
    auto targets = enumerate_below(cutoff, cfg);
    for (size_t i = 0; i < n; ++i) {
        Character f1 = random_character(seed * 1000 + 2 * i, cutoff, cfg);
        Character f2 = random_character(seed * 1000 + 2 * i + 1, cutoff, cfg);
        WordFunctional h = [&](const Word& w) { return convolve(f1, f2, w, dc); };
        for (auto& g : targets) {
            Polynomial lhs = gamma_apply(h, g, cfg);
            Polynomial rhs = gamma_apply(as_functional(f2), gamma_apply(as_functional(f1), Polynomial::monomial(g), cfg), cfg);
            expect_equal(r, "Gamma composition at " + to_string(g), lhs, rhs);
        }
    }
    if (cfg.d() == 2) {
        // Gamma_f(z_0^2) with only the two tilts by e_i in play
        Character f = random_character(seed, cutoff, cfg);
        MultiIndex z00 = MultiIndex::e(Key::K(0), 2);
        Polynomial want = Polynomial::monomial(z00);
        want.add_term(MultiIndex::e(Key::N({1, 0})), f.value(LBasisKey::tilt(z00, {1, 0})));
        want.add_term(MultiIndex::e(Key::N({0, 1})), f.value(LBasisKey::tilt(z00, {0, 1})));
        if (cfg.alpha() > Rational(1, 2))
            expect_equal(r, "Gamma_f(z_0^2)", gamma_apply(f, z00, cfg), want);
    }
    return r;
}

SuiteResult gamma_multiplicative(const Config& cfg, uint64_t seed, size_t n, const Rational& cutoff) {
    SuiteResult r;
    auto mons = enumerate_below(cutoff, cfg);
    for (size_t i = 0; i < n; ++i) {
        Character f = random_character(seed * 7919 + i, cutoff, cfg);
        for (auto& a : mons)
            for (auto& b : mons) {
                if (a.is_zero() || b.is_zero() || b < a) continue;
                MultiIndex ab = a + b;
                if (ab.homogeneity().value(cfg) > cutoff) continue;
                expect_equal(r, "Gamma_f(" + to_string(a) + " " + to_string(b) + ")", gamma_apply(f, ab, cfg),
                             gamma_apply(f, a, cfg) * gamma_apply(f, b, cfg));
            }
    }
    return r;
}

SuiteResult coaction_axiom(const Config& cfg, uint64_t, size_t, const Rational& cutoff) {
    SuiteResult r;
    DualCoproduct dc(cfg);
    std::map<MultiIndex, std::vector<Contribution>> memo;
    auto contrib = [&](const MultiIndex& g) -> const std::vector<Contribution>& {
        auto it = memo.find(g);
        if (it == memo.end()) it = memo.emplace(g, coaction_contributions(g, cfg)).first;
        return it->second;
    };
    for (auto& g : enumerate_below(cutoff, cfg)) {
        using K3 = std::tuple<Word, Word, MultiIndex>;
        std::map<K3, Rational> lhs, rhs;
        for (auto& c1 : contrib(g))
            for (auto& c2 : contrib(c1.source)) lhs[{c1.word, c2.word, c2.source}] += c1.coefficient * c2.coefficient;
        for (auto& c : contrib(g)) {
            TensorElement cop = dc(c.word);
            for (auto& [pq, v] : cop.terms()) rhs[{pq.first, pq.second, c.source}] += c.coefficient * v;
        }
        std::erase_if(lhs, [](auto& kv) { return kv.second == 0; });
        std::erase_if(rhs, [](auto& kv) { return kv.second == 0; });
        ++r.checked;
        if (lhs != rhs) r.fail("coaction axiom at " + to_string(g));
    }
    return r;
}

SuiteResult convolution_assoc(const Config& cfg, uint64_t seed, size_t n, const Rational& cutoff) {
    SuiteResult r;
    DualCoproduct dc(cfg);
    auto words = words_up_to(letters_up_to(cutoff, cfg), 2);
    for (size_t i = 0; i < n; ++i) {
        Character f1 = random_character(seed * 31 + 3 * i, cutoff, cfg);
        Character f2 = random_character(seed * 31 + 3 * i + 1, cutoff, cfg);
        Character f3 = random_character(seed * 31 + 3 * i + 2, cutoff, cfg);
        WordFunctional F1 = as_functional(f1), F2 = as_functional(f2), F3 = as_functional(f3);
        WordFunctional f12 = [&](const Word& w) { return convolve(F1, F2, w, dc); };
        WordFunctional f23 = [&](const Word& w) { return convolve(F2, F3, w, dc); };
        for (auto& w : words) {
            ++r.checked;
            Rational a = convolve(f12, F3, w, dc), b = convolve(F1, f23, w, dc);
            if (a != b) r.fail("convolution associativity on " + to_string(w));
        }
    }
    return r;
}

// Coordinates

SuiteResult coords(const Config& cfg, uint64_t, size_t, const Rational&) {
    SuiteResult r;
    auto index = derivation_truncation(cfg.d(), 2);
    StructureConstants sc = extract_constants(index);
    auto report = [&](const char* what, const std::vector<Violation>& v, bool want_empty) {
        ++r.checked;
        if (v.empty() != want_empty) r.fail(std::string(what) + ": " + std::to_string(v.size()) + " violations");
    };
    report("null torsion", check_null_torsion(sc), true);
    report("constant torsion", check_constant_torsion(sc), true);
    report("flat", check_flat(sc), true);

    StructureConstants lie(sc.labels());
    for (auto& [ijm, v] : sc.delta_entries()) lie.set_delta(std::get<0>(ijm), std::get<1>(ijm), std::get<2>(ijm), v);
    StructureConstants ordered = diamond_from_order(lie, shifts_first_order());
    ++r.checked;
    if (write_constants(ordered) != write_constants(sc)) r.fail("order-based diamond differs from the table");
    ++r.checked;
    if (!(read_constants(write_constants(sc)) == sc)) r.fail("constants do not round-trip through text");

    StructureConstants bad = sc;
    auto [ijm, v] = *sc.gamma_entries().begin();
    bad.set_gamma(std::get<0>(ijm), std::get<1>(ijm), std::get<2>(ijm), v + 1);
    report("mutated torsion", check_null_torsion(bad), false);
    report("mutated flatness", check_flat(bad), false);
    return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> reg = {
        {"post-lie-jz", "post-Lie axioms of (|>, [.,.]) on A (x) Der(A)", Rational(1, 2), 200, 2, post_lie_jz},
        {"pre-lie-btr", "btr is pre-Lie on L", Rational(1, 2), 200, 2, pre_lie_btr},
        {"l-closure-btr", "btr maps L x L into L", Rational(1, 2), 200, 2, l_closure_btr},
        {"derivation-compat", "x |> . is a derivation of the diamond", Rational(1, 2), 200, 2, derivation_compat},
        {"deformed-post-lie", "post-Lie axioms of the deformation (btr, bbracket)", Rational(1, 2), 200, 2,
         deformed_post_lie},
        {"flat-diamond", "diamond is flat, torsion free and of constant torsion on basis keys", Rational(3, 4), 1, 2,
         flat_diamond},
        {"bianchi", "first Bianchi identity for diamond, zero and bracket", Rational(1, 2), 200, 2, bianchi},
        {"curvature-torsion", "curvature = associator antisymmetrization + torsion term", Rational(1, 2), 200, 2,
         curvature_torsion},
        {"constant-torsion-leibniz", "x |> . is a derivation of the deformed bracket", Rational(1, 2), 200, 2,
         constant_torsion_leibniz},
        {"curvature-identity", "btr associator antisymmetrization against bbracket and curvature", Rational(1, 2), 200,
         2, curvature_identity},
        {"go-associativity", "star product associativity, both structures", Rational(1, 2), 100, 2, go_associativity},
        {"hopf-compat", "coshuffle is a morphism for the star product", Rational(1, 2), 100, 2, hopf_compat},
        {"phi-morphism", "phi respects concatenation and the grand bracket", Rational(1, 2), 50, 2, phi_morphism},
        {"pbw-confluence", "leftmost and rightmost rewriting agree", Rational(1, 2), 50, 2, pbw_confluence},
        {"rep-morphism", "rho_bar(u * v) = rho_bar(u) rho_bar(v)", Rational(1, 2), 100, 2, rep_morphism},
        {"psi-multiplicative", "Psi on products splits over subwords", Rational(1, 2), 100, 2, psi_multiplicative},
        {"psi-grading", "Psi shifts homogeneity by the word degree", Rational(1, 2), 200, 2, psi_grading},
        {"rho-lie-morphism", "rho maps the grand bracket to commutators", Rational(1, 2), 100, 2, rho_lie_morphism},
        {"rho-hat-phi", "rho_hat = rho_bar o phi", Rational(1, 2), 50, 2, rho_hat_phi},
        {"duality", "<u * v, w> = <u (x) v, Delta w>, exhaustive", Rational(1, 2), 1, 1, duality},
        {"gamma-compose", "Gamma_{f1 * f2} = Gamma_f2 o Gamma_f1", Rational(3, 4), 20, Rational(3, 2), gamma_compose},
        {"gamma-multiplicative", "Gamma_f is an algebra morphism (reported)", Rational(3, 4), 10, Rational(3, 2),
         gamma_multiplicative},
        {"coaction-axiom", "the dual of rho_bar is a coaction", Rational(3, 4), 1, Rational(3, 2), coaction_axiom},
        {"convolution-assoc", "convolution of characters is associative", Rational(3, 4), 5, Rational(3, 2),
         convolution_assoc},
        {"coords", "coordinate conditions on the truncated derivation basis", Rational(1, 2), 1, 2, coords},
    };
    return reg;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (auto& s : suite_registry())
        if (s.name == name) return &s;
    return nullptr;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    const SuiteInfo* info = find_suite(name);
    if (!info) throw std::out_of_range("unknown suite " + name);
    Config cfg(opt.d, opt.alpha.value_or(info->alpha));
    SuiteResult r = info->run(cfg, opt.seed, opt.samples.value_or(info->samples), opt.cutoff.value_or(info->cutoff));
    r.name = name;
    return r;
}

}  // namespace gpl
