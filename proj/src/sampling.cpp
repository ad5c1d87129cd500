#include "gpl/sampling.hpp"

#include <algorithm>

namespace gpl {

std::vector<LBasisKey> key_pool_L0(const Config& cfg, const Rational& max_gamma, int max_n) {
    std::vector<LBasisKey> out;
    for (int i = 1; i <= cfg.d(); ++i) out.push_back(LBasisKey::shift(i, cfg.d()));
    auto ns = vectors_up_to(cfg.d(), max_n, 0);
    for (auto& g : enumerate_below(max_gamma, cfg))
        for (auto& n : ns) out.emplace_back(g, BasisDerivation::tilt(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LBasisKey> key_pool_L(const Config& cfg, const Rational& max_gamma, int max_n) {
    std::vector<LBasisKey> out;
    for (auto& k : key_pool_L0(cfg, max_gamma, max_n))
        if (in_L(k, cfg)) out.push_back(k);
    return out;
}

LElement Sampler::element(const std::vector<LBasisKey>& pool, int max_terms) {
    LElement x;
    long terms = uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        long c = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
        x.add_term(pick(pool), Rational(c));
    }
    if (x.is_zero()) x.add_term(pick(pool), 1);
    return x;
}

LetterSeq Sampler::sequence(const std::vector<LBasisKey>& pool, int min_len, int max_len) {
    LetterSeq s;
    long len = uniform(min_len, max_len);
    for (long i = 0; i < len; ++i) s.push_back(pick(pool));
    return s;
}

}  // namespace gpl
