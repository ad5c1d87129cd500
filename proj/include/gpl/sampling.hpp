#pragma once

#include "gpl/enveloping.hpp"

#include <cstdint>
#include <random>

namespace gpl {

// Keys of L0: shifts, and z^gamma (x) D^(n) with |gamma| <= max_gamma, |n| <= max_n.
std::vector<LBasisKey> key_pool_L0(const Config& cfg, const Rational& max_gamma, int max_n);
// The subset of key_pool_L0 lying in L.
std::vector<LBasisKey> key_pool_L(const Config& cfg, const Rational& max_gamma, int max_n);

class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    uint64_t next() { return rng_(); }
    // Uniform in [lo, hi].
    long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<uint64_t>(hi - lo + 1)); }
    template <class T>
    const T& pick(const std::vector<T>& pool) {
        if (pool.empty()) throw std::invalid_argument("empty sampling pool");
        return pool[static_cast<size_t>(rng_() % pool.size())];
    }

    // 1..max_terms keys with nonzero coefficients in -3..3.
    LElement element(const std::vector<LBasisKey>& pool, int max_terms = 3);
    LetterSeq sequence(const std::vector<LBasisKey>& pool, int min_len, int max_len);
    Word word(const std::vector<LBasisKey>& pool, int min_len, int max_len) {
        return Word::sorted(sequence(pool, min_len, max_len));
    }
    MultiIndex monomial(const std::vector<MultiIndex>& pool) { return pick(pool); }

private:
    std::mt19937_64 rng_;
};

}  // namespace gpl
