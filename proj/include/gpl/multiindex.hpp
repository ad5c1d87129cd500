#pragma once

#include "gpl/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpl {

// Spatial dimension d and the exponent alpha = p/q in (0,1).
class Config {
public:
    Config(int d, Rational alpha);

    int d() const { return d_; }
    const Rational& alpha() const { return alpha_; }
    long p() const { return alpha_.get_num().get_si(); }
    long q() const { return alpha_.get_den().get_si(); }

private:
    int d_;
    Rational alpha_;
};

// Either K(k) with k >= 0, or N(n) with n a nonzero vector of naturals.
struct Key {
    bool is_n = false;
    int k = 0;
    std::vector<int> n;

    static Key K(int k);
    static Key N(std::vector<int> n);

    std::strong_ordering operator<=>(const Key& o) const;
    bool operator==(const Key& o) const = default;
};

int norm1(const std::vector<int>& n);

// a * alpha + b
struct HomDegree {
    long a = 0;
    long b = 0;

    Rational value(const Config& cfg) const { return Rational(a) * cfg.alpha() + Rational(b); }
    HomDegree operator+(const HomDegree& o) const { return {a + o.a, b + o.b}; }
    HomDegree operator-(const HomDegree& o) const { return {a - o.a, b - o.b}; }
    HomDegree operator-() const { return {-a, -b}; }
    auto operator<=>(const HomDegree&) const = default;
};

std::weak_ordering compare_hom(const HomDegree& h1, const HomDegree& h2, const Config& cfg);

class MultiIndex {
public:
    using Entry = std::pair<Key, int>;

    MultiIndex() = default;
    // Sums repeated keys, drops zero exponents, validates keys.
    explicit MultiIndex(std::vector<Entry> entries);
    static MultiIndex e(const Key& key, int m = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int operator[](const Key& key) const;

    // Adds delta to the exponent of key; throws if it would turn negative.
    MultiIndex shifted(const Key& key, int delta) const;
    bool divides(const MultiIndex& other) const;
    MultiIndex minus(const MultiIndex& other) const;

    HomDegree homogeneity() const;
    int k_count() const;
    int total_degree() const;
    int max_k() const;  // -1 when no K-key
    std::optional<int> dim() const;
    // Product of factorials of the exponents.
    Rational symmetry_factor() const;

    std::strong_ordering operator<=>(const MultiIndex& o) const;
    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

MultiIndex add(const MultiIndex& g1, const MultiIndex& g2);
inline MultiIndex operator+(const MultiIndex& g1, const MultiIndex& g2) { return add(g1, g2); }
inline HomDegree homogeneity(const MultiIndex& g) { return g.homogeneity(); }

// All multi-indices of homogeneity at most bound. The K-support is capped at
// floor(bound/alpha) unless max_k is given; every |n| is capped at floor(bound).
std::vector<MultiIndex> enumerate_below(const Rational& bound, const Config& cfg,
                                        std::optional<int> max_k = std::nullopt);
std::vector<MultiIndex> enumerate_below(const HomDegree& bound, const Config& cfg,
                                        std::optional<int> max_k = std::nullopt);

// Nonzero vectors of dimension d with 1 <= |n| <= max_norm, ordered by |n| then lexicographically.
std::vector<std::vector<int>> vectors_up_to(int d, int max_norm, int min_norm = 1);

std::string to_string(const Key& key);
std::string to_string(const MultiIndex& g);
std::string vector_to_string(const std::vector<int>& n);
MultiIndex parse_multiindex(std::string_view text);

}  // namespace gpl
