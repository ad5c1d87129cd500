#include "gpl/multiindex.hpp"

#include "gpl/text.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace gpl {

Config::Config(int d, Rational alpha) : d_(d), alpha_(std::move(alpha)) {
    alpha_.canonicalize();
    if (d_ < 1) throw std::invalid_argument("dimension d must be positive");
    if (alpha_ <= 0 || alpha_ >= 1) throw std::invalid_argument("alpha must lie strictly between 0 and 1");
}

Key Key::K(int k) {
    if (k < 0) throw std::invalid_argument("K-key index must be a natural number");
    return Key{false, k, {}};
}

Key Key::N(std::vector<int> n) {
    if (n.empty()) throw DimensionError("N-key needs a dimension");
    for (int v : n)
        if (v < 0) throw std::invalid_argument("N-key entries must be natural numbers");
    if (norm1(n) == 0) throw std::invalid_argument("N-key must be a nonzero vector");
    return Key{true, 0, std::move(n)};
}

std::strong_ordering Key::operator<=>(const Key& o) const {
    if (is_n != o.is_n) return is_n ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!is_n) return k <=> o.k;
    return n <=> o.n;
}

int norm1(const std::vector<int>& n) { return std::accumulate(n.begin(), n.end(), 0); }

std::weak_ordering compare_hom(const HomDegree& h1, const HomDegree& h2, const Config& cfg) {
    // (a1-a2) p + (b1-b2) q against 0
    mpz_class s = mpz_class(h1.a - h2.a) * cfg.alpha().get_num() + mpz_class(h1.b - h2.b) * cfg.alpha().get_den();
    int sg = sgn(s);
    if (sg < 0) return std::weak_ordering::less;
    if (sg > 0) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

MultiIndex::MultiIndex(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    std::optional<size_t> dim;
    for (auto& [key, m] : entries) {
        if (key.is_n) {
            if (key.n.empty() || norm1(key.n) == 0) throw std::invalid_argument("N-key must be a nonzero vector");
            for (int v : key.n)
                if (v < 0) throw std::invalid_argument("N-key entries must be natural numbers");
            if (dim && *dim != key.n.size()) throw DimensionError("N-keys of different dimensions");
            dim = key.n.size();
        } else if (key.k < 0) {
            throw std::invalid_argument("K-key index must be a natural number");
        }
        if (m < 0) throw std::invalid_argument("negative exponent");
        if (!entries_.empty() && entries_.back().first == key) {
            entries_.back().second += m;
        } else if (m != 0) {
            entries_.emplace_back(key, m);
        }
    }
    std::erase_if(entries_, [](const Entry& x) { return x.second == 0; });
}

MultiIndex MultiIndex::e(const Key& key, int m) { return MultiIndex({{key, m}}); }

int MultiIndex::operator[](const Key& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& x, const Key& k) { return x.first < k; });
    return (it != entries_.end() && it->first == key) ? it->second : 0;
}

MultiIndex MultiIndex::shifted(const Key& key, int delta) const {
    MultiIndex r = *this;
    auto it = std::lower_bound(r.entries_.begin(), r.entries_.end(), key,
                               [](const Entry& x, const Key& k) { return x.first < k; });
    if (it != r.entries_.end() && it->first == key) {
        it->second += delta;
        if (it->second < 0) throw std::invalid_argument("negative exponent");
        if (it->second == 0) r.entries_.erase(it);
        return r;
    }
    if (delta < 0) throw std::invalid_argument("negative exponent");
    if (delta == 0) return r;
    if (key.is_n) {
        auto d = dim();
        if (d && static_cast<size_t>(*d) != key.n.size()) throw DimensionError("N-keys of different dimensions");
    }
    r.entries_.insert(it, {key, delta});
    return r;
}

bool MultiIndex::divides(const MultiIndex& other) const {
    for (auto& [key, m] : entries_)
        if (other[key] < m) return false;
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
    MultiIndex r = *this;
    for (auto& [key, m] : other.entries_) r = r.shifted(key, -m);
    return r;
}

HomDegree MultiIndex::homogeneity() const {
    HomDegree h;
    for (auto& [key, m] : entries_) {
        if (key.is_n)
            h.b += static_cast<long>(norm1(key.n)) * m;
        else
            h.a += m;
    }
    return h;
}

int MultiIndex::k_count() const {
    int c = 0;
    for (auto& [key, m] : entries_)
        if (!key.is_n) c += m;
    return c;
}

int MultiIndex::total_degree() const {
    int c = 0;
    for (auto& e : entries_) c += e.second;
    return c;
}

int MultiIndex::max_k() const {
    int r = -1;
    for (auto& [key, m] : entries_)
        if (!key.is_n) r = std::max(r, key.k);
    return r;
}

std::optional<int> MultiIndex::dim() const {
    for (auto& [key, m] : entries_)
        if (key.is_n) return static_cast<int>(key.n.size());
    return std::nullopt;
}

Rational MultiIndex::symmetry_factor() const {
    Rational f = 1;
    for (auto& e : entries_) f *= factorial(e.second);
    return f;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    HomDegree h1 = homogeneity(), h2 = o.homogeneity();
    if (auto c = h1 <=> h2; c != 0) return c;
    return entries_ <=> o.entries_;
}

MultiIndex add(const MultiIndex& g1, const MultiIndex& g2) {
    auto d1 = g1.dim(), d2 = g2.dim();
    if (d1 && d2 && *d1 != *d2) throw DimensionError("adding multi-indices of different dimensions");
    std::vector<MultiIndex::Entry> all = g1.entries();
    all.insert(all.end(), g2.entries().begin(), g2.entries().end());
    return MultiIndex(std::move(all));
}

std::vector<std::vector<int>> vectors_up_to(int d, int max_norm, int min_norm) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    for (int norm = std::max(min_norm, 0); norm <= max_norm; ++norm) {
        std::vector<std::vector<int>> level;
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == d - 1) {
                cur[pos] = left;
                level.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, norm);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<MultiIndex> enumerate_below(const Rational& bound, const Config& cfg, std::optional<int> max_k) {
    std::vector<MultiIndex> out;
    if (bound < 0) return out;
    long kcap = max_k ? *max_k : floor_to_long(bound / cfg.alpha());
    long ncap = floor_to_long(bound);
    std::vector<Key> keys;
    for (long k = 0; k <= kcap; ++k) keys.push_back(Key::K(static_cast<int>(k)));
    for (auto& n : vectors_up_to(cfg.d(), static_cast<int>(ncap))) keys.push_back(Key::N(n));

    std::vector<MultiIndex::Entry> cur;
    std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& left) {
        if (i == keys.size()) {
            out.emplace_back(cur);
            return;
        }
        rec(i + 1, left);
        Rational w = keys[i].is_n ? Rational(norm1(keys[i].n)) : cfg.alpha();
        Rational rem = left - w;
        for (int m = 1; rem >= 0; ++m, rem -= w) {
            cur.emplace_back(keys[i], m);
            rec(i + 1, rem);
            cur.pop_back();
        }
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> enumerate_below(const HomDegree& bound, const Config& cfg, std::optional<int> max_k) {
    return enumerate_below(bound.value(cfg), cfg, max_k);
}

std::string vector_to_string(const std::vector<int>& n) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    os << ')';
    return os.str();
}

std::string to_string(const Key& key) { return key.is_n ? vector_to_string(key.n) : "k" + std::to_string(key.k); }

std::string to_string(const MultiIndex& g) {
    std::string s = "{";
    bool first = true;
    for (auto& [key, m] : g.entries()) {
        if (!first) s += ",";
        first = false;
        s += to_string(key) + ":" + std::to_string(m);
    }
    return s + "}";
}

MultiIndex parse_multiindex(Cursor& c) {
    c.expect('{');
    std::vector<MultiIndex::Entry> entries;
    std::optional<size_t> dim;
    if (!c.accept('}')) {
        do {
            Key key;
            if (c.accept('k')) {
                key = Key::K(static_cast<int>(c.parse_nat()));
            } else if (c.accept('(')) {
                std::vector<int> n;
                do n.push_back(static_cast<int>(c.parse_nat()));
                while (c.accept(','));
                c.expect(')');
                if (norm1(n) == 0) c.fail("zero N-vector");
                if (dim && *dim != n.size()) c.fail("N-vectors of different dimensions");
                dim = n.size();
                key = Key::N(std::move(n));
            } else {
                c.fail("expected key 'k<int>' or '(<int>,...)'");
            }
            c.expect(':');
            long m = c.parse_nat();
            if (m == 0) c.fail("zero exponent");
            for (auto& e : entries)
                if (e.first == key) c.fail("repeated key");
            entries.emplace_back(std::move(key), static_cast<int>(m));
        } while (c.accept(','));
        c.expect('}');
    }
    return MultiIndex(std::move(entries));
}

MultiIndex parse_monomial(Cursor& c) {
    c.expect('z');
    return parse_multiindex(c);
}

MultiIndex parse_multiindex(std::string_view text) {
    Cursor c(text);
    MultiIndex g = parse_multiindex(c);
    c.expect_end();
    return g;
}

}  // namespace gpl
