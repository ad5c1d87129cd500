#include "gpl/enveloping.hpp"

#include "gpl/text.hpp"

#include <algorithm>
#include <functional>

namespace gpl {

// Word

Word Word::sorted(std::vector<LBasisKey> letters) {
    std::sort(letters.begin(), letters.end());
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

Rational Word::symmetry_factor() const {
    Rational f = 1;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        f *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return f;
}

HomDegree Word::grade() const {
    HomDegree h;
    for (auto& x : letters_) h = h + x.grade();
    return h;
}

Word Word::tail() const {
    Word w;
    w.letters_.assign(letters_.begin() + 1, letters_.end());
    return w;
}

// WordElement

WordElement WordElement::from_lelement(const LElement& x) {
    WordElement out;
    for (auto& [k, c] : x.terms()) out.add_term(Word::letter(k), c);
    return out;
}

void WordElement::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
    }
}

Rational WordElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

WordElement& WordElement::operator+=(const WordElement& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

WordElement& WordElement::operator-=(const WordElement& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

WordElement& WordElement::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& t : terms_) t.second *= c;
    return *this;
}

WordElement operator+(WordElement a, const WordElement& b) { return a += b; }
WordElement operator-(WordElement a, const WordElement& b) { return a -= b; }
WordElement operator*(const Rational& c, WordElement a) { return a *= c; }

// TensorElement

void TensorElement::add_term(const Word& a, const Word& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        it->second.canonicalize();
    }
}

Rational TensorElement::coeff(const Word& a, const Word& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, -c);
    return *this;
}

// Structures

Structure Structure::jz() { return {"jz", BilinearOp::triangleright(), BilinearOp::bracket(), 0}; }

Structure Structure::btr_sym() { return {"btr", BilinearOp::btr(), BilinearOp::zero(), 1}; }

// PBW normal form

WordElement pbw_normal_form(const LetterSeq& word, const BilinearOp& lie, RewriteStrategy strategy) {
    WordElement out;
    if (lie.is_zero()) {
        out.add_term(Word::sorted(word), 1);
        return out;
    }
    std::map<LetterSeq, Rational> work;
    work[word] = 1;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const LetterSeq& s = node.key();
        const Rational& c = node.mapped();
        long inv = -1;
        if (strategy == RewriteStrategy::Leftmost) {
            for (size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i + 1] < s[i]) {
                    inv = static_cast<long>(i);
                    break;
                }
        } else {
            for (size_t i = s.size(); i-- > 1;)
                if (s[i] < s[i - 1]) {
                    inv = static_cast<long>(i - 1);
                    break;
                }
        }
        if (inv < 0) {
            out.add_term(Word::sorted(s), c);
            continue;
        }
        auto bump = [&](LetterSeq t, const Rational& v) {
            if (v == 0) return;
            Rational& slot = work[std::move(t)];
            slot += v;
        };
        LetterSeq swapped = s;
        std::swap(swapped[inv], swapped[inv + 1]);
        bump(swapped, c);
        LElement l = lie(LElement(s[inv]), LElement(s[inv + 1]));
        for (auto& [k, ck] : l.terms()) {
            LetterSeq t;
            t.reserve(s.size() - 1);
            t.insert(t.end(), s.begin(), s.begin() + inv);
            t.push_back(k);
            t.insert(t.end(), s.begin() + inv + 2, s.end());
            bump(std::move(t), c * ck);
        }
        std::erase_if(work, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

WordElement pbw_normal_form(const WordElement& raw, const BilinearOp& lie) {
    WordElement out;
    for (auto& [w, c] : raw.terms()) out += c * pbw_normal_form(w.letters(), lie);
    return out;
}

// Coshuffle

TensorElement coshuffle(const Word& w) {
    TensorElement out;
    size_t n = w.size();
    if (n > 20) throw std::length_error("word too long for coshuffle");
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<LBasisKey> a, b;
        for (size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(w.letters()[i]);
        // subsequences of a sorted word stay sorted
        out.add_term(Word::sorted(std::move(a)), Word::sorted(std::move(b)), 1);
    }
    return out;
}

TensorElement coshuffle(const WordElement& u) {
    TensorElement out;
    for (auto& [w, c] : u.terms()) {
        TensorElement cs = coshuffle(w);
        for (auto& [ab, v] : cs.terms()) out.add_term(ab.first, ab.second, c * v);
    }
    return out;
}

// Envelope

Envelope::Envelope(Structure s) : s_(std::move(s)) {}

WordElement Envelope::product(const Word& u, const Word& v) const {
    LetterSeq cat = u.letters();
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return pbw_normal_form(cat, s_.lie);
}

WordElement Envelope::product(const WordElement& u, const WordElement& v) const {
    WordElement out;
    for (auto& [a, ca] : u.terms())
        for (auto& [b, cb] : v.terms()) out += (ca * cb) * product(a, b);
    return out;
}

WordElement Envelope::letter_action(const LBasisKey& x, const Word& v) { return ext_action(Word::letter(x), v); }

WordElement Envelope::ext_action(const Word& u, const Word& v) {
    if (u.empty()) return WordElement(v);
    if (v.empty()) return {};
    auto key = std::make_pair(u, v);
    if (auto it = action_cache_.find(key); it != action_cache_.end()) return it->second;

    WordElement out;
    if (u.size() == 1) {
        // x acts as a derivation of the product
        const LBasisKey& x = u.letters()[0];
        const auto& vs = v.letters();
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i > 0 && vs[i] == vs[i - 1] && s_.commutative()) continue;
            LElement p = s_.prod(LElement(x), LElement(vs[i]));
            if (p.is_zero()) continue;
            // repeated letters in a commutative word act identically
            Rational mult = 1;
            if (s_.commutative()) {
                size_t j = i;
                while (j < vs.size() && vs[j] == vs[i]) ++j;
                mult = Rational(static_cast<long>(j - i));
            }
            for (auto& [k, ck] : p.terms()) {
                LetterSeq t;
                t.reserve(vs.size());
                t.insert(t.end(), vs.begin(), vs.begin() + i);
                t.push_back(k);
                t.insert(t.end(), vs.begin() + i + 1, vs.end());
                out += (mult * ck) * pbw_normal_form(t, s_.lie);
            }
        }
    } else {
        // (x u') |> v = x |> (u' |> v) - (x |> u') |> v
        const LBasisKey& x = u.letters()[0];
        Word xw = Word::letter(x);
        Word rest = u.tail();
        WordElement inner = ext_action(rest, v);
        for (auto& [w, c] : inner.terms()) out += c * ext_action(xw, w);
        WordElement head = ext_action(xw, rest);
        for (auto& [w, c] : head.terms()) out -= c * ext_action(w, v);
    }
    action_cache_.emplace(std::move(key), out);
    return out;
}

WordElement Envelope::ext_action(const WordElement& u, const WordElement& v) {
    WordElement out;
    for (auto& [a, ca] : u.terms())
        for (auto& [b, cb] : v.terms()) out += (ca * cb) * ext_action(a, b);
    return out;
}

WordElement Envelope::star(const WordElement& u, const WordElement& v) {
    WordElement out;
    TensorElement cs = coshuffle(u);
    for (auto& [ab, c] : cs.terms()) {
        WordElement acted = ext_action(WordElement(ab.second), v);
        if (acted.is_zero()) continue;
        out += c * product(WordElement(ab.first), acted);
    }
    return out;
}

TensorElement Envelope::star(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (auto& [p, cp] : a.terms())
        for (auto& [q, cq] : b.terms()) {
            WordElement l = star(p.first, q.first);
            if (l.is_zero()) continue;
            WordElement r = star(p.second, q.second);
            for (auto& [wl, cl] : l.terms())
                for (auto& [wr, cr] : r.terms()) out.add_term(wl, wr, cp * cq * cl * cr);
        }
    return out;
}

WordElement Envelope::phi(const LetterSeq& word) {
    WordElement r = WordElement::unit();
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = star(WordElement(Word::letter(*it)), r);
    return r;
}

// Polynomial product and pairing on Sym(L)

namespace {

Word merge(const Word& a, const Word& b) {
    std::vector<LBasisKey> all = a.letters();
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return Word::sorted(std::move(all));
}

}  // namespace

WordElement poly_star(const WordElement& u, const WordElement& v) {
    WordElement out;
    for (auto& [a, ca] : u.terms())
        for (auto& [b, cb] : v.terms()) out.add_term(merge(a, b), ca * cb);
    return out;
}

TensorElement poly_star(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (auto& [p, cp] : a.terms())
        for (auto& [q, cq] : b.terms()) out.add_term(merge(p.first, q.first), merge(p.second, q.second), cp * cq);
    return out;
}

WordElement tmap(const WordElement& twisted) {
    WordElement out;
    for (auto& [w, c] : twisted.terms()) out.add_term(w, c * w.symmetry_factor());
    return out;
}

Rational pairing(const WordElement& u, const WordElement& v) {
    Rational s = 0;
    for (auto& [w, c] : u.terms()) {
        Rational d = v.coeff(w);
        if (d != 0) s += c * d * w.symmetry_factor();
    }
    return s;
}

Rational pairing(const TensorElement& a, const TensorElement& b) {
    Rational s = 0;
    for (auto& [pq, c] : a.terms()) {
        Rational d = b.coeff(pq.first, pq.second);
        if (d != 0) s += c * d * pq.first.symmetry_factor() * pq.second.symmetry_factor();
    }
    return s;
}

// Dual coproduct

TruncationParams sound_truncation(const LBasisKey& x, const Config& cfg) {
    TruncationParams t;
    Rational g = x.grade().value(cfg);
    long base_len = ceil_to_long(g / cfg.alpha());
    long count_len = x.gamma.k_count() + floor_to_long(g);
    t.max_len = std::max({base_len, count_len, 1L});
    long nx = x.deriv.is_tilt() ? norm1(x.deriv.n) : 0;
    t.max_gamma = x.gamma.homogeneity().value(cfg) + Rational(t.max_len * (nx + t.max_len));
    t.max_n = nx + t.max_len;
    return t;
}

TruncationParams sound_truncation(const Word& w, const Config& cfg) {
    TruncationParams t{1, Rational(0), 0};
    for (auto& x : w.letters()) {
        TruncationParams s = sound_truncation(x, cfg);
        t.max_len = std::max(t.max_len, s.max_len);
        t.max_gamma = std::max(t.max_gamma, s.max_gamma);
        t.max_n = std::max(t.max_n, s.max_n);
    }
    return t;
}

DualCoproduct::DualCoproduct(Config cfg) : cfg_(std::move(cfg)), env_(Structure::btr_sym()) {}

namespace {

void require_sound(const TruncationParams& t, const TruncationParams& def) {
    if (t.max_len < def.max_len || t.max_gamma < def.max_gamma || t.max_n < def.max_n)
        throw TruncationError("truncation below the sound default");
}

// Nonzero proper-or-equal sub-multi-indices of g.
std::vector<MultiIndex> sub_multiindices(const MultiIndex& g) {
    std::vector<MultiIndex> out;
    std::vector<MultiIndex::Entry> cur;
    const auto& es = g.entries();
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == es.size()) {
            if (!cur.empty()) out.emplace_back(cur);
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
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TensorElement DualCoproduct::of_letter(const LBasisKey& x) { return of_letter(x, sound_truncation(x, cfg_)); }

TensorElement DualCoproduct::of_letter(const LBasisKey& x, const TruncationParams& trunc) {
    if (!in_L(x, cfg_)) throw std::invalid_argument("dual coproduct needs letters of L: " + to_string(x));
    TruncationParams def = sound_truncation(x, cfg_);
    require_sound(trunc, def);
    if (auto it = letter_cache_.find(x); it != letter_cache_.end()) return it->second;

    TensorElement out;
    Word xw = Word::letter(x);
    out.add_term(xw, Word{}, 1);
    out.add_term(Word{}, xw, 1);
    if (x.deriv.is_shift()) {
        letter_cache_.emplace(x, out);
        return out;
    }

    const int d = cfg_.d();
    const Rational g = x.grade().value(cfg_);
    const MultiIndex& gx = x.gamma;
    const std::vector<int>& nx = x.deriv.n;
    const int kx = gx.k_count();
    const int kmax = gx.max_k();
    const long max_len = std::min(trunc.max_len, def.max_len);

    // tilt letters whose coefficient divides gamma_x
    std::vector<LBasisKey> tilts;
    for (auto& dl : sub_multiindices(gx)) {
        Rational hd = dl.homogeneity().value(cfg_);
        if (hd > trunc.max_gamma) continue;
        for (auto& n : vectors_up_to(d, static_cast<int>(std::min<long>(trunc.max_n, floor_to_long(hd))), 0)) {
            LBasisKey k(dl, BasisDerivation::tilt(n));
            if (in_L(k, cfg_) && k.grade().value(cfg_) < g) tilts.push_back(k);
        }
    }
    std::sort(tilts.begin(), tilts.end());

    std::map<Rational, std::vector<MultiIndex>> below_cache;
    auto below = [&](const Rational& b) -> const std::vector<MultiIndex>& {
        auto it = below_cache.find(b);
        if (it == below_cache.end()) it = below_cache.emplace(b, enumerate_below(b, cfg_, std::max(kmax, 0))).first;
        return it->second;
    };

    std::vector<LBasisKey> u1;
    auto try_y = [&](MultiIndex sum_gamma, int shifts) {
        Rational gu = Word::sorted(u1).grade().value(cfg_);
        Rational gy = g - gu;
        if (gy <= 0) return;
        int ky = kx - sum_gamma.k_count();
        Word uw = Word::sorted(u1);
        Rational sym = uw.symmetry_factor();
        // n_y >= n_x with at most `shifts` extra units
        for (auto& extra : vectors_up_to(d, shifts, 0)) {
            std::vector<int> ny = nx;
            for (int i = 0; i < d; ++i) ny[i] += extra[i];
            if (norm1(ny) > trunc.max_n) continue;
            Rational hy = gy + Rational(norm1(ny));
            if (hy > trunc.max_gamma) continue;
            for (auto& gyi : below(hy)) {
                if (gyi.homogeneity().value(cfg_) != hy || gyi.k_count() != ky) continue;
                LBasisKey y(gyi, BasisDerivation::tilt(ny));
                Rational c = env_.ext_action(uw, Word::letter(y)).coeff(xw);
                if (c != 0) out.add_term(uw, Word::letter(y), c / sym);
            }
        }
    };

    // u1 = (multiset of tilts) + (multiset of shifts)
    std::function<void(size_t, MultiIndex, int)> pick_shifts;
    std::function<void(size_t, MultiIndex)> pick_tilts = [&](size_t start, MultiIndex sum) {
        pick_shifts(1, sum, 0);
        if (static_cast<long>(u1.size()) + 1 >= max_len) return;
        for (size_t t = start; t < tilts.size(); ++t) {
            MultiIndex s2 = sum + tilts[t].gamma;
            if (!s2.divides(gx)) continue;
            u1.push_back(tilts[t]);
            if (Word::sorted(u1).grade().value(cfg_) < g) pick_tilts(t, s2);
            u1.pop_back();
        }
    };
    pick_shifts = [&](size_t from, MultiIndex sum, int shifts) {
        if (!u1.empty()) try_y(sum, shifts);
        if (static_cast<long>(u1.size()) + 1 >= max_len) return;
        for (int i = static_cast<int>(from); i <= d; ++i) {
            u1.push_back(LBasisKey::shift(i, d));
            if (Word::sorted(u1).grade().value(cfg_) < g) pick_shifts(i, sum, shifts + 1);
            u1.pop_back();
        }
    };
    pick_tilts(0, MultiIndex{});

    letter_cache_.emplace(x, out);
    return out;
}

TensorElement DualCoproduct::operator()(const Word& w) { return (*this)(w, sound_truncation(w, cfg_)); }

TensorElement DualCoproduct::operator()(const Word& w, const TruncationParams& trunc) {
    TensorElement out;
    out.add_term(Word{}, Word{}, 1);
    for (auto& x : w.letters()) out = poly_star(out, of_letter(x, trunc));
    return out;
}

TensorElement dual_coproduct(const Word& w, const Config& cfg) {
    DualCoproduct dc(cfg);
    return dc(w);
}

// Text

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (auto& x : w.letters()) s += "[" + to_string(x) + "]";
    return s;
}

std::string to_string(const WordElement& u) {
    std::vector<std::pair<Rational, std::string>> terms;
    for (auto& [w, c] : u.terms()) terms.emplace_back(c, w.empty() ? "" : to_string(w));
    return join_signed(terms);
}

std::string to_string(const TensorElement& t) {
    std::string s;
    for (auto& [ab, c] : t.terms()) s += to_string(c) + " " + to_string(ab.first) + " (x) " + to_string(ab.second) + "\n";
    return s;
}

LetterSeq parse_letter_seq(std::string_view text, int d) {
    Cursor c(text);
    LetterSeq out;
    if (c.accept('1')) {
        c.expect_end();
        return out;
    }
    while (c.accept('[')) {
        out.push_back(parse_letter(c, d));
        c.expect(']');
    }
    c.expect_end();
    return out;
}

Word parse_word(std::string_view text, int d) { return Word::sorted(parse_letter_seq(text, d)); }

}  // namespace gpl
