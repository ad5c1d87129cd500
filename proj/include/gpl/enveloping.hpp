#pragma once

#include "gpl/postlie.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gpl {

// A sorted sequence of letters. In Sym(L) it is a multiset; in U(L) a PBW word.
class Word {
public:
    Word() = default;
    static Word sorted(std::vector<LBasisKey> letters);
    static Word letter(const LBasisKey& x) { return Word::sorted({x}); }

    const std::vector<LBasisKey>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    // m_1! m_2! ... for the multiplicities of repeated letters.
    Rational symmetry_factor() const;
    HomDegree grade() const;
    Word tail() const;

    auto operator<=>(const Word& o) const = default;
    bool operator==(const Word& o) const = default;

private:
    std::vector<LBasisKey> letters_;
};

using LetterSeq = std::vector<LBasisKey>;

// Linear combination of words.
class WordElement {
public:
    using Terms = std::map<Word, Rational>;

    WordElement() = default;
    WordElement(const Word& w, const Rational& c = 1) { add_term(w, c); }
    static WordElement unit() { return WordElement(Word{}); }
    static WordElement from_lelement(const LElement& x);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const Rational& c);
    Rational coeff(const Word& w) const;
    Rational counit() const { return coeff(Word{}); }

    WordElement& operator+=(const WordElement& o);
    WordElement& operator-=(const WordElement& o);
    WordElement& operator*=(const Rational& c);
    bool operator==(const WordElement& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

WordElement operator+(WordElement a, const WordElement& b);
WordElement operator-(WordElement a, const WordElement& b);
WordElement operator*(const Rational& c, WordElement a);

using SymWord = Word;
using PbwWord = Word;
using SymElement = WordElement;

class TensorElement {
public:
    using Terms = std::map<std::pair<Word, Word>, Rational>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& a, const Word& b, const Rational& c);
    Rational coeff(const Word& a, const Word& b) const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

// A post-Lie structure (prod, lie) on span(L0); connection is the coefficient of
// the lifted diamond inside prod, used by the representation.
struct Structure {
    std::string name;
    BilinearOp prod;
    BilinearOp lie;
    Rational connection = 0;

    // (|>, [.,.]) on U(L0), PBW words.
    static Structure jz();
    // (btr, 0) on Sym(L), commutative words.
    static Structure btr_sym();
    bool commutative() const { return lie.is_zero(); }
};

enum class RewriteStrategy { Leftmost, Rightmost };

// Rewrites xy -> yx + lie(x,y) at inversions until every word is sorted.
WordElement pbw_normal_form(const LetterSeq& word, const BilinearOp& lie,
                            RewriteStrategy strategy = RewriteStrategy::Leftmost);
WordElement pbw_normal_form(const WordElement& raw_concat, const BilinearOp& lie);

TensorElement coshuffle(const WordElement& u);
TensorElement coshuffle(const Word& w);

// Guin-Oudom extension of prod to the enveloping algebra, with the star product.
class Envelope {
public:
    explicit Envelope(Structure s);

    const Structure& structure() const { return s_; }

    // Product in the enveloping algebra (normal form of the concatenation).
    WordElement product(const WordElement& u, const WordElement& v) const;
    WordElement product(const Word& u, const Word& v) const;

    WordElement ext_action(const Word& u, const Word& v);
    WordElement ext_action(const WordElement& u, const WordElement& v);
    // Letter acting as a derivation on a word.
    WordElement letter_action(const LBasisKey& x, const Word& v);

    WordElement star(const WordElement& u, const WordElement& v);
    WordElement star(const Word& u, const Word& v) { return star(WordElement(u), WordElement(v)); }
    TensorElement star(const TensorElement& a, const TensorElement& b);

    // x_1 * ... * x_n
    WordElement phi(const LetterSeq& word);

    void clear_cache() { action_cache_.clear(); }

private:
    Structure s_;
    std::map<std::pair<Word, Word>, WordElement> action_cache_;
};

// Multiset union.
WordElement poly_star(const WordElement& u, const WordElement& v);
TensorElement poly_star(const TensorElement& a, const TensorElement& b);

// Twisted basis element u = w / sym(w) mapped to plain monomials: T(w/sym(w)) = w.
WordElement tmap(const WordElement& twisted);
// <w, w> = sym(w) on plain monomials, bilinear.
Rational pairing(const WordElement& u, const WordElement& v);
Rational pairing(const TensorElement& a, const TensorElement& b);

// Caps on candidates for the dual coproduct of a single letter.
struct TruncationParams {
    long max_len = 0;      // letters of u1 plus u2
    Rational max_gamma;    // |gamma_i| of candidate letters
    long max_n = 0;        // |n_i| of candidate letters
};

class TruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TruncationParams sound_truncation(const LBasisKey& x, const Config& cfg);
TruncationParams sound_truncation(const Word& w, const Config& cfg);

// Delta_star on plain monomials of Sym(L) for the (btr, 0) structure.
class DualCoproduct {
public:
    explicit DualCoproduct(Config cfg);

    const Config& config() const { return cfg_; }
    TensorElement operator()(const Word& w);
    TensorElement operator()(const Word& w, const TruncationParams& trunc);
    TensorElement of_letter(const LBasisKey& x);
    TensorElement of_letter(const LBasisKey& x, const TruncationParams& trunc);

    Envelope& envelope() { return env_; }

private:
    Config cfg_;
    Envelope env_;
    std::map<LBasisKey, TensorElement> letter_cache_;
};

TensorElement dual_coproduct(const Word& w, const Config& cfg);

std::string to_string(const Word& w);
std::string to_string(const WordElement& u);
std::string to_string(const TensorElement& t);
Word parse_word(std::string_view text, int d);
LetterSeq parse_letter_seq(std::string_view text, int d);

}  // namespace gpl
