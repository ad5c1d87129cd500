#pragma once

// Cursor-level parsing shared by the module grammars.

#include "gpl/rational.hpp"

#include <string>
#include <string_view>

namespace gpl {

class Cursor {
public:
    explicit Cursor(std::string_view text, int line = 1, int column = 1)
        : text_(text), line_(line), column_(column) {}

    void skip_ws();
    bool at_end();
    char peek();  // '\0' at end; skips whitespace first
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool accept(char c);
    bool accept(std::string_view word);
    void expect(char c);
    void expect_end();

    long parse_int();
    long parse_nat();
    // Integer or p/q, optional leading sign.
    Rational parse_rational();
    bool starts_rational();

    [[noreturn]] void fail(const std::string& what) const;

    size_t pos() const { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }

private:
    void advance();

    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    int column_;
};

class MultiIndex;
class Polynomial;
struct BasisDerivation;
struct LBasisKey;
class LElement;

MultiIndex parse_multiindex(Cursor& c);
// Parses "z{...}"; the leading 'z' is required.
MultiIndex parse_monomial(Cursor& c);
Polynomial parse_polynomial(Cursor& c);
BasisDerivation parse_derivation(Cursor& c, int d);
LBasisKey parse_letter(Cursor& c, int d);
LElement parse_lelement(Cursor& c, int d);

}  // namespace gpl
