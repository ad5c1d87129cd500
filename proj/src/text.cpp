#include "gpl/text.hpp"

#include <cctype>

namespace gpl {

void Cursor::advance() {
    if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
    } else {
        ++column_;
    }
    ++pos_;
}

void Cursor::skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
}

bool Cursor::at_end() {
    skip_ws();
    return pos_ >= text_.size();
}

char Cursor::peek() {
    skip_ws();
    return peek_raw();
}

bool Cursor::accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
}

bool Cursor::accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    for (size_t i = 0; i < word.size(); ++i) advance();
    return true;
}

void Cursor::expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
}

void Cursor::expect_end() {
    if (!at_end()) fail("unexpected trailing input");
}

void Cursor::fail(const std::string& what) const { throw ParseError(what, line_, column_); }

long Cursor::parse_int() {
    skip_ws();
    bool neg = false;
    if (peek_raw() == '-' || peek_raw() == '+') {
        neg = peek_raw() == '-';
        advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
        v = v * 10 + (peek_raw() - '0');
        if (v > 1000000000L) fail("integer too large");
        advance();
    }
    return neg ? -v : v;
}

long Cursor::parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected natural number");
    return parse_int();
}

bool Cursor::starts_rational() {
    char ch = peek();
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+';
}

Rational Cursor::parse_rational() {
    skip_ws();
    std::string digits;
    if (peek_raw() == '-' || peek_raw() == '+') {
        if (peek_raw() == '-') digits.push_back('-');
        advance();
        skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected rational");
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
        digits.push_back(peek_raw());
        advance();
    }
    if (peek_raw() == '/') {
        advance();
        if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected denominator");
        std::string den;
        while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
            den.push_back(peek_raw());
            advance();
        }
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        digits += "/" + den;
    }
    Rational r(digits, 10);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational r = c.parse_rational();
    c.expect_end();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

long floor_to_long(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f.get_si();
}

long ceil_to_long(const Rational& r) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f.get_si();
}

}  // namespace gpl
