#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpl {

using Rational = mpq_class;

// Thrown on malformed text input; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          message_(what), line_(line), column_(column) {}
    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);
long floor_to_long(const Rational& r);
long ceil_to_long(const Rational& r);

}  // namespace gpl
