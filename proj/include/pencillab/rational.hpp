#ifndef PENCILLAB_RATIONAL_HPP
#define PENCILLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pencillab {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational so the same holds for them.
using Integer = mpz_class;
using Rational = mpq_class;

/// Bad input: malformed data, failed validation. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal audit failed (an identity that must hold exactly did not).
/// Maps to CLI exit code 3.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but outside what the engine supports.
/// Maps to CLI exit code 4.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p", or a decimal integer with optional sign. Throws
/// InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

int sign(const Rational& r);

/// Least common multiple of the denominators.
Integer common_denominator(const Rational* first, const Rational* last);

}  // namespace pencillab

#endif  // PENCILLAB_RATIONAL_HPP
