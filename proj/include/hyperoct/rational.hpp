#pragma once

// Exact rational arithmetic and the small combinatorial primitives the rest
// of the library is written against.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperoct {

// Expression templates are disabled: `auto x = a / b;` must never capture
// references to temporaries.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// Raised when a "p/q" string cannot be parsed. `position()` is the zero-based
/// offset of the first offending character.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign(const Rational& q) { return q.sign(); }

/// q^e for a non-negative integer exponent.
inline Rational pow(Rational base, unsigned e) {
  Rational result{1};
  while (e != 0) {
    if ((e & 1U) != 0) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

inline BigInt pow(BigInt base, unsigned e) {
  BigInt result{1};
  while (e != 0) {
    if ((e & 1U) != 0) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

inline BigInt pow2(unsigned e) { return BigInt{1} << e; }

/// C(n, k), with the convention C(n, k) = 0 whenever k < 0, k > n or n < 0.
/// Orbit-sum formulas such as C(n-3, k-3) for k < 3 rely on this.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigInt{0};
  if (k > n - k) k = n - k;
  BigInt result{1};
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
inline BigInt double_factorial(std::int64_t m) {
  if (m < -1) throw std::invalid_argument("double_factorial: argument must be >= -1");
  BigInt result{1};
  for (std::int64_t i = m; i > 1; i -= 2) result *= i;
  return result;
}

/// x (x-1) ... (x-count+1).
inline Rational falling_product(const Rational& x, unsigned count) {
  Rational result{1};
  for (unsigned i = 0; i < count; ++i) result *= (x - i);
  return result;
}

inline BigInt factorial(unsigned m) {
  BigInt result{1};
  for (unsigned i = 2; i <= m; ++i) result *= i;
  return result;
}

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Parses "[+-]digits" or "[+-]digits/digits". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why, std::size_t pos) -> ParseError {
    return ParseError("malformed rational '" + std::string(text) + "' at position " +
                          std::to_string(pos) + ": " + why,
                      pos);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) {
      throw fail(std::string("expected digits for ") + what, pos);
    }
    return BigInt(std::string(text.substr(start, pos - start)));
  };
  BigInt num = read_digits("numerator");
  BigInt den{1};
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    den = read_digits("denominator");
    if (den == 0) throw fail("zero denominator", den_pos);
  }
  if (pos != text.size()) throw fail("unexpected character", pos);
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

}  // namespace hyperoct
