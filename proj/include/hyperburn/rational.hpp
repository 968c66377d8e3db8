#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hb {

// Raised when an exact integer computation would leave the 64-bit range.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised on malformed textual input (hypergraph files, rationals, corpora).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when structured input fails a semantic check (e.g. a bad block design).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact rational number, always reduced, denominator positive.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  static Rational from_int(std::int64_t n) { return Rational{n, 1}; }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

std::int64_t floor_rat(const Rational& r);
std::int64_t ceil_rat(const Rational& r);

// Exact midpoint (a+b)/2.
Rational midpoint(const Rational& a, const Rational& b);

// "num/den" for proper fractions, plain integer otherwise.
std::string to_string(const Rational& r);

// Accepts "a/b", decimal strings like "0.4" (parsed exactly, so 0.4 -> 2/5),
// and plain integers.
Rational parse_rational(const std::string& text);

// ceil(num*count/den) in pure integer arithmetic.
std::int64_t ceil_mul(std::int64_t num, std::int64_t den, std::int64_t count);

// A proportion p strictly inside (0,1), kept in lowest terms.
class Proportion {
 public:
  Proportion(std::int64_t num, std::int64_t den);
  explicit Proportion(const Rational& r);

  static Proportion parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  Rational rational() const { return Rational{num_, den_}; }

  friend bool operator==(const Proportion& a, const Proportion& b) = default;
  friend std::strong_ordering operator<=>(const Proportion& a, const Proportion& b) {
    return a.rational() <=> b.rational();
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::string to_string(const Proportion& p);

}  // namespace hb
