#include "hyperburn/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace hb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("64-bit addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("64-bit multiplication overflow");
  return r;
}

namespace {

std::int64_t narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw CapacityError(what);
  return static_cast<std::int64_t>(v);
}

Rational reduce128(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  } else {
    den = 1;
  }
  Rational r;
  r.num = narrow(num, "rational numerator exceeds 64 bits");
  r.den = narrow(den, "rational denominator exceeds 64 bits");
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = reduce128(n, d);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduce128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduce128(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::invalid_argument("division by zero rational");
  return reduce128(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

std::int64_t floor_rat(const Rational& r) {
  std::int64_t q = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --q;
  return q;
}

std::int64_t ceil_rat(const Rational& r) {
  std::int64_t q = r.num / r.den;
  if (r.num % r.den != 0 && r.num > 0) ++q;
  return q;
}

Rational midpoint(const Rational& a, const Rational& b) {
  return reduce128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(2) * a.den * b.den);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

std::int64_t parse_int64(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed number: " + s);
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed number: " + s);
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno == ERANGE || *end != '\0') throw ParseError("number out of range: " + s);
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = parse_int64(text.substr(0, slash));
    std::int64_t d = parse_int64(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in: " + text);
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) throw ParseError("unsupported decimal: " + text);
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int64(whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale = checked_mul(scale, 10);
    std::int64_t f = parse_int64(frac);
    if (f < 0) throw ParseError("malformed decimal: " + text);
    std::int64_t n = checked_add(checked_mul(std::llabs(w), scale), f);
    if (neg || w < 0) n = -n;
    return Rational(n, scale);
  }
  return Rational(parse_int64(text), 1);
}

std::int64_t ceil_mul(std::int64_t num, std::int64_t den, std::int64_t count) {
  std::int64_t prod = checked_mul(num, count);
  std::int64_t bump = checked_add(prod, den - 1);
  return bump / den;
}

Proportion::Proportion(std::int64_t num, std::int64_t den) {
  Rational r(num, den);
  if (!(r.num > 0 && r.num < r.den)) throw std::invalid_argument("proportion must lie strictly in (0,1)");
  num_ = r.num;
  den_ = r.den;
}

Proportion::Proportion(const Rational& r) : Proportion(r.num, r.den) {}

Proportion Proportion::parse(const std::string& text) {
  Rational r = parse_rational(text);
  if (!(r.num > 0 && r.num < r.den))
    throw ParseError("proportion must lie strictly in (0,1): " + text);
  return Proportion(r);
}

std::string to_string(const Proportion& p) {
  return std::to_string(p.num()) + "/" + std::to_string(p.den());
}

}  // namespace hb
