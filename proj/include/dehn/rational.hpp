#pragma once

// Exact arithmetic on Q ∪ {inf}: reduced fractions together with the single
// infinite slope 1/0, plus continued-fraction expansion and evaluation.
//
// Conventions used throughout the library:
//   - finite values keep denominator > 0, the sign lives on the numerator;
//   - the infinite value is represented uniquely as 1/0;
//   - continued fractions evaluate innermost-first:
//       F([a1,...,ak]) = ak + 1/(a_{k-1} + 1/(... + 1/a1))
//   - cf_expand(-r) is the term-wise negation of cf_expand(r), so expansions
//     are odd-symmetric.
//
// Everything is arbitrary precision; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehn/parse.hpp"

namespace dehn {

using Int = boost::multiprecision::cpp_int;

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  // b > 0; cpp_int division truncates toward zero.
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace detail

class ExtendedRational {
public:
  ExtendedRational() : num_(0), den_(1) {}
  ExtendedRational(Int n) : num_(std::move(n)), den_(1) {}
  ExtendedRational(long long n) : num_(n), den_(1) {}

  // Reduces p/q; (p, 0) with p != 0 becomes the infinite value, (0, 0) is
  // rejected.
  ExtendedRational(Int p, Int q) {
    if (p == 0 && q == 0) throw std::domain_error("0/0 is not a slope");
    if (q == 0) {
      num_ = 1;
      den_ = 0;
      return;
    }
    if (q < 0) {
      p = -p;
      q = -q;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
    num_ = p / g;
    den_ = q / g;
  }

  static ExtendedRational infinity() { return ExtendedRational(Int(1), Int(0)); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0 && den_ != 0; }

  ExtendedRational operator-() const { return ExtendedRational(-num_, den_); }

  // 1/0 = inf and 1/inf = 0.
  ExtendedRational reciprocal() const { return ExtendedRational(den_, num_); }

  ExtendedRational operator+(const ExtendedRational& o) const {
    if (is_infinite() || o.is_infinite()) {
      if (is_infinite() && o.is_infinite())
        throw std::domain_error("inf + inf is undefined");
      return infinity();
    }
    return ExtendedRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  ExtendedRational operator-(const ExtendedRational& o) const { return *this + (-o); }

  ExtendedRational operator*(const ExtendedRational& o) const {
    if (is_infinite() || o.is_infinite()) {
      if (is_zero() || o.is_zero()) throw std::domain_error("0 * inf is undefined");
      return infinity();
    }
    return ExtendedRational(num_ * o.num_, den_ * o.den_);
  }

  ExtendedRational operator/(const ExtendedRational& o) const {
    return *this * o.reciprocal();
  }

  bool operator==(const ExtendedRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Ordering is defined for finite values only.
  std::strong_ordering operator<=>(const ExtendedRational& o) const {
    if (is_infinite() || o.is_infinite()) {
      if (*this == o) return std::strong_ordering::equal;
      throw std::domain_error("the infinite slope is not ordered");
    }
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Int floor() const {
    if (is_infinite()) throw std::domain_error("floor of the infinite slope");
    return detail::floor_div(num_, den_);
  }

  Int ceil() const { return -(-*this).floor(); }

  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

private:
  Int num_;
  Int den_;
};

// Spec-level constructor name: reduce(p, q).
inline ExtendedRational reduce(Int p, Int q) {
  return ExtendedRational(std::move(p), std::move(q));
}

inline std::string to_string(const ExtendedRational& r) { return r.to_string(); }

// Finite continued fraction [a1,...,ak], innermost term first.
struct ContinuedFraction {
  std::vector<Int> terms;

  bool operator==(const ContinuedFraction&) const = default;
};

// Exact evaluation of F; may return the infinite value.  The empty list
// evaluates to inf, the anchor of the recursion F(list + [a]) = a + 1/F(list).
inline ExtendedRational cf_value(const ContinuedFraction& cf) {
  ExtendedRational v = ExtendedRational::infinity();
  for (const Int& a : cf.terms) v = ExtendedRational(a) + v.reciprocal();
  return v;
}

// Canonical expansion: the Euclidean scheme for r >= 0, term-wise negation
// for r < 0.  All terms except possibly the outermost (last) are nonzero.
inline ContinuedFraction cf_expand(const ExtendedRational& r) {
  if (r.is_infinite())
    throw std::domain_error("cf_expand is defined for finite slopes only");
  bool negate = r.is_negative();
  Int p = negate ? -r.num() : r.num();
  Int q = r.den();
  std::vector<Int> outer;  // outermost quotient first
  for (;;) {
    Int a = p / q;  // p, q >= 0 here, so truncation = floor
    outer.push_back(a);
    Int rem = p - a * q;
    if (rem == 0) break;
    p = q;
    q = rem;
  }
  ContinuedFraction cf;
  cf.terms.assign(outer.rbegin(), outer.rend());
  if (negate)
    for (Int& t : cf.terms) t = -t;
  return cf;
}

inline std::string to_string(const ContinuedFraction& cf) {
  std::string s = "[";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i) s += ",";
    s += cf.terms[i].str();
  }
  return s + "]";
}

namespace detail {

inline Int parse_int(Cursor& c) {
  c.skip_ws();
  std::string digits;
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.peek() == '-') digits += '-';
    c.advance();
  }
  if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected integer");
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    digits += c.peek();
    c.advance();
  }
  return Int(digits);
}

// "p/q", a bare integer, or "inf".
inline ExtendedRational parse_rational(Cursor& c) {
  c.skip_ws();
  if (c.try_eat_word("inf")) return ExtendedRational::infinity();
  Int p = parse_int(c);
  if (c.try_eat('/')) {
    Int q = parse_int(c);
    if (p == 0 && q == 0) c.fail("0/0 is not a slope");
    return ExtendedRational(std::move(p), std::move(q));
  }
  return ExtendedRational(std::move(p));
}

}  // namespace detail

inline ExtendedRational parse_rational(std::string_view text) {
  detail::Cursor c(text);
  ExtendedRational r = detail::parse_rational(c);
  c.expect_end();
  return r;
}

inline Int parse_integer(std::string_view text) {
  detail::Cursor c(text);
  Int n = detail::parse_int(c);
  c.expect_end();
  return n;
}

// "[a1,a2,...]"
inline ContinuedFraction parse_continued_fraction(std::string_view text) {
  detail::Cursor c(text);
  c.skip_ws();
  c.expect('[');
  ContinuedFraction cf;
  c.skip_ws();
  if (!c.try_eat(']')) {
    for (;;) {
      cf.terms.push_back(detail::parse_int(c));
      c.skip_ws();
      if (c.try_eat(']')) break;
      c.expect(',');
    }
  }
  c.expect_end();
  return cf;
}

}  // namespace dehn
