#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace clusterword {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact real number a + b*sqrt(d): a rational (b == 0, reported with
/// d == 0) or an element of the real quadratic field Q(sqrt(d)) for a
/// square-free d >= 2.
///
/// Arithmetic between two irrational values requires the same radicand and
/// throws std::invalid_argument otherwise. Ordering is decided exactly from
/// the signs of a, b and a^2 - b^2 d.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(std::int64_t value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactReal(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument unless d is square-free and >= 2.
  ExactReal(Rational a, Rational b, std::int64_t d);

  static ExactReal fraction(std::int64_t p, std::int64_t q);
  static ExactReal sqrt(std::int64_t d);
  /// (sqrt(5) - 1) / 2.
  static ExactReal golden_conjugate();

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  /// 0 for rationals.
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  /// -1, 0 or +1.
  int sign() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const ExactReal& o);
  ExactReal& operator/=(const ExactReal& o);
  friend ExactReal operator+(ExactReal x, const ExactReal& y) { return x += y; }
  friend ExactReal operator-(ExactReal x, const ExactReal& y) { return x -= y; }
  friend ExactReal operator*(ExactReal x, const ExactReal& y) { return x *= y; }
  friend ExactReal operator/(ExactReal x, const ExactReal& y) { return x /= y; }

  friend bool operator==(const ExactReal& x, const ExactReal& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y);

  /// Approximation for display only; never used in decisions.
  double approximate() const;

  /// `p/q`, `a+b*sqrt(d)` or `b*sqrt(d)`.
  std::string to_string() const;

 private:
  void normalize();
  static std::int64_t common_radicand(const ExactReal& x, const ExactReal& y);

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

/// Parses the text forms accepted by the CLI:
///   rational   := ['-'] digits ['/' digits]
///   radical    := [rational '*'] 'sqrt(' digits ')'
///   exact-real := rational | radical | ['-'] radical
///               | rational ('+' | '-') radical
/// Whitespace is ignored. Throws std::invalid_argument on malformed input.
ExactReal parse_exact_real(const std::string& text);

bool is_square_free(std::int64_t d);

}  // namespace clusterword
