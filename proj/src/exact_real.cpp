#include "clusterword/exact_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace clusterword {

bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

ExactReal::ExactReal(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_square_free(d)) throw std::invalid_argument("radicand must be square-free and >= 2, got " + std::to_string(d));
  normalize();
}

ExactReal ExactReal::fraction(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  return ExactReal(Rational(p, q));
}

ExactReal ExactReal::sqrt(std::int64_t d) { return ExactReal(Rational(0), Rational(1), d); }

ExactReal ExactReal::golden_conjugate() { return ExactReal(Rational(-1, 2), Rational(1, 2), 5); }

void ExactReal::normalize() {
  if (b_ == 0) d_ = 0;
}

int ExactReal::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins. They never tie
  // because d is not a rational square.
  return a_ * a_ > b_ * b_ * d_ ? sa : sb;
}

std::int64_t ExactReal::common_radicand(const ExactReal& x, const ExactReal& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw std::invalid_argument("incompatible quadratic fields sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                              std::to_string(y.d_) + ")");
}

ExactReal ExactReal::operator-() const {
  ExactReal out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) { return *this += -o; }

ExactReal& ExactReal::operator*=(const ExactReal& o) {
  const std::int64_t d = common_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  const std::int64_t d = common_radicand(*this, o);
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  ExactReal conjugate = o;
  conjugate.b_ = -conjugate.b_;
  *this *= conjugate;
  a_ /= norm;
  b_ /= norm;
  d_ = b_ == 0 ? 0 : d;
  return *this;
}

std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExactReal::approximate() const {
  double value = a_.convert_to<double>();
  if (d_ != 0) value += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
  return value;
}

namespace {

std::string rational_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool accept(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail();
  }

  Integer digits() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail();
    return Integer(text_.substr(begin, pos_ - begin));
  }

  Rational unsigned_rational() {
    Integer p = digits();
    if (!accept('/')) return Rational(p);
    Integer q = digits();
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text_ + "'");
    return Rational(p, q);
  }

  std::int64_t sqrt_radicand() {
    if (!accept("sqrt(")) fail();
    Integer d = digits();
    expect(')');
    if (d > 1'000'000'000) throw std::invalid_argument("radicand too large in '" + text_ + "'");
    return d.convert_to<std::int64_t>();
  }

  [[noreturn]] void fail() const { throw std::invalid_argument("malformed exact real '" + text_ + "'"); }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ExactReal::to_string() const {
  if (d_ == 0) return rational_string(a_);
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string coefficient = rational_string(abs(b_));
  std::string term = coefficient == "1" ? radical : coefficient + "*" + radical;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + term;
  return rational_string(a_) + (b_ < 0 ? "-" : "+") + term;
}

ExactReal parse_exact_real(const std::string& text) {
  std::string compact;
  std::copy_if(text.begin(), text.end(), std::back_inserter(compact),
               [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  Cursor in(compact);
  if (compact.empty()) in.fail();

  const bool negative = in.accept('-');
  if (in.peek('s')) {
    const std::int64_t d = in.sqrt_radicand();
    if (!in.done()) in.fail();
    return ExactReal(Rational(0), Rational(negative ? -1 : 1), d);
  }
  Rational lead = in.unsigned_rational();
  if (negative) lead = -lead;
  if (in.done()) return ExactReal(lead);
  if (in.accept('*')) {
    const std::int64_t d = in.sqrt_radicand();
    if (!in.done()) in.fail();
    return ExactReal(Rational(0), lead, d);
  }

  int sign = 0;
  if (in.accept('+')) sign = 1;
  else if (in.accept('-')) sign = -1;
  else in.fail();
  Rational coefficient(1);
  if (!in.peek('s')) {
    coefficient = in.unsigned_rational();
    in.expect('*');
  }
  const std::int64_t d = in.sqrt_radicand();
  if (!in.done()) in.fail();
  return ExactReal(lead, sign * coefficient, d);
}

}  // namespace clusterword
