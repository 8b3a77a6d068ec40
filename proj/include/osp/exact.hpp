#ifndef OSP_EXACT_HPP
#define OSP_EXACT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace osp {

/// Arbitrary-precision rational scalar, always in canonical form:
/// positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
class Exact {
 public:
  Exact() : q_(0) {}
  Exact(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Exact(int n) : q_(n) {}                             // NOLINT(google-explicit-constructor)
  Exact(long num, long den);
  explicit Exact(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with arbitrary-size integers.
  static Exact parse(const std::string& s);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_nonneg_integer() const { return is_integer() && sgn(q_) >= 0; }
  /// Integer value; requires is_integer() and fits in long.
  long to_long() const;
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// Canonical "num/den" string; denominator always present ("3/1").
  std::string str() const;
  /// "num" when integral, "num/den" otherwise; for human-facing output.
  std::string str_short() const;

  const mpq_class& raw() const { return q_; }

  Exact operator-() const { return Exact(mpq_class(-q_)); }
  Exact& operator+=(const Exact& o) { q_ += o.q_; return *this; }
  Exact& operator-=(const Exact& o) { q_ -= o.q_; return *this; }
  Exact& operator*=(const Exact& o) { q_ *= o.q_; return *this; }
  Exact& operator/=(const Exact& o);

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }

  friend bool operator==(const Exact& a, const Exact& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Exact& a, const Exact& b) { return a.q_ != b.q_; }
  friend bool operator<(const Exact& a, const Exact& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Exact& a, const Exact& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Exact& a, const Exact& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Exact& a, const Exact& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Exact& x);

Exact abs(const Exact& x);

}  // namespace osp

#endif
