#pragma once

#include <gmpxx.h>

#include <string>

namespace ualg {

/// Value of an ultranorm: either 0 or p^(-q) with q an exact rational
/// exponent. Rational exponents are needed because ramified quadratic
/// extensions have value group (1/2)Z. Keeping the exponent symbolic avoids
/// floating point entirely.
class PNorm {
 public:
  /// The zero norm (norm of the zero element).
  PNorm() : zero_(true), q_(0) {}

  /// p^(-q).
  explicit PNorm(mpq_class q) : zero_(false), q_(std::move(q)) {
    q_.canonicalize();
  }
  static PNorm from_valuation(long v) { return PNorm(mpq_class(v)); }
  static PNorm one() { return PNorm(mpq_class(0)); }

  bool is_zero() const { return zero_; }
  /// Exponent q in p^(-q); only meaningful when !is_zero().
  const mpq_class& exponent() const { return q_; }

  PNorm operator*(const PNorm& o) const {
    if (zero_ || o.zero_) return PNorm();
    return PNorm(q_ + o.q_);
  }

  /// |x|^e for an integer exponent e (e may be negative for nonzero norms).
  PNorm pow(long e) const {
    if (zero_) return PNorm();
    return PNorm(q_ * e);
  }

  /// Square root of the norm value (exponent halves).
  PNorm sqrt() const {
    if (zero_) return PNorm();
    return PNorm(q_ / 2);
  }

  friend bool operator==(const PNorm& a, const PNorm& b) {
    if (a.zero_ != b.zero_) return false;
    return a.zero_ || a.q_ == b.q_;
  }
  friend bool operator!=(const PNorm& a, const PNorm& b) { return !(a == b); }

  // Norm order: 0 is smallest; p^(-q1) < p^(-q2) iff q1 > q2.
  friend bool operator<(const PNorm& a, const PNorm& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.q_ > b.q_;
  }
  friend bool operator<=(const PNorm& a, const PNorm& b) {
    return a < b || a == b;
  }
  friend bool operator>(const PNorm& a, const PNorm& b) { return b < a; }
  friend bool operator>=(const PNorm& a, const PNorm& b) { return b <= a; }

  friend const PNorm& max(const PNorm& a, const PNorm& b) {
    return a < b ? b : a;
  }

  /// Rendering like "7^-2", "1", "5^(3/2)" or "0".
  std::string str(long p) const;

 private:
  bool zero_;
  mpq_class q_;
};

}  // namespace ualg
