#pragma once

#include <gmpxx.h>

#include <string>

#include "ualg/errors.hpp"
#include "ualg/pnorm.hpp"

namespace ualg {

/// Precision context for one p-adic coefficient domain: an odd prime p,
/// a working precision of N significant digits and a guard threshold.
/// Arithmetic that cannot keep at least `guard` significant digits (or,
/// for cancellations, absolute precision N - guard) raises
/// PrecisionExhausted instead of returning silently degraded values.
struct PadicCtx {
  long p;
  int prec;   // N, significant p-adic digits for fresh values
  int guard;  // minimum acceptable significant digits

  PadicCtx(long p_, int prec_ = 32, int guard_ = 8);

  mpz_class pow(long k) const;  // p^k, k >= 0

  bool operator==(const PadicCtx& o) const {
    return p == o.p && prec == o.prec && guard == o.guard;
  }
};

/// Element of Q_p in capped-relative representation:
///   nonzero:  p^val * unit, with unit invertible mod p and known mod p^rel,
///             1 <= rel <= N;
///   zero:     unit == 0. Exact zeros carry unbounded absolute precision,
///             inexact zeros (results of full cancellation) remember the
///             absolute precision p^abs below which nothing is known.
///
/// Norms are p^(-val), so |p| = 1/p. Valuations are unbounded; only the
/// digit window is capped.
class Padic {
 public:
  Padic() : ctx_(nullptr) {}  // unusable placeholder

  static Padic zero(const PadicCtx& c) { return Padic(&c, true, kExactZero); }
  static Padic from_long(const PadicCtx& c, long v);
  static Padic from_mpz(const PadicCtx& c, const mpz_class& v);
  /// num/den with den not divisible by... den may carry p-powers; they move
  /// into the valuation.
  static Padic from_rational(const PadicCtx& c, const mpz_class& num,
                             const mpz_class& den);
  /// p^val * unit at full working precision (unit must be prime to p).
  static Padic from_unit_val(const PadicCtx& c, const mpz_class& unit,
                             long val);

  const PadicCtx& ctx() const { return *ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  /// True for exact and inexact zeros (i.e. zero at working precision).
  bool is_zero() const { return unit_ == 0; }
  bool is_exact_zero() const { return is_zero() && val_ == kExactZero; }

  /// Valuation of a nonzero element.
  long valuation() const;
  /// Significant digits of a nonzero element.
  int rel_prec() const;
  /// Exponent a such that the value is known modulo p^a.
  long abs_prec() const;
  /// Unit part (nonzero element), a canonical representative in
  /// [1, p^rel_prec) prime to p.
  const mpz_class& unit() const { return unit_; }

  PNorm norm() const;
  /// Residue of an integral element modulo p, in [0, p).
  long residue_mod_p() const;
  /// True if valuation >= 0 (integral at working precision).
  bool is_integral() const { return is_zero() || val_ >= 0; }

  Padic operator-() const;
  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator*(const Padic& o) const;
  Padic operator/(const Padic& o) const;
  Padic inverse() const;

  /// Multiplication by p^k (exact valuation shift).
  Padic shift(long k) const;

  /// Congruence x == y (mod p^k) for integral x, y.
  bool congruent_mod(const Padic& o, long k) const;

  /// Equality at working precision: (a-b).is_zero().
  bool eq(const Padic& o) const { return (*this - o).is_zero(); }

  /// Canonical "p^v*u" display; zeros print "0".
  std::string str() const;
  /// Exact decimal string when the element is a p-adic integer that fits the
  /// window as a plain integer, else the p^v*u form. Used by reports.
  std::string report_str() const;

 private:
  static constexpr long kExactZero = LONG_MAX / 4;

  Padic(const PadicCtx* c, bool, long absPrec)
      : ctx_(c), unit_(0), val_(absPrec), rel_(0) {}
  Padic(const PadicCtx* c, mpz_class unit, long val, int rel);

  /// Normalizes a candidate (value mod p^(absPrec-val) scale) after +/-.
  static Padic make_checked(const PadicCtx& c, mpz_class mantissa, long base,
                            long absPrec);

  const PadicCtx* ctx_;
  mpz_class unit_;  // 0 for zeros
  long val_;        // valuation; for zeros: absolute precision bound
  int rel_;         // significant digits (0 for zeros)
};

/// Deterministic square root via Hensel/Newton lifting. Returns the root
/// whose unit residue mod p is the smaller of the two representatives.
/// Errors: OddValuation, NonResidue, DivisionByZero (a = 0).
Padic hensel_sqrt(const Padic& a);

/// Legendre symbol helper: true iff u is a nonzero quadratic residue mod p.
bool is_quadratic_residue(long u, long p);

}  // namespace ualg
