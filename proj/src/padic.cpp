#include "ualg/padic.hpp"

#include <algorithm>
#include <sstream>

namespace ualg {

PadicCtx::PadicCtx(long p_, int prec_, int guard_)
    : p(p_), prec(prec_), guard(guard_) {
  if (p < 3 || p % 2 == 0) fail(ErrorCode::BadDimension, "prime must be odd and >= 3");
  mpz_class pz(p);
  if (!mpz_probab_prime_p(pz.get_mpz_t(), 30))
    fail(ErrorCode::BadDimension, "p = " + std::to_string(p) + " is not prime");
  if (prec < 2 || guard < 1 || guard >= prec)
    fail(ErrorCode::BadDimension, "need 1 <= guard < prec");
}

mpz_class PadicCtx::pow(long k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

std::string PNorm::str(long p) const {
  if (zero_) return "0";
  if (q_ == 0) return "1";
  std::ostringstream os;
  os << p << "^";
  mpq_class e = -q_;
  if (e.get_den() == 1)
    os << e.get_num();
  else
    os << "(" << e << ")";
  return os.str();
}

Padic::Padic(const PadicCtx* c, mpz_class unit, long val, int rel)
    : ctx_(c), unit_(std::move(unit)), val_(val), rel_(rel) {}

long Padic::valuation() const {
  if (is_zero()) fail(ErrorCode::Internal, "valuation of zero");
  return val_;
}

int Padic::rel_prec() const {
  if (is_zero()) return 0;
  return rel_;
}

long Padic::abs_prec() const {
  if (is_zero()) return val_;  // zeros store the absolute bound directly
  return val_ + rel_;
}

PNorm Padic::norm() const {
  if (is_zero()) return PNorm();
  return PNorm::from_valuation(val_);
}

long Padic::residue_mod_p() const {
  if (is_zero()) return 0;
  if (val_ < 0) fail(ErrorCode::Internal, "residue of non-integral element");
  if (val_ > 0) return 0;
  mpz_class r = unit_ % ctx_->p;
  return r.get_si();
}

Padic Padic::from_long(const PadicCtx& c, long v) {
  return from_mpz(c, mpz_class(v));
}

Padic Padic::from_mpz(const PadicCtx& c, const mpz_class& v) {
  if (v == 0) return zero(c);
  mpz_class u = v;
  long val = 0;
  mpz_class p(c.p);
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    ++val;
  }
  mpz_class mod = c.pow(c.prec);
  u %= mod;
  if (u < 0) u += mod;
  return Padic(&c, u, val, c.prec);
}

Padic Padic::from_rational(const PadicCtx& c, const mpz_class& num,
                           const mpz_class& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (num == 0) return zero(c);
  Padic n = from_mpz(c, num);
  Padic d = from_mpz(c, den);
  return n / d;
}

Padic Padic::from_unit_val(const PadicCtx& c, const mpz_class& unit, long val) {
  mpz_class mod = c.pow(c.prec);
  mpz_class u = unit % mod;
  if (u < 0) u += mod;
  if (u == 0 || mpz_divisible_ui_p(u.get_mpz_t(), c.p))
    fail(ErrorCode::Internal, "unit part not prime to p");
  return Padic(&c, u, val, c.prec);
}

Padic Padic::operator-() const {
  if (is_zero()) return *this;
  mpz_class mod = ctx_->pow(rel_);
  mpz_class u = mod - unit_;
  return Padic(ctx_, u, val_, rel_);
}

Padic Padic::make_checked(const PadicCtx& c, mpz_class mantissa, long base,
                          long absPrec) {
  // mantissa represents mantissa * p^base, known modulo p^absPrec.
  long window = absPrec - base;
  if (window <= 0) fail(ErrorCode::PrecisionExhausted, "empty digit window");
  mpz_class mod = c.pow(window);
  mantissa %= mod;
  if (mantissa < 0) mantissa += mod;
  if (mantissa == 0) {
    // Full cancellation: inexact zero O(p^absPrec).
    if (absPrec < c.prec - c.guard)
      fail(ErrorCode::PrecisionExhausted,
           "cancellation below the precision guard (O(p^" +
               std::to_string(absPrec) + "))");
    return Padic(&c, true, absPrec);
  }
  long shift = 0;
  while (mpz_divisible_ui_p(mantissa.get_mpz_t(), c.p)) {
    mpz_divexact_ui(mantissa.get_mpz_t(), mantissa.get_mpz_t(), c.p);
    ++shift;
  }
  long val = base + shift;
  long rel = absPrec - val;
  if (rel > c.prec) {
    rel = c.prec;
    mantissa %= c.pow(rel);
  }
  if (rel < c.guard)
    fail(ErrorCode::PrecisionExhausted,
         "only " + std::to_string(rel) + " significant digits left");
  return Padic(&c, mantissa, val, static_cast<int>(rel));
}

Padic Padic::operator+(const Padic& o) const {
  const PadicCtx& c = *ctx_;
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  if (is_zero() && o.is_zero())
    return Padic(&c, true, std::min(val_, o.val_));
  if (is_zero() || o.is_zero()) {
    const Padic& z = is_zero() ? *this : o;
    const Padic& x = is_zero() ? o : *this;
    // x + O(p^a): digits of x below p^a survive.
    long a = z.val_;
    if (x.abs_prec() <= a) return x;
    if (x.val_ >= a) {
      if (a < c.prec - c.guard)
        fail(ErrorCode::PrecisionExhausted,
             "value swamped by O(p^" + std::to_string(a) + ")");
      return Padic(&c, true, a);
    }
    return make_checked(c, x.unit_, x.val_, a);
  }
  long base = std::min(val_, o.val_);
  long absPrec = std::min(abs_prec(), o.abs_prec());
  mpz_class sum = unit_ * c.pow(val_ - base) + o.unit_ * c.pow(o.val_ - base);
  return make_checked(c, sum, base, absPrec);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
  const PadicCtx& c = *ctx_;
  if (is_exact_zero() || o.is_exact_zero()) return zero(c);
  if (is_zero() || o.is_zero()) {
    // O(p^a) * y = O(p^(a + v(y))); both bounds add when both are inexact.
    long bound = val_ + o.val_;
    return Padic(&c, true, std::min(bound, kExactZero));
  }
  int rel = std::min(rel_, o.rel_);
  mpz_class u = (unit_ * o.unit_) % c.pow(rel);
  return Padic(&c, u, val_ + o.val_, rel);
}

Padic Padic::inverse() const {
  const PadicCtx& c = *ctx_;
  if (is_zero())
    fail(ErrorCode::DivisionByZero, "inverse of zero (at working precision)");
  mpz_class mod = c.pow(rel_);
  mpz_class inv;
  if (!mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()))
    fail(ErrorCode::Internal, "unit not invertible");
  return Padic(&c, inv, -val_, rel_);
}

Padic Padic::operator/(const Padic& o) const {
  if (o.is_zero())
    fail(ErrorCode::DivisionByZero, "division by zero (at working precision)");
  return *this * o.inverse();
}

Padic Padic::shift(long k) const {
  if (is_zero()) {
    if (is_exact_zero()) return *this;
    return Padic(ctx_, true, val_ + k);
  }
  return Padic(ctx_, unit_, val_ + k, rel_);
}

bool Padic::congruent_mod(const Padic& o, long k) const {
  Padic d = *this - o;
  if (d.is_zero()) return d.abs_prec() >= k;
  return d.valuation() >= k;
}

std::string Padic::str() const {
  if (is_zero()) {
    if (is_exact_zero()) return "0";
    return "O(" + std::to_string(ctx_->p) + "^" + std::to_string(val_) + ")";
  }
  std::ostringstream os;
  if (val_ == 0)
    os << unit_;
  else
    os << ctx_->p << "^" << val_ << "*" << unit_;
  return os.str();
}

std::string Padic::report_str() const {
  if (is_zero()) return "0";
  // A balanced representative keeps small negative integers readable.
  mpz_class mod = ctx_->pow(rel_);
  mpz_class u = unit_;
  if (u > mod / 2) u -= mod;
  std::ostringstream os;
  if (val_ == 0) {
    os << u;
  } else if (val_ > 0 && val_ < 8) {
    os << u * ctx_->pow(val_);
  } else {
    os << ctx_->p << "^" << val_ << "*" << u;
  }
  return os.str();
}

bool is_quadratic_residue(long u, long p) {
  long r = u % p;
  if (r < 0) r += p;
  if (r == 0) return false;
  for (long t = 1; t <= (p - 1) / 2; ++t)
    if ((t * t) % p == r) return true;
  return false;
}

Padic hensel_sqrt(const Padic& a) {
  const PadicCtx& c = a.ctx();
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "sqrt of zero");
  long v = a.valuation();
  if (v % 2 != 0)
    fail(ErrorCode::OddValuation,
         "valuation " + std::to_string(v) + " is odd; no square root in Q_" +
             std::to_string(c.p));
  mpz_class u = a.unit();
  long u0 = mpz_class(u % c.p).get_si();
  if (!is_quadratic_residue(u0, c.p))
    fail(ErrorCode::NonResidue,
         "unit residue " + std::to_string(u0) + " is not a square mod " +
             std::to_string(c.p));
  // Root of the unit part mod p by direct search (p is small and odd).
  long r0 = 0;
  for (long t = 1; t <= (c.p - 1) / 2; ++t)
    if ((t * t) % c.p == u0) {
      r0 = t;
      break;
    }
  // Newton iteration r <- (r + u/r)/2 doubles correct digits each step.
  int rel = a.rel_prec();
  mpz_class r(r0);
  long known = 1;
  mpz_class two_inv;
  while (known < rel) {
    known = std::min<long>(2 * known, rel);
    mpz_class mod = c.pow(known);
    mpz_class rinv;
    mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    mpz_class t = (r + (u % mod) * rinv) % mod;
    mpz_class inv2;
    mpz_class twoz(2);
    mpz_invert(inv2.get_mpz_t(), twoz.get_mpz_t(), mod.get_mpz_t());
    r = (t * inv2) % mod;
  }
  // Deterministic sign: smaller canonical residue mod p.
  long rres = mpz_class(r % c.p).get_si();
  if (rres > c.p - rres) {
    mpz_class mod = c.pow(rel);
    r = mod - r;
  }
  return Padic::from_unit_val(c, r, v / 2);
}

}  // namespace ualg
