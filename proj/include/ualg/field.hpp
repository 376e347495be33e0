#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "ualg/padic.hpp"
#include "ualg/pnorm.hpp"

namespace ualg {

class Rng;
class Field;

/// Element of a Field: a coefficient vector over Q_p in the power basis
/// 1, t, ..., t^(d-1) of the defining polynomial (d = 1 for the base field).
/// Values are immutable; all arithmetic routes through the owning Field so
/// ramified norms stay exact.
class Scalar {
 public:
  Scalar() : fld_(nullptr) {}

  const Field& field() const { return *fld_; }
  bool valid() const { return fld_ != nullptr; }

  bool is_zero() const;
  bool is_integral() const;
  /// Valuation as an exact rational (ramified extensions live in (1/e)Z).
  mpq_class valuation() const;
  PNorm norm() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  /// Equality at working precision.
  bool eq(const Scalar& o) const { return (*this - o).is_zero(); }

  /// Base-field coordinate access (the element as a vector over Q_p).
  const std::vector<Padic>& coords() const { return c_; }
  /// For degree-1 fields: the underlying Q_p value.
  const Padic& base_value() const;

  std::string str() const;
  std::string report_str() const;

 private:
  friend class Field;
  Scalar(const Field* f, std::vector<Padic> c) : fld_(f), c_(std::move(c)) {}

  const Field* fld_;
  std::vector<Padic> c_;
};

/// A coefficient field handle: Q_p itself or one of the designated finite
/// extensions Q_p[t]/(f) with deg f <= 3. Extensions are restricted to the
/// shapes produced by sample_extensions: unramified (f irreducible mod p)
/// or Eisenstein quadratic t^2 - p, which keeps the extended norm
/// multiplicative and equal to the base norm on Q_p. Immutable after
/// construction; safe to share across threads.
class Field {
 public:
  /// Base field Q_p.
  explicit Field(PadicCtx ctx);
  /// Extension by monic f = t^d + a[d-1] t^(d-1) + ... + a[0], given by the
  /// lower coefficients a (d = a.size() in {2,3}); ram_e is 1 for
  /// unramified f and 2 for the Eisenstein quadratic.
  Field(PadicCtx ctx, std::vector<long> lower_coeffs, int ram_e,
        std::string name);

  const PadicCtx& ctx() const { return ctx_; }
  long prime() const { return ctx_.p; }
  int degree() const { return static_cast<int>(deg_); }
  bool is_base() const { return deg_ == 1; }
  int ramification() const { return ram_e_; }
  int residue_degree() const { return static_cast<int>(deg_) / ram_e_; }
  const std::string& name() const { return name_; }
  /// Lower coefficients of the defining polynomial (empty for the base).
  const std::vector<long>& defining_poly() const { return lower_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_base(const Padic& x) const;
  /// The generator t (degree >= 2 only).
  Scalar generator() const;
  Scalar from_coords(std::vector<Padic> c) const;

  /// Integral element with uniformly random balanced digit coordinates.
  Scalar random_integral(Rng& rng) const;

  bool same(const Field& o) const { return this == &o; }

 private:
  friend class Scalar;

  std::vector<Padic> mul_mod(const std::vector<Padic>& a,
                             const std::vector<Padic>& b) const;
  std::vector<Padic> inv_coords(const std::vector<Padic>& a) const;
  mpq_class val_coords(const std::vector<Padic>& a, bool* zero) const;
  void check(const Scalar& a, const Scalar& b) const;

  PadicCtx ctx_;
  size_t deg_;
  std::vector<long> lower_;  // a_0..a_{d-1}
  int ram_e_;
  std::string name_;
  // t^(d+j) reduced: red_[j][i] integer coefficient of t^i, j = 0..d-2.
  std::vector<std::vector<mpz_class>> red_;
};

/// The base field plus the three deterministic sample extensions used by
/// the core-radical computations: unramified quadratic t^2 - u (u the least
/// non-residue), ramified quadratic t^2 - p, and the first unramified cubic
/// found by lexicographic search. Owns the Field objects so Scalars can
/// hold stable handles.
class FieldTower {
 public:
  explicit FieldTower(PadicCtx ctx);

  const Field& base() const { return *base_; }
  /// The three proper extensions, in the fixed order above.
  std::vector<const Field*> extensions() const;
  /// Base + extensions, base first.
  std::vector<const Field*> all() const;

 private:
  std::unique_ptr<Field> base_;
  std::vector<std::unique_ptr<Field>> exts_;
};

/// Least quadratic non-residue mod p.
long least_nonresidue(long p);
/// Lower coefficients (a, b, c) of the first monic cubic t^3+a t^2+b t+c
/// with no root mod p, in lexicographic (a, b, c) order.
std::vector<long> first_irreducible_cubic(long p);

/// Square root in the base field (degree-1 scalars).
Scalar hensel_sqrt(const Scalar& a);

}  // namespace ualg
