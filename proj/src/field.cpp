#include "ualg/field.hpp"

#include <algorithm>
#include <sstream>

#include "ualg/rng.hpp"

namespace ualg {

namespace {

std::string poly_name(long p, const std::vector<long>& lower) {
  std::ostringstream os;
  os << "Q_" << p << "(t^" << lower.size();
  for (size_t i = lower.size(); i-- > 0;) {
    if (lower[i] == 0) continue;
    os << (lower[i] > 0 ? "+" : "") << lower[i];
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace

Field::Field(PadicCtx ctx)
    : ctx_(ctx), deg_(1), ram_e_(1), name_("Q_" + std::to_string(ctx.p)) {}

Field::Field(PadicCtx ctx, std::vector<long> lower_coeffs, int ram_e,
             std::string name)
    : ctx_(ctx),
      deg_(lower_coeffs.size()),
      lower_(std::move(lower_coeffs)),
      ram_e_(ram_e),
      name_(name.empty() ? poly_name(ctx.p, lower_) : std::move(name)) {
  if (deg_ < 2 || deg_ > 3)
    fail(ErrorCode::BadDimension, "extension degree must be 2 or 3");
  // Reduction rows: t^(d+j) as an integer combination of 1..t^(d-1).
  std::vector<mpz_class> row(deg_);
  for (size_t i = 0; i < deg_; ++i) row[i] = -lower_[i];
  red_.push_back(row);
  for (size_t j = 1; j + 1 < deg_; ++j) {
    std::vector<mpz_class> next(deg_, mpz_class(0));
    const std::vector<mpz_class>& prev = red_.back();
    for (size_t i = 0; i + 1 < deg_; ++i) next[i + 1] = prev[i];
    mpz_class top = prev[deg_ - 1];
    for (size_t i = 0; i < deg_; ++i) next[i] += top * red_[0][i];
    red_.push_back(next);
  }
}

Scalar Field::zero() const {
  return Scalar(this, std::vector<Padic>(deg_, Padic::zero(ctx_)));
}

Scalar Field::one() const { return from_long(1); }

Scalar Field::from_long(long v) const {
  std::vector<Padic> c(deg_, Padic::zero(ctx_));
  c[0] = Padic::from_long(ctx_, v);
  return Scalar(this, c);
}

Scalar Field::from_rational(const mpq_class& q) const {
  std::vector<Padic> c(deg_, Padic::zero(ctx_));
  c[0] = Padic::from_rational(ctx_, q.get_num(), q.get_den());
  return Scalar(this, c);
}

Scalar Field::from_base(const Padic& x) const {
  std::vector<Padic> c(deg_, Padic::zero(ctx_));
  c[0] = x;
  return Scalar(this, c);
}

Scalar Field::generator() const {
  if (deg_ < 2) fail(ErrorCode::BadDimension, "base field has no generator");
  std::vector<Padic> c(deg_, Padic::zero(ctx_));
  c[1] = Padic::from_long(ctx_, 1);
  return Scalar(this, c);
}

Scalar Field::from_coords(std::vector<Padic> c) const {
  if (c.size() != deg_) fail(ErrorCode::BadDimension, "coordinate count");
  return Scalar(this, std::move(c));
}

Scalar Field::random_integral(Rng& rng) const {
  long h = (ctx_.p - 1) / 2;
  std::vector<Padic> c(deg_);
  for (size_t i = 0; i < deg_; ++i)
    c[i] = Padic::from_long(ctx_, rng.uniform(-h, h));
  return Scalar(this, c);
}

void Field::check(const Scalar& a, const Scalar& b) const {
  if (a.fld_ != b.fld_)
    fail(ErrorCode::BadDimension, "mixed field handles in scalar arithmetic");
}

std::vector<Padic> Field::mul_mod(const std::vector<Padic>& a,
                                  const std::vector<Padic>& b) const {
  if (deg_ == 1) return {a[0] * b[0]};
  std::vector<Padic> prod(2 * deg_ - 1, Padic::zero(ctx_));
  for (size_t i = 0; i < deg_; ++i) {
    if (a[i].is_zero() && a[i].is_exact_zero()) continue;
    for (size_t j = 0; j < deg_; ++j)
      prod[i + j] = prod[i + j] + a[i] * b[j];
  }
  for (size_t k = 2 * deg_ - 2; k >= deg_; --k) {
    const Padic& top = prod[k];
    if (!(top.is_zero() && top.is_exact_zero())) {
      const std::vector<mpz_class>& row = red_[k - deg_];
      for (size_t i = 0; i < deg_; ++i) {
        if (row[i] == 0) continue;
        prod[i] = prod[i] + top * Padic::from_mpz(ctx_, row[i]);
      }
    }
    if (k == deg_) break;
  }
  prod.resize(deg_);
  return prod;
}

mpq_class Field::val_coords(const std::vector<Padic>& a, bool* zero) const {
  bool all_zero = true;
  mpq_class best;
  for (size_t i = 0; i < deg_; ++i) {
    if (a[i].is_zero()) continue;
    mpq_class v(a[i].valuation());
    if (ram_e_ == 2 && i == 1) v += mpq_class(1, 2);
    if (all_zero || v < best) best = v;
    all_zero = false;
  }
  *zero = all_zero;
  return best;
}

std::vector<Padic> Field::inv_coords(const std::vector<Padic>& a) const {
  if (deg_ == 1) return {a[0].inverse()};
  // Multiplication-by-a matrix in the power basis; invert via the adjugate
  // (degrees are at most 3).
  std::vector<std::vector<Padic>> M(deg_);
  std::vector<Padic> basis_val(deg_, Padic::zero(ctx_));
  for (size_t j = 0; j < deg_; ++j) {
    std::vector<Padic> ej(deg_, Padic::zero(ctx_));
    ej[j] = Padic::from_long(ctx_, 1);
    M[j] = mul_mod(a, ej);  // column j
  }
  auto m = [&](size_t i, size_t j) -> const Padic& { return M[j][i]; };
  std::vector<Padic> z(deg_, Padic::zero(ctx_));
  if (deg_ == 2) {
    Padic det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det.is_zero())
      fail(ErrorCode::DivisionByZero, "non-invertible extension element");
    z[0] = m(1, 1) / det;
    z[1] = -m(1, 0) / det;
  } else {
    Padic c00 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Padic c01 = m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0);
    Padic c02 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    Padic det = m(0, 0) * c00 - m(0, 1) * c01 + m(0, 2) * c02;
    if (det.is_zero())
      fail(ErrorCode::DivisionByZero, "non-invertible extension element");
    z[0] = c00 / det;
    z[1] = -c01 / det;
    z[2] = c02 / det;
  }
  return z;
}

bool Scalar::is_zero() const {
  for (const Padic& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Scalar::is_integral() const {
  for (const Padic& x : c_)
    if (!x.is_integral()) return false;
  return true;
}

mpq_class Scalar::valuation() const {
  bool zero = false;
  mpq_class v = fld_->val_coords(c_, &zero);
  if (zero) fail(ErrorCode::Internal, "valuation of zero scalar");
  return v;
}

PNorm Scalar::norm() const {
  bool zero = false;
  mpq_class v = fld_->val_coords(c_, &zero);
  if (zero) return PNorm();
  return PNorm(v);
}

const Padic& Scalar::base_value() const {
  if (fld_->degree() != 1)
    fail(ErrorCode::BadDimension, "base_value on extension scalar");
  return c_[0];
}

Scalar Scalar::operator-() const {
  std::vector<Padic> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Scalar(fld_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
  fld_->check(*this, o);
  std::vector<Padic> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return Scalar(fld_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  fld_->check(*this, o);
  return Scalar(fld_, fld_->mul_mod(c_, o.c_));
}

Scalar Scalar::inverse() const {
  if (is_zero())
    fail(ErrorCode::DivisionByZero, "inverse of zero (at working precision)");
  return Scalar(fld_, fld_->inv_coords(c_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero())
    fail(ErrorCode::DivisionByZero, "division by zero (at working precision)");
  return *this * o.inverse();
}

std::string Scalar::str() const {
  if (fld_->degree() == 1) return c_[0].str();
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ")";
  return os.str();
}

std::string Scalar::report_str() const {
  if (fld_->degree() == 1) return c_[0].report_str();
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].report_str();
  }
  os << ")";
  return os.str();
}

long least_nonresidue(long p) {
  for (long u = 2; u < p; ++u)
    if (!is_quadratic_residue(u, p)) return u;
  fail(ErrorCode::Internal, "no non-residue found");
}

std::vector<long> first_irreducible_cubic(long p) {
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c) {
        bool has_root = false;
        for (long t = 0; t < p && !has_root; ++t)
          if (((t * t % p * t) % p + (a * t % p * t) % p + b * t + c) % p == 0)
            has_root = true;
        if (!has_root) return {c, b, a};
      }
  fail(ErrorCode::Internal, "no irreducible cubic found");
}

FieldTower::FieldTower(PadicCtx ctx) {
  base_ = std::make_unique<Field>(ctx);
  long p = ctx.p;
  long u = least_nonresidue(p);
  exts_.push_back(std::make_unique<Field>(
      ctx, std::vector<long>{-u, 0}, 1, ""));
  exts_.push_back(std::make_unique<Field>(
      ctx, std::vector<long>{-p, 0}, 2, ""));
  exts_.push_back(std::make_unique<Field>(ctx, first_irreducible_cubic(p), 1, ""));
}

std::vector<const Field*> FieldTower::extensions() const {
  std::vector<const Field*> v;
  for (const auto& e : exts_) v.push_back(e.get());
  return v;
}

std::vector<const Field*> FieldTower::all() const {
  std::vector<const Field*> v{base_.get()};
  for (const auto& e : exts_) v.push_back(e.get());
  return v;
}

Scalar hensel_sqrt(const Scalar& a) {
  const Field& f = a.field();
  if (f.degree() != 1)
    fail(ErrorCode::BadDimension, "hensel_sqrt is defined on base-field scalars");
  return f.from_base(hensel_sqrt(a.base_value()));
}

}  // namespace ualg
