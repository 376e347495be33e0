#include "ualg/linalg.hpp"

#include <sstream>

namespace ualg {

UVector UVector::zeros(const Field& f, size_t n) {
  return UVector(std::vector<Scalar>(n, f.zero()));
}

bool UVector::is_zero() const {
  for (const Scalar& x : e)
    if (!x.is_zero()) return false;
  return true;
}

PNorm UVector::norm() const {
  PNorm n;
  for (const Scalar& x : e) n = max(n, x.norm());
  return n;
}

UVector UVector::operator+(const UVector& o) const {
  UVector r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

UVector UVector::operator-(const UVector& o) const {
  UVector r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

UVector UVector::operator-() const {
  UVector r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
  return r;
}

UVector UVector::scaled(const Scalar& c) const {
  UVector r(*this);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * c;
  return r;
}

bool UVector::eq(const UVector& o) const {
  if (e.size() != o.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (!e[i].eq(o.e[i])) return false;
  return true;
}

std::string UVector::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ", ";
    os << e[i].str();
  }
  os << "]";
  return os.str();
}

UMatrix::UMatrix(const Field& f, size_t rows, size_t cols)
    : fld_(&f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

UMatrix UMatrix::identity(const Field& f, size_t n) {
  UMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

UMatrix UMatrix::operator+(const UMatrix& o) const {
  UMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

UMatrix UMatrix::operator-(const UMatrix& o) const {
  UMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

UMatrix UMatrix::operator-() const {
  UMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

UMatrix UMatrix::scaled(const Scalar& c) const {
  UMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

UMatrix UMatrix::operator*(const UMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::BadDimension, "matrix product shape");
  UMatrix r(*fld_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
    }
  return r;
}

UMatrix UMatrix::transpose() const {
  UMatrix r(*fld_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

UVector UMatrix::mul_vec(const UVector& v) const {
  if (cols_ != v.size()) fail(ErrorCode::BadDimension, "matrix-vector shape");
  UVector r = UVector::zeros(*fld_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      r.e[i] = r.e[i] + at(i, j) * v[j];
  return r;
}

PNorm UMatrix::operator_norm() const {
  PNorm n;
  for (const Scalar& x : a_) n = max(n, x.norm());
  return n;
}

Scalar UMatrix::trace() const {
  if (rows_ != cols_) fail(ErrorCode::BadDimension, "trace of non-square");
  Scalar t = fld_->zero();
  for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

bool UMatrix::is_zero() const {
  for (const Scalar& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool UMatrix::eq(const UMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].eq(o.a_[i])) return false;
  return true;
}

UVector UMatrix::row(size_t i) const {
  UVector r;
  r.e.assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  return r;
}

UMatrix UMatrix::vstack(const UMatrix& o) const {
  if (cols_ != o.cols_) fail(ErrorCode::BadDimension, "vstack shape");
  UMatrix r(*fld_, rows_ + o.rows_, cols_);
  r.a_ = a_;
  r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
  return r;
}

UMatrix UMatrix::from_rows(const Field& f, const std::vector<UVector>& rows,
                           size_t cols) {
  UMatrix r(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::BadDimension, "row length");
    for (size_t j = 0; j < cols; ++j) r.at(i, j) = rows[i][j];
  }
  return r;
}

namespace {

/// Max-norm pivot choice in column `col` among rows [r, rows). Returns the
/// row index or npos when the column is zero at working precision. Enforces
/// the valuation guard on the winning pivot.
constexpr size_t npos = static_cast<size_t>(-1);

size_t pick_pivot(const UMatrix& m, size_t col, size_t r) {
  size_t best = npos;
  PNorm best_norm;
  for (size_t i = r; i < m.rows(); ++i) {
    const Scalar& x = m.at(i, col);
    if (x.is_zero()) continue;
    PNorm n = x.norm();
    if (best == npos || best_norm < n) {
      best = i;
      best_norm = n;
    }
  }
  if (best != npos) {
    const PadicCtx& c = m.field().ctx();
    mpq_class v = m.at(best, col).valuation();
    if (v > c.prec - c.guard)
      fail(ErrorCode::PrecisionExhausted,
           "pivot valuation " + std::string(v.get_str()) + " above " +
               std::to_string(c.prec - c.guard));
  }
  return best;
}

}  // namespace

Echelon echelon_form(const UMatrix& rows) {
  UMatrix w = rows;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
    size_t pi = pick_pivot(w, col, r);
    if (pi == npos) continue;
    if (pi != r)
      for (size_t j = 0; j < w.cols(); ++j) std::swap(w.at(r, j), w.at(pi, j));
    Scalar inv = w.at(r, col).inverse();
    for (size_t j = 0; j < w.cols(); ++j) w.at(r, j) = w.at(r, j) * inv;
    for (size_t i = 0; i < w.rows(); ++i) {
      if (i == r) continue;
      const Scalar& m = w.at(i, col);
      if (m.is_zero()) continue;
      Scalar f = m;
      for (size_t j = 0; j < w.cols(); ++j)
        w.at(i, j) = w.at(i, j) - f * w.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  Echelon e;
  e.mat = UMatrix(w.field(), r, w.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < w.cols(); ++j) e.mat.at(i, j) = w.at(i, j);
  e.pivots = std::move(pivots);
  return e;
}

Echelon echelon_form(const Field& f, const std::vector<UVector>& rows,
                     size_t cols) {
  return echelon_form(UMatrix::from_rows(f, rows, cols));
}

UVector Echelon::reduce(const UVector& v) const {
  UVector r = v;
  for (size_t k = 0; k < pivots.size(); ++k) {
    const Scalar& c = r[pivots[k]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] - f * mat.at(k, j);
  }
  return r;
}

bool Echelon::contains(const UVector& v) const { return reduce(v).is_zero(); }

bool Echelon::equals(const Echelon& o) const {
  if (pivots != o.pivots) return false;
  return mat.eq(o.mat);
}

std::vector<UVector> Echelon::basis() const {
  std::vector<UVector> b;
  for (size_t i = 0; i < mat.rows(); ++i) b.push_back(mat.row(i));
  return b;
}

std::vector<UVector> kernel(const UMatrix& A) {
  const Field& f = A.field();
  Echelon e = echelon_form(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<UVector> basis;
  for (size_t fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    UVector v = UVector::zeros(f, A.cols());
    v[fc] = f.one();
    for (size_t k = 0; k < e.pivots.size(); ++k)
      v[e.pivots[k]] = -e.mat.at(k, fc);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // Canonical form for subspace comparisons.
  return echelon_form(f, basis, A.cols()).basis();
}

std::optional<UVector> solve(const UMatrix& A, const UVector& b) {
  const Field& f = A.field();
  UMatrix aug(f, A.rows(), A.cols() + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Echelon e = echelon_form(aug);
  UVector x = UVector::zeros(f, A.cols());
  for (size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == A.cols()) return std::nullopt;  // 0 = 1 row
    x[e.pivots[k]] = e.mat.at(k, A.cols());
  }
  return x;
}

std::optional<UMatrix> inverse(const UMatrix& A) {
  if (A.rows() != A.cols()) fail(ErrorCode::BadDimension, "inverse shape");
  const Field& f = A.field();
  size_t n = A.rows();
  UMatrix aug(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  Echelon e = echelon_form(aug);
  if (e.rank() < n) return std::nullopt;
  for (size_t k = 0; k < n; ++k)
    if (e.pivots[k] != k) return std::nullopt;
  UMatrix inv(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
  return inv;
}

size_t rank(const UMatrix& A) { return echelon_form(A).rank(); }

std::vector<UVector> rational_subspace(const Field& base,
                                       const Echelon& span_g) {
  const Field& g = span_g.mat.field();
  size_t n = span_g.cols();
  size_t d = static_cast<size_t>(g.degree());
  const PadicCtx& ctx = base.ctx();
  // x in span_G(B) iff for every non-pivot column j:
  //   x_j - sum_k B[k][j] x_{pivot_k} = 0   (a G-linear condition).
  // Each G-condition splits into d Qp-conditions through the power basis.
  std::vector<bool> is_pivot(n, false);
  for (size_t c : span_g.pivots) is_pivot[c] = true;
  std::vector<UVector> cond_rows;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    // Row of G-coefficients: +1 at j, -B[k][j] at pivot_k.
    std::vector<Scalar> grow(n, g.zero());
    grow[j] = g.one();
    for (size_t k = 0; k < span_g.pivots.size(); ++k)
      grow[span_g.pivots[k]] = -span_g.mat.at(k, j);
    for (size_t t = 0; t < d; ++t) {
      UVector row = UVector::zeros(base, n);
      for (size_t c = 0; c < n; ++c)
        row[c] = base.from_base(grow[c].coords()[t]);
      cond_rows.push_back(std::move(row));
    }
  }
  if (cond_rows.empty()) {
    // span is the whole space; every rational vector belongs.
    std::vector<UVector> full;
    for (size_t i = 0; i < n; ++i) {
      UVector v = UVector::zeros(base, n);
      v[i] = base.one();
      full.push_back(std::move(v));
    }
    return full;
  }
  return kernel(UMatrix::from_rows(base, cond_rows, n));
}

}  // namespace ualg
