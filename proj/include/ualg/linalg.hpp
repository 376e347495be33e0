#pragma once

#include <optional>
#include <vector>

#include "ualg/field.hpp"

namespace ualg {

/// Coordinate vector with the sup ultranorm.
struct UVector {
  std::vector<Scalar> e;

  UVector() = default;
  explicit UVector(std::vector<Scalar> v) : e(std::move(v)) {}
  static UVector zeros(const Field& f, size_t n);

  size_t size() const { return e.size(); }
  const Scalar& operator[](size_t i) const { return e[i]; }
  Scalar& operator[](size_t i) { return e[i]; }

  bool is_zero() const;
  PNorm norm() const;  // sup of entry norms

  UVector operator+(const UVector& o) const;
  UVector operator-(const UVector& o) const;
  UVector operator-() const;
  UVector scaled(const Scalar& c) const;
  bool eq(const UVector& o) const;

  std::string str() const;
};

/// Dense matrix over the scalar field with the sup (entrywise) ultranorm,
/// which at finite dimension equals the c_0 operator norm.
class UMatrix {
 public:
  UMatrix() : fld_(nullptr), rows_(0), cols_(0) {}
  UMatrix(const Field& f, size_t rows, size_t cols);
  static UMatrix identity(const Field& f, size_t n);

  const Field& field() const { return *fld_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

  UMatrix operator+(const UMatrix& o) const;
  UMatrix operator-(const UMatrix& o) const;
  UMatrix operator*(const UMatrix& o) const;
  UMatrix operator-() const;
  UMatrix scaled(const Scalar& c) const;
  UMatrix transpose() const;
  UVector mul_vec(const UVector& v) const;

  /// max_{i,j} |a_ij|; equals the operator norm on c_0 coordinates.
  PNorm operator_norm() const;
  Scalar trace() const;
  bool is_zero() const;
  bool eq(const UMatrix& o) const;

  UVector row(size_t i) const;
  /// Rows appended below this matrix's rows.
  UMatrix vstack(const UMatrix& o) const;
  static UMatrix from_rows(const Field& f, const std::vector<UVector>& rows,
                           size_t cols);

 private:
  const Field* fld_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Canonical reduced row echelon form of a row space. Pivot entries are
/// scaled to exactly 1 and pivot columns are cleared, so two generating
/// sets span the same subspace iff their Echelon forms agree entrywise.
/// Elimination pivots on the max-norm entry (first index on ties), the
/// stable choice under an ultranorm.
struct Echelon {
  UMatrix mat;                 // nonzero RREF rows
  std::vector<size_t> pivots;  // pivot column of each row

  size_t rank() const { return pivots.size(); }
  size_t cols() const { return mat.cols(); }
  bool contains(const UVector& v) const;
  /// v minus its projection on the row space (the elimination residual).
  UVector reduce(const UVector& v) const;
  bool equals(const Echelon& o) const;
  std::vector<UVector> basis() const;
};

/// RREF of the row space of `rows`. Throws PrecisionExhausted when a pivot
/// has valuation above prec - guard (indistinguishable from noise).
Echelon echelon_form(const UMatrix& rows);
Echelon echelon_form(const Field& f, const std::vector<UVector>& rows,
                     size_t cols);

/// Echelonized basis of the null space {x : Ax = 0}.
std::vector<UVector> kernel(const UMatrix& A);

/// One solution of Ax = b, or nullopt when inconsistent.
std::optional<UVector> solve(const UMatrix& A, const UVector& b);

/// Inverse of a square matrix, or nullopt when singular at precision.
std::optional<UMatrix> inverse(const UMatrix& A);

size_t rank(const UMatrix& A);

/// Intersection with the rational subspace: given an echelonized basis of a
/// subspace of G^n (G an extension of the base field), returns an
/// echelonized basis over the BASE field of { x in Qp^n : x in span_G }.
/// Used by the core radical to realize A cap R(A_G).
std::vector<UVector> rational_subspace(const Field& base, const Echelon& span_g);

}  // namespace ualg
