#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ualg/linalg.hpp"
#include "ualg/residue.hpp"

namespace ualg {

class Algebra;

/// Element of a structure-constant algebra: a coordinate vector over the
/// basis, with the sup-coordinate norm.
struct AlgElem {
  const Algebra* alg = nullptr;
  UVector v;

  bool is_zero() const { return v.is_zero(); }
  PNorm norm() const { return v.norm(); }
  bool eq(const AlgElem& o) const { return v.eq(o.v); }
  bool is_integral() const;

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem operator*(const AlgElem& o) const;  // algebra product
  AlgElem scaled(const Scalar& c) const;

  std::string str() const { return v.str(); }
};

/// F-linear involution given by its matrix on the basis. Validity (the
/// anti-multiplicativity and involutivity axioms) is established by
/// build_algebra / check_involution, not assumed by the type.
struct Involution {
  UMatrix mat;

  UVector apply(const UVector& x) const { return mat.mul_vec(x); }
};

/// Concrete matrices realizing the basis (block matrix units from fixture
/// labels, or the left regular representation as a fallback). Trace forms
/// and the duality pairing are evaluated through this.
struct MatrixRealization {
  enum class Kind { Blocks, Regular };
  Kind kind = Kind::Regular;
  size_t m = 0;                // ambient matrix size
  std::vector<UMatrix> rho;    // image of each basis element
  std::vector<size_t> blocks;  // for Kind::Blocks

  UMatrix apply(const UVector& coords) const;
};

/// Raw build input: sparse multiplication table over exact rationals.
struct AlgebraData {
  std::string name;
  size_t dim = 0;
  // (i, j, k, c) meaning e_i * e_j contains c * e_k.
  std::vector<std::tuple<size_t, size_t, size_t, mpq_class>> table;
  std::optional<std::vector<mpq_class>> unit;
  std::optional<std::vector<std::vector<mpq_class>>> involution;
  std::optional<std::vector<size_t>> matrix_blocks;
};

/// Finite-dimensional associative algebra over the scalar field, given by
/// structure constants with |c| <= 1 (build rescales the basis by a power
/// of p when needed, so the sup-coordinate norm is submultiplicative).
/// Immutable after build; products of basis elements are precomputed.
class Algebra {
 public:
  static Algebra build(const Field& f, const AlgebraData& data);

  /// Direct construction from a scalar constant table c[(i n + j) n + k].
  /// Verifies associativity, detects or verifies the unit, and validates
  /// the involution when given. Used by derived constructions (psi
  /// doubling, programmatic fixtures).
  static Algebra from_constants(const Field& f, size_t n,
                                std::vector<Scalar> sc, std::string name,
                                std::optional<UVector> unit = std::nullopt,
                                std::optional<Involution> inv = std::nullopt);

  const Field& field() const { return *fld_; }
  size_t dim() const { return n_; }
  const std::string& name() const { return name_; }
  /// Basis rescaling exponent recorded by build (e_i -> p^t e_i).
  long rescale_exponent() const { return rescale_; }

  bool is_unital() const { return unit_.has_value(); }
  const std::optional<UVector>& unit_coords() const { return unit_; }
  AlgElem unit_elem() const;

  bool has_involution() const { return inv_.has_value(); }
  const Involution& involution() const;
  AlgElem star(const AlgElem& a) const;

  AlgElem zero_elem() const;
  AlgElem basis_elem(size_t i) const;
  AlgElem elem(UVector v) const;
  AlgElem from_rationals(const std::vector<mpq_class>& coords) const;
  AlgElem random_integral(Rng& rng) const;

  /// Product of basis elements as a coordinate vector.
  const UVector& basis_product(size_t i, size_t j) const {
    return prods_[i * n_ + j];
  }

  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  /// Matrix of y -> a y on coordinates.
  UMatrix left_regular(const AlgElem& a) const;
  /// Matrix of y -> y a on coordinates.
  UMatrix right_regular(const AlgElem& a) const;

  /// A itself when unital, else A + F*1 with the unit as last basis vector.
  Algebra unital_hull() const;
  /// Index map of A's basis inside the hull (identity when A is unital).
  bool hull_is_self() const { return is_unital(); }

  /// Same structure constants over an extension field G.
  Algebra base_change(const Field& g) const;

  /// Echelonized basis of the center {z : z e_i = e_i z for all i}.
  std::vector<UVector> center() const;

  /// The abstract algebra on an echelonized, multiplicatively closed
  /// subspace basis (corners, blocks, centers). See SubAlgebra.
  struct SubAlgebra subalgebra(const std::vector<UVector>& span_vectors,
                               const std::string& name) const;

  /// Quotient by a two-sided ideal: algebra on the non-pivot coordinates.
  /// See QuotientAlgebra.
  struct QuotientAlgebra quotient_by(const Echelon& two_sided_ideal,
                                     const std::string& name) const;

  /// Reduction mod p. Requires integral structure constants (guaranteed by
  /// build) and, when a unit is present, integral unit coordinates.
  ResidueAlgebra residue() const;
  /// Integral coordinate lift of a residue vector.
  AlgElem lift_residue(const FpVec& e) const;
  /// Residue coordinates of an integral element.
  FpVec residue_coords(const AlgElem& a) const;

  /// Matrix realization (labels-based if the fixture declared blocks, else
  /// the left regular representation of the unital hull). Lazily built.
  const MatrixRealization& realization() const;

  /// Verifies closure of a subspace under left/right basis multiplication.
  bool closed_under_left_mul(const Echelon& span) const;
  bool closed_under_right_mul(const Echelon& span) const;

 private:
  Algebra() = default;
  void precompute();

  const Field* fld_ = nullptr;
  size_t n_ = 0;
  std::string name_;
  long rescale_ = 0;
  std::vector<Scalar> sc_;       // c[(i n + j) n + k]
  std::vector<UVector> prods_;   // e_i e_j
  std::optional<UVector> unit_;
  std::optional<Involution> inv_;
  std::optional<std::vector<size_t>> blocks_;
  mutable std::shared_ptr<MatrixRealization> realization_;
};

/// View of a multiplicatively closed subspace as an algebra of its own,
/// with coordinate transport to and from the parent.
struct SubAlgebra {
  Algebra algebra;
  Echelon basis;  // rows: sub basis in parent coordinates
  UVector to_parent(const UVector& sub) const;
  std::optional<UVector> from_parent(const UVector& parent) const;
};

/// Quotient A/J by a two-sided ideal in echelon form; quotient coordinates
/// are the non-pivot parent coordinates of canonical representatives.
struct QuotientAlgebra {
  Algebra algebra;
  Echelon ideal;
  std::vector<size_t> coord_map;  // quotient basis index -> parent coord
  UVector project(const UVector& parent) const;
};

}  // namespace ualg
