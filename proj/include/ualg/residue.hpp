#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ualg/rng.hpp"

namespace ualg {

// -------- F_p vectors and elimination (plain machine ints) --------

using FpVec = std::vector<long>;

long fp_inv(long a, long p);

/// Row-reduced basis of a subspace of F_p^n with unit pivots; supports
/// membership, coordinates and incremental growth.
class FpSpace {
 public:
  FpSpace(long p, size_t ambient) : p_(p), ambient_(ambient) {}

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<FpVec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  FpVec reduce(FpVec v) const;
  bool contains(const FpVec& v) const { return is_zero(reduce(v)); }
  /// Inserts v; returns true when the dimension grew.
  bool insert(const FpVec& v);
  /// Coordinates of v in the row basis (nullopt when v is outside).
  std::optional<FpVec> coords(const FpVec& v) const;

  static bool is_zero(const FpVec& v);

 private:
  long p_;
  size_t ambient_;
  std::vector<FpVec> rows_;
  std::vector<size_t> pivots_;
};

// -------- F_p[t] (little-endian coefficient vectors) --------

using FpPoly = std::vector<long>;  // empty = zero polynomial

namespace fppoly {

FpPoly trim(FpPoly f);
int deg(const FpPoly& f);  // -1 for zero
FpPoly mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly add(const FpPoly& a, const FpPoly& b, long p);
/// Remainder and quotient by a nonzero divisor.
FpPoly mod(const FpPoly& a, const FpPoly& b, long p);
FpPoly divexact(const FpPoly& a, const FpPoly& b, long p);
FpPoly monic(FpPoly f, long p);
FpPoly gcd(FpPoly a, FpPoly b, long p);
/// g = gcd(a,b) = u*a + v*b.
void xgcd(const FpPoly& a, const FpPoly& b, long p, FpPoly& g, FpPoly& u,
          FpPoly& v);
FpPoly derivative(const FpPoly& f, long p);
/// base^e mod m, with an arbitrary-size exponent given by its bits.
FpPoly powmod(const FpPoly& base, const std::vector<bool>& ebits,
              const FpPoly& m, long p);
/// Full factorization into (irreducible, multiplicity), deterministic given
/// the rng stream (equal-degree splitting is Cantor-Zassenhaus).
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f, long p, Rng& rng);
bool is_irreducible(const FpPoly& f, long p, Rng& rng);

}  // namespace fppoly

// -------- residue algebras over F_p --------

/// Structure-constant algebra over F_p: the reduction of an integral
/// algebra modulo p. Used for idempotent search; lifting back to Q_p is
/// Newton iteration in the parent algebra.
class ResidueAlgebra {
 public:
  ResidueAlgebra(long p, size_t n, std::vector<long> sc,
                 std::optional<FpVec> unit)
      : p_(p), n_(n), sc_(std::move(sc)), unit_(std::move(unit)) {}

  long p() const { return p_; }
  size_t dim() const { return n_; }
  const std::optional<FpVec>& unit() const { return unit_; }

  FpVec mul(const FpVec& a, const FpVec& b) const;
  bool is_idempotent(const FpVec& e) const;
  FpVec scale(long c, const FpVec& a) const;
  FpVec add(const FpVec& a, const FpVec& b) const;
  FpVec sub(const FpVec& a, const FpVec& b) const;
  /// Evaluate a polynomial at an element (unit required for the constant
  /// term; a poly with zero constant term works without one).
  FpVec eval_poly(const FpPoly& f, const FpVec& z) const;

  /// Complete orthogonal idempotent family by recursive corner splitting:
  /// minimal polynomials of corner elements are factored and coprime CRT
  /// idempotents split the corner, until no sampled element splits. Members
  /// are "residue-irreducible"; true irreducibility over Q_p is decided
  /// after lifting. Requires a unit.
  std::vector<FpVec> orthogonal_family(Rng& rng, int budget = 64) const;

  /// All idempotents by exhaustive enumeration (oracle; p^dim candidates).
  std::vector<FpVec> all_idempotents_brute(size_t max_candidates) const;

  /// Minimal polynomial of z over F_p within the unital span (monic).
  FpPoly min_poly(const FpVec& z) const;

 private:
  /// A CRT idempotent splitting the corner containing e (corner unit e),
  /// or nullopt when no sampled element splits.
  std::optional<FpVec> find_split(const FpVec& corner_unit,
                                  const std::vector<FpVec>& corner_basis,
                                  Rng& rng, int budget) const;

  long p_;
  size_t n_;
  std::vector<long> sc_;
  std::optional<FpVec> unit_;
};

}  // namespace ualg
