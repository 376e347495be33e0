#include "ualg/star.hpp"

namespace ualg {

InvolutionReport check_involution(const Algebra& a, const Involution& inv) {
  InvolutionReport r;
  size_t n = a.dim();
  const Field& f = a.field();
  // (4) involutive on the basis.
  for (size_t i = 0; i < n && r.involutive_ok; ++i) {
    UVector twice = inv.apply(inv.apply(a.basis_elem(i).v));
    if (!twice.eq(a.basis_elem(i).v)) {
      r.involutive_ok = false;
      r.involutive_witness = i;
    }
  }
  // (2) anti-multiplicative on basis pairs.
  for (size_t i = 0; i < n && r.antimult_ok; ++i)
    for (size_t j = 0; j < n; ++j) {
      UVector lhs = inv.apply(a.basis_product(i, j));
      AlgElem rhs = a.elem(inv.apply(a.basis_elem(j).v)) *
                    a.elem(inv.apply(a.basis_elem(i).v));
      if (!lhs.eq(rhs.v)) {
        r.antimult_ok = false;
        r.antimult_witness = {i, j};
        break;
      }
    }
  // (5) theta(y)(a x) = theta((I a) y)(x): with the standard pairing this
  // says the realization of I(a) is the transpose of the realization of a.
  const MatrixRealization& rho = a.realization();
  if (rho.kind == MatrixRealization::Kind::Blocks) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      UMatrix lhs = rho.apply(inv.apply(a.basis_elem(i).v));
      UMatrix rhs = rho.rho[i].transpose();
      ok = lhs.eq(rhs);
    }
    r.adjoint_ok = ok;
  }
  (void)f;
  return r;
}

PsiEmbedding psi_embedding(const Algebra& a) {
  if (!a.has_involution())
    fail(ErrorCode::NotTransposeClosed,
         a.name() + " carries no transposition to generate the *-algebra");
  size_t n = a.dim();
  const Field& f = a.field();
  size_t m = 2 * n;
  // Basis: E_i = psi(e_i) at index i, F_i = psi(e_i i1) at index n + i.
  // Centrality of psi(i1) and i1^2 = -1 give
  //   E_i E_j = sum c E_k,  E_i F_j = F_i E_j = sum c F_k,
  //   F_i F_j = -sum c E_k.
  std::vector<Scalar> sc(m * m * m, f.zero());
  auto put = [&](size_t i, size_t j, size_t k, const Scalar& c) {
    sc[(i * m + j) * m + k] = c;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const UVector& cij = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) {
        if (cij[k].is_zero()) continue;
        put(i, j, k, cij[k]);
        put(i, n + j, n + k, cij[k]);
        put(n + i, j, n + k, cij[k]);
        put(n + i, n + j, k, -cij[k]);
      }
    }
  // Involution: psi(a) -> psi(a^t), psi(a i1) -> -psi(a^t i1).
  const UMatrix& t = a.involution().mat;
  UMatrix im(f, m, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      im.at(i, j) = t.at(i, j);
      im.at(n + i, n + j) = -t.at(i, j);
    }
  std::optional<UVector> unit;
  if (a.is_unital()) {
    UVector u = UVector::zeros(f, m);
    for (size_t i = 0; i < n; ++i) u[i] = (*a.unit_coords())[i];
    unit = std::move(u);
  }
  return PsiEmbedding{
      &a, Algebra::from_constants(f, m, std::move(sc), "psi(" + a.name() + ")",
                                  std::move(unit), Involution{std::move(im)})};
}

AlgElem PsiEmbedding::psi(const AlgElem& a) const {
  size_t n = source->dim();
  UVector v = UVector::zeros(k.field(), 2 * n);
  for (size_t i = 0; i < n; ++i) v[i] = a.v[i];
  return k.elem(std::move(v));
}

AlgElem PsiEmbedding::psi_i1(const AlgElem& a) const {
  size_t n = source->dim();
  UVector v = UVector::zeros(k.field(), 2 * n);
  for (size_t i = 0; i < n; ++i) v[n + i] = a.v[i];
  return k.elem(std::move(v));
}

AlgElem PsiEmbedding::i1() const { return psi_i1(source->unit_elem()); }

std::pair<AlgElem, AlgElem> selfadjoint_decompose(const Algebra& k,
                                                  const AlgElem& i1,
                                                  const AlgElem& a) {
  if (!k.has_involution()) fail(ErrorCode::NoInvolution, k.name());
  Scalar half = k.field().from_rational(mpq_class(1, 2));
  AlgElem astar = k.star(a);
  AlgElem a0 = (a + astar).scaled(half);
  // a1 = (a i1* + i1 a*)/2 with i1* = -i1.
  AlgElem a1 = (i1 * astar - a * i1).scaled(half);
  return {a0, a1};
}

}  // namespace ualg
