#include "ualg/algebra.hpp"

#include <algorithm>

namespace ualg {

bool AlgElem::is_integral() const {
  for (const Scalar& x : v.e)
    if (!x.is_integral()) return false;
  return true;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  return {alg, v + o.v};
}
AlgElem AlgElem::operator-(const AlgElem& o) const {
  return {alg, v - o.v};
}
AlgElem AlgElem::operator-() const { return {alg, -v}; }
AlgElem AlgElem::operator*(const AlgElem& o) const {
  return alg->mul(*this, o);
}
AlgElem AlgElem::scaled(const Scalar& c) const { return {alg, v.scaled(c)}; }

UMatrix MatrixRealization::apply(const UVector& coords) const {
  UMatrix r = rho[0].scaled(coords[0]);
  for (size_t i = 1; i < rho.size(); ++i)
    r = r + rho[i].scaled(coords[i]);
  return r;
}

Algebra Algebra::from_constants(const Field& f, size_t n,
                                std::vector<Scalar> sc, std::string name,
                                std::optional<UVector> unit,
                                std::optional<Involution> inv) {
  if (n < 1) fail(ErrorCode::BadDimension, "dim must be >= 1");
  if (sc.size() != n * n * n)
    fail(ErrorCode::BadDimension, "structure constant table size");
  Algebra a;
  a.fld_ = &f;
  a.n_ = n;
  a.name_ = std::move(name);
  a.sc_ = std::move(sc);
  a.precompute();

  // Associativity on all basis triples, exact.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        UVector left = UVector::zeros(f, n), right = UVector::zeros(f, n);
        const UVector& ij = a.prods_[i * n + j];
        for (size_t l = 0; l < n; ++l) {
          if (ij[l].is_zero()) continue;
          left = left + a.prods_[l * n + k].scaled(ij[l]);
        }
        const UVector& jk = a.prods_[j * n + k];
        for (size_t l = 0; l < n; ++l) {
          if (jk[l].is_zero()) continue;
          right = right + a.prods_[i * n + l].scaled(jk[l]);
        }
        if (!left.eq(right))
          fail(ErrorCode::NotAssociative,
               a.name_ + ": witness triple (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
      }

  // Unit: provided coordinates are verified, otherwise solved for.
  if (unit) {
    for (size_t i = 0; i < n; ++i) {
      AlgElem ue{&a, *unit}, ei = a.basis_elem(i);
      if (!(ue * ei).eq(ei) || !(ei * ue).eq(ei))
        fail(ErrorCode::ValidationError, a.name_ + ": declared unit is not a unit");
    }
    a.unit_ = std::move(unit);
  } else {
    // Solve u e_j = e_j and e_j u = e_j jointly.
    UMatrix sys(f, 2 * n * n, n);
    UVector rhs = UVector::zeros(f, 2 * n * n);
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < n; ++i) {
          sys.at(j * n + k, i) = a.sc_[(i * n + j) * n + k];
          sys.at(n * n + j * n + k, i) = a.sc_[(j * n + i) * n + k];
        }
        Scalar d = (j == k) ? f.one() : f.zero();
        rhs[j * n + k] = d;
        rhs[n * n + j * n + k] = d;
      }
    auto u = solve(sys, rhs);
    if (u) a.unit_ = *u;
  }

  // Involution well-formedness: I I = id and I(ab) = I(b) I(a).
  if (inv) {
    const UMatrix& m = inv->mat;
    if (m.rows() != n || m.cols() != n)
      fail(ErrorCode::ValidationError, "involution matrix shape");
    if (!(m * m).eq(UMatrix::identity(f, n)))
      fail(ErrorCode::ValidationError, a.name_ + ": involution is not involutive");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        UVector lhs = inv->apply(a.prods_[i * n + j]);
        AlgElem rhs = a.elem(inv->apply(a.basis_elem(j).v)) *
                      a.elem(inv->apply(a.basis_elem(i).v));
        if (!lhs.eq(rhs.v))
          fail(ErrorCode::ValidationError,
               a.name_ + ": involution is not anti-multiplicative at (" +
                   std::to_string(i) + "," + std::to_string(j) + ")");
      }
    a.inv_ = std::move(inv);
  }
  return a;
}

Algebra Algebra::build(const Field& f, const AlgebraData& data) {
  if (data.dim < 1) fail(ErrorCode::BadDimension, "dim must be >= 1");
  if (f.degree() != 1)
    fail(ErrorCode::BadDimension, "algebras are built over the base field");
  size_t n = data.dim;
  std::vector<Scalar> sc(n * n * n, f.zero());
  for (const auto& [i, j, k, c] : data.table) {
    if (i >= n || j >= n || k >= n)
      fail(ErrorCode::ValidationError, "table index out of range in " + data.name);
    sc[(i * n + j) * n + k] = sc[(i * n + j) * n + k] + f.from_rational(c);
  }
  // Integral rescaling: e_i -> p^t e_i multiplies every constant by p^t.
  long minval = 0;
  for (const Scalar& c : sc)
    if (!c.is_zero()) minval = std::min(minval, c.base_value().valuation());
  long rescale = 0;
  if (minval < 0) {
    rescale = -minval;
    mpz_class pt;
    mpz_ui_pow_ui(pt.get_mpz_t(), f.prime(), rescale);
    Scalar scale = f.from_rational(mpq_class(pt));
    for (Scalar& c : sc)
      if (!c.is_zero()) c = c * scale;
  }
  std::optional<UVector> unit;
  if (data.unit) {
    UVector u = UVector::zeros(f, n);
    for (size_t i = 0; i < n; ++i) u[i] = f.from_rational((*data.unit)[i]);
    if (rescale) {
      // unit coords scale by p^-t under e_i -> p^t e_i.
      mpz_class pt;
      mpz_ui_pow_ui(pt.get_mpz_t(), f.prime(), rescale);
      Scalar inv = f.from_rational(mpq_class(1, pt));
      for (size_t i = 0; i < n; ++i) u[i] = u[i] * inv;
    }
    unit = std::move(u);
  }
  std::optional<Involution> inv;
  if (data.involution) {
    if (data.involution->size() != n)
      fail(ErrorCode::ValidationError, "involution matrix shape");
    UMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) {
      if ((*data.involution)[i].size() != n)
        fail(ErrorCode::ValidationError, "involution matrix shape");
      for (size_t j = 0; j < n; ++j)
        m.at(i, j) = f.from_rational((*data.involution)[i][j]);
    }
    inv = Involution{std::move(m)};
  }
  Algebra a = from_constants(f, n, std::move(sc), data.name, std::move(unit),
                             std::move(inv));
  a.rescale_ = rescale;
  if (data.matrix_blocks) {
    size_t total = 0;
    for (size_t b : *data.matrix_blocks) total += b * b;
    if (total != n)
      fail(ErrorCode::ValidationError,
           "matrix_blocks sizes are inconsistent with dim");
    a.blocks_ = data.matrix_blocks;
    a.realization();  // force validation now
  }
  return a;
}

void Algebra::precompute() {
  prods_.clear();
  prods_.reserve(n_ * n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      UVector v = UVector::zeros(*fld_, n_);
      for (size_t k = 0; k < n_; ++k) v[k] = sc_[(i * n_ + j) * n_ + k];
      prods_.push_back(std::move(v));
    }
}

AlgElem Algebra::zero_elem() const { return {this, UVector::zeros(*fld_, n_)}; }

AlgElem Algebra::basis_elem(size_t i) const {
  UVector v = UVector::zeros(*fld_, n_);
  v[i] = fld_->one();
  return {this, v};
}

AlgElem Algebra::elem(UVector v) const {
  if (v.size() != n_) fail(ErrorCode::BadDimension, "element coordinate count");
  return {this, std::move(v)};
}

AlgElem Algebra::from_rationals(const std::vector<mpq_class>& coords) const {
  if (coords.size() != n_) fail(ErrorCode::BadDimension, "coordinate count");
  UVector v = UVector::zeros(*fld_, n_);
  for (size_t i = 0; i < n_; ++i) v[i] = fld_->from_rational(coords[i]);
  return {this, v};
}

AlgElem Algebra::random_integral(Rng& rng) const {
  UVector v = UVector::zeros(*fld_, n_);
  for (size_t i = 0; i < n_; ++i) v[i] = fld_->random_integral(rng);
  return {this, v};
}

AlgElem Algebra::unit_elem() const {
  if (!unit_) fail(ErrorCode::ValidationError, name_ + " has no unit");
  return {this, *unit_};
}

const Involution& Algebra::involution() const {
  if (!inv_) fail(ErrorCode::NoInvolution, name_ + " has no involution");
  return *inv_;
}

AlgElem Algebra::star(const AlgElem& a) const {
  return {this, involution().apply(a.v)};
}

AlgElem Algebra::mul(const AlgElem& a, const AlgElem& b) const {
  if (a.alg != this || b.alg != this)
    fail(ErrorCode::BadDimension, "elements of a different algebra");
  UVector r = UVector::zeros(*fld_, n_);
  for (size_t i = 0; i < n_; ++i) {
    if (a.v[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (b.v[j].is_zero()) continue;
      Scalar c = a.v[i] * b.v[j];
      const UVector& pij = prods_[i * n_ + j];
      for (size_t k = 0; k < n_; ++k)
        if (!pij[k].is_zero()) r[k] = r[k] + c * pij[k];
    }
  }
  return {this, r};
}

UMatrix Algebra::left_regular(const AlgElem& a) const {
  UMatrix m(*fld_, n_, n_);
  for (size_t j = 0; j < n_; ++j) {
    // column j = coords of a * e_j
    for (size_t i = 0; i < n_; ++i) {
      if (a.v[i].is_zero()) continue;
      const UVector& pij = prods_[i * n_ + j];
      for (size_t k = 0; k < n_; ++k)
        if (!pij[k].is_zero()) m.at(k, j) = m.at(k, j) + a.v[i] * pij[k];
    }
  }
  return m;
}

UMatrix Algebra::right_regular(const AlgElem& a) const {
  UMatrix m(*fld_, n_, n_);
  for (size_t j = 0; j < n_; ++j) {
    for (size_t i = 0; i < n_; ++i) {
      if (a.v[i].is_zero()) continue;
      const UVector& pji = prods_[j * n_ + i];
      for (size_t k = 0; k < n_; ++k)
        if (!pji[k].is_zero()) m.at(k, j) = m.at(k, j) + a.v[i] * pji[k];
    }
  }
  return m;
}

Algebra Algebra::unital_hull() const {
  if (is_unital()) return *this;
  Algebra h;
  h.fld_ = fld_;
  h.n_ = n_ + 1;
  h.name_ = name_ + "+1";
  h.sc_.assign(h.n_ * h.n_ * h.n_, fld_->zero());
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      for (size_t k = 0; k < n_; ++k)
        h.sc_[(i * h.n_ + j) * h.n_ + k] = sc_[(i * n_ + j) * n_ + k];
  for (size_t i = 0; i < h.n_; ++i) {
    h.sc_[(n_ * h.n_ + i) * h.n_ + i] = fld_->one();  // 1 * e_i = e_i
    if (i < n_) h.sc_[(i * h.n_ + n_) * h.n_ + i] = fld_->one();  // e_i * 1
  }
  h.precompute();
  UVector u = UVector::zeros(*fld_, h.n_);
  u[n_] = fld_->one();
  h.unit_ = u;
  return h;
}

Algebra Algebra::base_change(const Field& g) const {
  if (g.same(*fld_)) return *this;
  if (g.prime() != fld_->prime() || fld_->degree() != 1)
    fail(ErrorCode::BadDimension, "base change is from the base field only");
  Algebra b;
  b.fld_ = &g;
  b.n_ = n_;
  b.name_ = name_ + "@" + g.name();
  b.rescale_ = rescale_;
  b.sc_.reserve(sc_.size());
  for (const Scalar& c : sc_) b.sc_.push_back(g.from_base(c.base_value()));
  b.precompute();
  auto lift_vec = [&](const UVector& v) {
    UVector w = UVector::zeros(g, n_);
    for (size_t i = 0; i < n_; ++i) w[i] = g.from_base(v[i].base_value());
    return w;
  };
  if (unit_) b.unit_ = lift_vec(*unit_);
  if (inv_) {
    UMatrix m(g, n_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        m.at(i, j) = g.from_base(inv_->mat.at(i, j).base_value());
    b.inv_ = Involution{m};
  }
  b.blocks_ = blocks_;
  return b;
}

std::vector<UVector> Algebra::center() const {
  UMatrix acc(*fld_, 0, n_);
  for (size_t i = 0; i < n_; ++i) {
    AlgElem ei = basis_elem(i);
    UMatrix d = left_regular(ei) - right_regular(ei);
    acc = (i == 0) ? d : acc.vstack(d);
  }
  return kernel(acc);
}

SubAlgebra Algebra::subalgebra(const std::vector<UVector>& span_vectors,
                                 const std::string& name) const {
  Echelon basis = echelon_form(*fld_, span_vectors, n_);
  size_t m = basis.rank();
  if (m == 0) fail(ErrorCode::BadDimension, "empty subalgebra span");
  Algebra s;
  s.fld_ = fld_;
  s.n_ = m;
  s.name_ = name;
  s.sc_.assign(m * m * m, fld_->zero());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      AlgElem p = mul(elem(basis.mat.row(i)), elem(basis.mat.row(j)));
      UVector red = basis.reduce(p.v);
      if (!red.is_zero())
        fail(ErrorCode::ValidationError,
             name + ": span is not multiplicatively closed");
      for (size_t k = 0; k < m; ++k)
        s.sc_[(i * m + j) * m + k] = p.v[basis.pivots[k]];
    }
  s.precompute();
  // Unit of the subalgebra (if any).
  {
    UMatrix sys(*fld_, 2 * m * m, m);
    UVector rhs = UVector::zeros(*fld_, 2 * m * m);
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        for (size_t i = 0; i < m; ++i) {
          sys.at(j * m + k, i) = s.sc_[(i * m + j) * m + k];
          sys.at(m * m + j * m + k, i) = s.sc_[(j * m + i) * m + k];
        }
        Scalar d = (j == k) ? fld_->one() : fld_->zero();
        rhs[j * m + k] = d;
        rhs[m * m + j * m + k] = d;
      }
    auto u = solve(sys, rhs);
    if (u) s.unit_ = *u;
  }
  return SubAlgebra{std::move(s), std::move(basis)};
}

UVector SubAlgebra::to_parent(const UVector& sub) const {
  UVector r = UVector::zeros(basis.mat.field(), basis.cols());
  for (size_t k = 0; k < basis.rank(); ++k)
    r = r + basis.mat.row(k).scaled(sub[k]);
  return r;
}

std::optional<UVector> SubAlgebra::from_parent(const UVector& parent) const {
  if (!basis.contains(parent)) return std::nullopt;
  UVector r = UVector::zeros(basis.mat.field(), basis.rank());
  for (size_t k = 0; k < basis.rank(); ++k) r[k] = parent[basis.pivots[k]];
  return r;
}

QuotientAlgebra Algebra::quotient_by(const Echelon& ideal,
                                       const std::string& name) const {
  std::vector<bool> is_pivot(n_, false);
  for (size_t c : ideal.pivots) is_pivot[c] = true;
  std::vector<size_t> coord_map;
  for (size_t i = 0; i < n_; ++i)
    if (!is_pivot[i]) coord_map.push_back(i);
  size_t m = coord_map.size();
  if (m == 0) fail(ErrorCode::BadDimension, "quotient by the whole algebra");
  Algebra q;
  q.fld_ = fld_;
  q.n_ = m;
  q.name_ = name;
  q.sc_.assign(m * m * m, fld_->zero());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      UVector prod = prods_[coord_map[i] * n_ + coord_map[j]];
      UVector red = ideal.reduce(prod);
      for (size_t k = 0; k < m; ++k)
        q.sc_[(i * m + j) * m + k] = red[coord_map[k]];
    }
  q.precompute();
  if (unit_) {
    UVector red = ideal.reduce(*unit_);
    UVector u = UVector::zeros(*fld_, m);
    for (size_t k = 0; k < m; ++k) u[k] = red[coord_map[k]];
    q.unit_ = u;
  }
  return QuotientAlgebra{std::move(q), ideal, std::move(coord_map)};
}

UVector QuotientAlgebra::project(const UVector& parent) const {
  UVector red = ideal.reduce(parent);
  UVector r = UVector::zeros(ideal.mat.field(), coord_map.size());
  for (size_t k = 0; k < coord_map.size(); ++k) r[k] = red[coord_map[k]];
  return r;
}

ResidueAlgebra Algebra::residue() const {
  if (fld_->degree() != 1)
    fail(ErrorCode::BadDimension, "residue algebra over the base field only");
  long p = fld_->prime();
  std::vector<long> sc(n_ * n_ * n_, 0);
  for (size_t t = 0; t < sc_.size(); ++t) {
    const Scalar& c = sc_[t];
    if (c.is_zero()) continue;
    if (!c.is_integral())
      fail(ErrorCode::ValidationError, "non-integral structure constant");
    sc[t] = c.base_value().residue_mod_p();
  }
  std::optional<FpVec> unit;
  if (unit_) {
    FpVec u(n_);
    for (size_t i = 0; i < n_; ++i) {
      if (!(*unit_)[i].is_integral())
        fail(ErrorCode::ValidationError,
             name_ + ": unit has non-integral coordinates; the given basis "
                     "is not a unital lattice");
      u[i] = (*unit_)[i].base_value().residue_mod_p();
    }
    unit = u;
  }
  return ResidueAlgebra(p, n_, std::move(sc), std::move(unit));
}

AlgElem Algebra::lift_residue(const FpVec& e) const {
  UVector v = UVector::zeros(*fld_, n_);
  for (size_t i = 0; i < n_; ++i) v[i] = fld_->from_long(e[i]);
  return {this, v};
}

FpVec Algebra::residue_coords(const AlgElem& a) const {
  FpVec r(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (!a.v[i].is_integral())
      fail(ErrorCode::ValidationError, "residue of a non-integral element");
    r[i] = a.v[i].base_value().residue_mod_p();
  }
  return r;
}

const MatrixRealization& Algebra::realization() const {
  if (realization_) return *realization_;
  auto r = std::make_shared<MatrixRealization>();
  if (blocks_) {
    r->kind = MatrixRealization::Kind::Blocks;
    r->blocks = *blocks_;
    size_t m = 0;
    for (size_t b : *blocks_) m += b;
    r->m = m;
    size_t idx = 0, off = 0;
    r->rho.assign(n_, UMatrix(*fld_, m, m));
    for (size_t b : *blocks_) {
      for (size_t i = 0; i < b; ++i)
        for (size_t j = 0; j < b; ++j) {
          r->rho[idx].at(off + i, off + j) = fld_->one();
          ++idx;
        }
      off += b;
    }
    // The labels convention must reproduce the table.
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) {
        UMatrix lhs = r->rho[i] * r->rho[j];
        UMatrix rhs(*fld_, m, m);
        const UVector& pij = prods_[i * n_ + j];
        for (size_t k = 0; k < n_; ++k)
          if (!pij[k].is_zero()) rhs = rhs + r->rho[k].scaled(pij[k]);
        if (!lhs.eq(rhs))
          fail(ErrorCode::ValidationError,
               name_ + ": matrix_blocks realization does not match the table");
      }
  } else {
    r->kind = MatrixRealization::Kind::Regular;
    Algebra h = unital_hull();
    r->m = h.dim();
    for (size_t i = 0; i < n_; ++i) {
      UVector v = UVector::zeros(*fld_, h.dim());
      for (size_t k = 0; k < n_; ++k) v[k] = basis_elem(i).v[k];
      r->rho.push_back(h.left_regular(h.elem(v)));
    }
  }
  realization_ = std::move(r);
  return *realization_;
}

bool Algebra::closed_under_left_mul(const Echelon& span) const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < span.rank(); ++k) {
      AlgElem prod = mul(basis_elem(i), elem(span.mat.row(k)));
      if (!span.contains(prod.v)) return false;
    }
  return true;
}

bool Algebra::closed_under_right_mul(const Echelon& span) const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < span.rank(); ++k) {
      AlgElem prod = mul(elem(span.mat.row(k)), basis_elem(i));
      if (!span.contains(prod.v)) return false;
    }
  return true;
}

}  // namespace ualg
