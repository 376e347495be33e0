#include "ualg/residue.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "ualg/errors.hpp"

namespace ualg {

long fp_inv(long a, long p) {
  long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) fail(ErrorCode::Internal, "fp_inv of non-unit");
  return ((t % p) + p) % p;
}

bool FpSpace::is_zero(const FpVec& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

FpVec FpSpace::reduce(FpVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    long c = v[pivots_[k]] % p_;
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j)
      v[j] = ((v[j] - c * rows_[k][j]) % p_ + p_) % p_;
  }
  for (long& x : v) x = ((x % p_) + p_) % p_;
  return v;
}

bool FpSpace::insert(const FpVec& v) {
  FpVec r = reduce(v);
  size_t piv = ambient_;
  for (size_t j = 0; j < ambient_; ++j)
    if (r[j] % p_ != 0) {
      piv = j;
      break;
    }
  if (piv == ambient_) return false;
  long inv = fp_inv(r[piv], p_);
  for (long& x : r) x = (x * inv) % p_;
  // Clear the new pivot column in existing rows to stay reduced.
  for (size_t k = 0; k < rows_.size(); ++k) {
    long c = rows_[k][piv];
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j)
      rows_[k][j] = ((rows_[k][j] - c * r[j]) % p_ + p_) % p_;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  // Keep rows sorted by pivot for canonical order.
  for (size_t k = rows_.size(); k-- > 1;)
    if (pivots_[k - 1] > pivots_[k]) {
      std::swap(pivots_[k - 1], pivots_[k]);
      std::swap(rows_[k - 1], rows_[k]);
    }
  return true;
}

std::optional<FpVec> FpSpace::coords(const FpVec& v) const {
  if (!contains(v)) return std::nullopt;
  // Rows are reduced with unit pivots: coordinates are the pivot entries.
  FpVec c(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) c[k] = ((v[pivots_[k]] % p_) + p_) % p_;
  return c;
}

namespace fppoly {

FpPoly trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, long p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = ((x % p) + p) % p;
  }
  return trim(std::move(r));
}

FpPoly mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return trim(std::move(r));
}

FpPoly mod(const FpPoly& a, const FpPoly& b, long p) {
  if (b.empty()) fail(ErrorCode::Internal, "poly mod by zero");
  FpPoly r = a;
  long lead_inv = fp_inv(b.back(), p);
  while (static_cast<int>(r.size()) >= static_cast<int>(b.size()) && !r.empty()) {
    long c = (r.back() * lead_inv) % p;
    size_t shift = r.size() - b.size();
    if (c != 0)
      for (size_t i = 0; i < b.size(); ++i)
        r[shift + i] = ((r[shift + i] - c * b[i]) % p + p) % p;
    r.pop_back();
    r = trim(std::move(r));
    if (r.size() < b.size()) break;
  }
  return trim(std::move(r));
}

FpPoly divexact(const FpPoly& a, const FpPoly& b, long p) {
  if (b.empty()) fail(ErrorCode::Internal, "poly division by zero");
  FpPoly r = a, q(a.size(), 0);
  long lead_inv = fp_inv(b.back(), p);
  while (!r.empty() && r.size() >= b.size()) {
    long c = (r.back() * lead_inv) % p;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = ((r[shift + i] - c * b[i]) % p + p) % p;
    r = trim(std::move(r));
  }
  if (!r.empty()) fail(ErrorCode::Internal, "divexact with remainder");
  return trim(std::move(q));
}

FpPoly monic(FpPoly f, long p) {
  f = trim(std::move(f));
  if (f.empty()) return f;
  long inv = fp_inv(f.back(), p);
  for (long& c : f) c = (((c * inv) % p) + p) % p;
  return f;
}

FpPoly gcd(FpPoly a, FpPoly b, long p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

void xgcd(const FpPoly& a, const FpPoly& b, long p, FpPoly& g, FpPoly& u,
          FpPoly& v) {
  FpPoly r0 = trim(a), r1 = trim(b);
  FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // q = r0 / r1
    FpPoly q(r0.size(), 0), r = r0;
    long lead_inv = fp_inv(r1.back(), p);
    while (!r.empty() && r.size() >= r1.size()) {
      long c = (r.back() * lead_inv) % p;
      size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        r[shift + i] = ((r[shift + i] - c * r1[i]) % p + p) % p;
      r = trim(std::move(r));
    }
    q = trim(std::move(q));
    FpPoly s2 = add(s0, mul(FpPoly{p - 1}, mul(q, s1, p), p), p);
    FpPoly t2 = add(t0, mul(FpPoly{p - 1}, mul(q, t1, p), p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // Normalize so g is monic.
  if (!r0.empty()) {
    long inv = fp_inv(r0.back(), p);
    for (long& c : r0) c = (c * inv) % p;
    for (long& c : s0) c = (c * inv) % p;
    for (long& c : t0) c = (c * inv) % p;
  }
  g = trim(std::move(r0));
  u = trim(std::move(s0));
  v = trim(std::move(t0));
}

FpPoly derivative(const FpPoly& f, long p) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * (long)(i % p)) % p;
  return trim(std::move(d));
}

FpPoly powmod(const FpPoly& base, const std::vector<bool>& ebits,
              const FpPoly& m, long p) {
  FpPoly result{1};
  FpPoly b = mod(base, m, p);
  for (size_t i = ebits.size(); i-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (ebits[i]) result = mod(mul(result, b, p), m, p);
  }
  return result;
}

namespace {

std::vector<bool> bits_of_pow(long p, int k, long minus = 0, long div = 1) {
  // bits of (p^k - minus)/div, most significant first at index 0.
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, k);
  e -= minus;
  e /= div;
  std::vector<bool> bits;
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nb; i-- > 0;) bits.push_back(mpz_tstbit(e.get_mpz_t(), i));
  std::reverse(bits.begin(), bits.end());
  // stored most-significant-first? powmod iterates ebits from back; keep
  // least-significant at index 0.
  return bits;
}

FpPoly pth_root(const FpPoly& f, long p) {
  // f = g(t^p) over F_p equals g(t)^p; take every p-th coefficient.
  FpPoly g;
  for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
  return trim(std::move(g));
}

FpPoly radical_poly(FpPoly f, long p) {
  f = monic(std::move(f), p);
  if (deg(f) <= 0) return FpPoly{1};
  FpPoly d = derivative(f, p);
  if (d.empty()) return radical_poly(pth_root(f, p), p);
  FpPoly u = gcd(f, d, p);
  FpPoly w = divexact(f, u, p);  // distinct factors with mult not = 0 mod p
  FpPoly ru = radical_poly(u, p);
  FpPoly overlap = gcd(ru, w, p);
  return mul(w, divexact(ru, overlap, p), p);
}

void equal_degree_split(const FpPoly& f, int d, long p, Rng& rng,
                        std::vector<FpPoly>& out) {
  if (deg(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  // Cantor-Zassenhaus, p odd.
  std::vector<bool> ebits = bits_of_pow(p, d, 1, 2);
  for (int attempt = 0; attempt < 200; ++attempt) {
    FpPoly a(deg(f), 0);
    for (long& c : a) c = rng.uniform(0, p - 1);
    a = trim(std::move(a));
    if (deg(a) < 1) continue;
    FpPoly b = powmod(a, ebits, f, p);
    b = add(b, FpPoly{p - 1}, p);  // b - 1
    FpPoly g = gcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divexact(f, g, p), d, p, rng, out);
      return;
    }
  }
  fail(ErrorCode::BudgetExceeded, "equal-degree splitting did not converge");
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f_in, long p,
                                           Rng& rng) {
  FpPoly f = monic(trim(f_in), p);
  if (deg(f) < 1) return {};
  std::vector<FpPoly> irreducibles;
  FpPoly rad = radical_poly(f, p);
  // Linear factors by root search.
  for (long r = 0; r < p; ++r) {
    long val = 0, tp = 1;
    for (size_t i = 0; i < rad.size(); ++i) {
      val = (val + rad[i] * tp) % p;
      tp = (tp * r) % p;
    }
    if (val == 0) irreducibles.push_back(FpPoly{((p - r) % p), 1});  // t - r
  }
  FpPoly rest = rad;
  for (const FpPoly& l : irreducibles) rest = divexact(rest, l, p);
  // Distinct-degree on the rootless part, then equal-degree.
  int d = 2;
  while (deg(rest) >= 2 * d) {
    std::vector<bool> ebits = bits_of_pow(p, d);
    FpPoly tpow = powmod(FpPoly{0, 1}, ebits, rest, p);  // t^(p^d) mod rest
    FpPoly diff = add(tpow, FpPoly{0, p - 1}, p);        // t^(p^d) - t
    FpPoly g = gcd(diff, rest, p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, irreducibles);
      rest = divexact(rest, g, p);
    }
    ++d;
  }
  if (deg(rest) > 0) irreducibles.push_back(monic(rest, p));
  // Multiplicities by trial division of the original polynomial.
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly remaining = f;
  for (const FpPoly& q : irreducibles) {
    int m = 0;
    while (mod(remaining, q, p).empty()) {
      remaining = divexact(remaining, q, p);
      ++m;
    }
    out.emplace_back(q, m);
  }
  if (deg(remaining) != 0)
    fail(ErrorCode::Internal, "factorization incomplete");
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const FpPoly& f, long p, Rng& rng) {
  auto fac = factor(f, p, rng);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace fppoly

FpVec ResidueAlgebra::mul(const FpVec& a, const FpVec& b) const {
  FpVec r(n_, 0);
  for (size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      long ab = (a[i] * b[j]) % p_;
      const long* ck = &sc_[(i * n_ + j) * n_];
      for (size_t k = 0; k < n_; ++k)
        if (ck[k]) r[k] = (r[k] + ab * ck[k]) % p_;
    }
  }
  return r;
}

FpVec ResidueAlgebra::scale(long c, const FpVec& a) const {
  FpVec r(n_);
  c = ((c % p_) + p_) % p_;
  for (size_t i = 0; i < n_; ++i) r[i] = (a[i] * c) % p_;
  return r;
}

FpVec ResidueAlgebra::add(const FpVec& a, const FpVec& b) const {
  FpVec r(n_);
  for (size_t i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FpVec ResidueAlgebra::sub(const FpVec& a, const FpVec& b) const {
  FpVec r(n_);
  for (size_t i = 0; i < n_; ++i) r[i] = ((a[i] - b[i]) % p_ + p_) % p_;
  return r;
}

bool ResidueAlgebra::is_idempotent(const FpVec& e) const {
  return mul(e, e) == e;
}

FpVec ResidueAlgebra::eval_poly(const FpPoly& f, const FpVec& z) const {
  FpVec acc(n_, 0);
  FpVec zpow;
  if (!f.empty() && f[0] != 0) {
    if (!unit_) fail(ErrorCode::Internal, "eval_poly constant term without unit");
    acc = scale(f[0], *unit_);
  }
  zpow = z;
  for (size_t i = 1; i < f.size(); ++i) {
    if (f[i] != 0) acc = add(acc, scale(f[i], zpow));
    if (i + 1 < f.size()) zpow = mul(zpow, z);
  }
  return acc;
}

FpPoly ResidueAlgebra::min_poly(const FpVec& z) const {
  if (!unit_) fail(ErrorCode::Internal, "min_poly requires a unit");
  FpSpace span(p_, n_);
  std::vector<FpVec> powers{*unit_};
  span.insert(*unit_);
  FpVec cur = *unit_;
  while (true) {
    cur = mul(cur, z);
    if (!span.insert(cur)) {
      // cur = sum coeff_k powers[k]; solve with the reduced row basis.
      // Express cur over the recorded powers by solving a small system.
      size_t m = powers.size();
      // Gaussian solve: powers (m vectors) * x = cur.
      std::vector<FpVec> cols(m);
      for (size_t k = 0; k < m; ++k) cols[k] = powers[k];
      // Build augmented rows over index space.
      std::vector<FpVec> rows(n_, FpVec(m + 1, 0));
      for (size_t i = 0; i < n_; ++i) {
        for (size_t k = 0; k < m; ++k) rows[i][k] = cols[k][i];
        rows[i][m] = cur[i];
      }
      // rref
      size_t r = 0;
      std::vector<size_t> pivcol;
      for (size_t c = 0; c < m && r < n_; ++c) {
        size_t pi = n_;
        for (size_t i = r; i < n_; ++i)
          if (rows[i][c] % p_ != 0) {
            pi = i;
            break;
          }
        if (pi == n_) continue;
        std::swap(rows[pi], rows[r]);
        long inv = fp_inv(rows[r][c], p_);
        for (auto& x : rows[r]) x = (x * inv) % p_;
        for (size_t i = 0; i < n_; ++i) {
          if (i == r) continue;
          long f = rows[i][c] % p_;
          if (!f) continue;
          for (size_t j = 0; j <= m; ++j)
            rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p_ + p_) % p_;
        }
        pivcol.push_back(c);
        ++r;
      }
      FpVec x(m, 0);
      for (size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = rows[k][m];
      // minimal polynomial: t^m - sum x_k t^k
      FpPoly mu(m + 1, 0);
      mu[m] = 1;
      for (size_t k = 0; k < m; ++k) mu[k] = ((p_ - x[k]) % p_);
      return fppoly::trim(std::move(mu));
    }
    powers.push_back(cur);
  }
}

std::optional<FpVec> ResidueAlgebra::find_split(
    const FpVec& corner_unit, const std::vector<FpVec>& corner_basis,
    Rng& rng, int budget) const {
  auto try_element = [&](const FpVec& z) -> std::optional<FpVec> {
    // Minimal polynomial of z inside the corner (corner_unit is the unit).
    FpSpace span(p_, n_);
    std::vector<FpVec> powers{corner_unit};
    span.insert(corner_unit);
    FpVec cur = corner_unit;
    FpPoly mu;
    while (true) {
      cur = mul(cur, z);
      if (!span.contains(cur)) {
        span.insert(cur);
        powers.push_back(cur);
        continue;
      }
      // Solve cur = sum x_k powers[k].
      size_t m = powers.size();
      std::vector<FpVec> rows(n_, FpVec(m + 1, 0));
      for (size_t i = 0; i < n_; ++i) {
        for (size_t k = 0; k < m; ++k) rows[i][k] = powers[k][i];
        rows[i][m] = cur[i];
      }
      size_t r = 0;
      std::vector<size_t> pivcol;
      for (size_t c = 0; c < m && r < n_; ++c) {
        size_t pi = n_;
        for (size_t i = r; i < n_; ++i)
          if (rows[i][c] % p_ != 0) {
            pi = i;
            break;
          }
        if (pi == n_) continue;
        std::swap(rows[pi], rows[r]);
        long inv = fp_inv(rows[r][c], p_);
        for (auto& xx : rows[r]) xx = (xx * inv) % p_;
        for (size_t i = 0; i < n_; ++i) {
          if (i == r) continue;
          long fc = rows[i][c] % p_;
          if (!fc) continue;
          for (size_t j = 0; j <= m; ++j)
            rows[i][j] = ((rows[i][j] - fc * rows[r][j]) % p_ + p_) % p_;
        }
        pivcol.push_back(c);
        ++r;
      }
      FpVec x(m, 0);
      for (size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = rows[k][m];
      mu.assign(m + 1, 0);
      mu[m] = 1;
      for (size_t k = 0; k < m; ++k) mu[k] = (p_ - x[k]) % p_;
      mu = fppoly::trim(std::move(mu));
      break;
    }
    auto fac = fppoly::factor(mu, p_, rng);
    if (fac.size() < 2) return std::nullopt;
    // Coprime split: g = first primary component, h = the rest.
    FpPoly g{1};
    for (int i = 0; i < fac[0].second; ++i) g = fppoly::mul(g, fac[0].first, p_);
    FpPoly h = fppoly::divexact(mu, g, p_);
    FpPoly gg, u, v;
    fppoly::xgcd(g, h, p_, gg, u, v);
    if (fppoly::deg(gg) != 0)
      fail(ErrorCode::Internal, "primary components not coprime");
    // e = u*g evaluated at z (== 1 on the h-side, 0 on the g-side), within
    // the corner: constant term handled via corner_unit.
    FpPoly ug = fppoly::mul(u, g, p_);
    FpPoly ugm = fppoly::mod(ug, mu, p_);
    // eval with corner_unit as 1
    FpVec e(n_, 0);
    FpVec zpow = corner_unit;
    for (size_t i = 0; i < ugm.size(); ++i) {
      if (ugm[i]) e = add(e, scale(ugm[i], zpow));
      if (i + 1 < ugm.size()) zpow = mul(zpow, z);
    }
    if (!is_idempotent(e) || FpSpace::is_zero(e) || e == corner_unit)
      return std::nullopt;
    return e;
  };

  for (const FpVec& b : corner_basis) {
    auto e = try_element(b);
    if (e) return e;
  }
  for (int k = 0; k < budget; ++k) {
    FpVec z(n_, 0);
    for (const FpVec& b : corner_basis) {
      long coeff = rng.uniform(0, p_ - 1);
      if (coeff) z = add(z, scale(coeff, b));
    }
    if (FpSpace::is_zero(z)) continue;
    auto e = try_element(z);
    if (e) return e;
  }
  return std::nullopt;
}

std::vector<FpVec> ResidueAlgebra::orthogonal_family(Rng& rng,
                                                     int budget) const {
  if (!unit_)
    fail(ErrorCode::Internal, "orthogonal_family requires a unital residue algebra");
  std::vector<FpVec> out;
  // Worklist of corner units with their corner bases.
  struct Corner {
    FpVec unit;
    std::vector<FpVec> basis;
  };
  auto corner_basis_of = [&](const FpVec& e) {
    FpSpace sp(p_, n_);
    for (size_t i = 0; i < n_; ++i) {
      FpVec bi(n_, 0);
      bi[i] = 1;
      sp.insert(mul(mul(e, bi), e));
    }
    return sp.rows();
  };
  std::vector<Corner> work{{*unit_, corner_basis_of(*unit_)}};
  while (!work.empty()) {
    Corner c = std::move(work.back());
    work.pop_back();
    auto e = find_split(c.unit, c.basis, rng, budget);
    if (!e) {
      out.push_back(c.unit);
      continue;
    }
    FpVec rest = sub(c.unit, *e);
    work.push_back({*e, corner_basis_of(*e)});
    work.push_back({rest, corner_basis_of(rest)});
  }
  // Deterministic order: sort lexicographically.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpVec> ResidueAlgebra::all_idempotents_brute(
    size_t max_candidates) const {
  double total = 1;
  for (size_t i = 0; i < n_; ++i) total *= static_cast<double>(p_);
  if (total > static_cast<double>(max_candidates))
    fail(ErrorCode::BudgetExceeded,
         "residue enumeration over p^dim exceeds the budget");
  std::vector<FpVec> out;
  FpVec v(n_, 0);
  while (true) {
    if (is_idempotent(v)) out.push_back(v);
    size_t i = 0;
    while (i < n_ && ++v[i] == p_) {
      v[i] = 0;
      ++i;
    }
    if (i == n_) break;
  }
  return out;
}

}  // namespace ualg
