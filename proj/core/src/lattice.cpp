#include "toric/lattice.hpp"

#include <algorithm>
#include <utility>

namespace toric {

namespace {

// row_i -= q * row_j on both the working matrix and its transform.
void row_axpy(std::vector<IntVector>& m, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

void row_negate(std::vector<IntVector>& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

std::vector<IntVector> rows_of(const IntMatrix& m) { return m.rows(); }

// Fraction-free Gaussian elimination; returns rank and leaves `a` in echelon form.
std::size_t bareiss(std::vector<IntVector>& a, std::size_t ncols, Integer* det_out) {
  const std::size_t nrows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  int swaps = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out) *det_out = (swaps % 2 ? -prev : prev);
  return r;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.nrows(), nc = m.ncols();
  std::vector<IntVector> h = rows_of(m);
  std::vector<IntVector> u = IntMatrix::identity(nr).rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (h[i][c] != 0 && (best == nr || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == nr) break;
      std::swap(h[best], h[r]);
      std::swap(u[best], u[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (h[i][c] == 0) continue;
        Integer q = floor_div(h[i][c], h[r][c]);
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      row_negate(h, r);
      row_negate(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h[i][c], h[r][c]);
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {IntMatrix(std::move(h), nc), IntMatrix(std::move(u), nr)};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.nrows(), nc = m.ncols();
  std::vector<IntVector> s = rows_of(m);
  std::vector<IntVector> u = IntMatrix::identity(nr).rows();
  // v is kept transposed so column operations become row operations.
  std::vector<IntVector> vt = IntMatrix::identity(nc).rows();

  auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {  // col_i -= q col_j
    if (q == 0) return;
    for (std::size_t r = 0; r < nr; ++r) s[r][i] -= q * s[r][j];
    row_axpy(vt, i, j, q);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < nr; ++r) std::swap(s[r][i], s[r][j]);
    std::swap(vt[i], vt[j]);
  };

  const std::size_t lim = std::min(nr, nc);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j)
          if (s[i][j] != 0 && (bi == nr || abs(s[i][j]) < abs(s[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == nr) break;
      if (bi != t) {
        std::swap(s[bi], s[t]);
        std::swap(u[bi], u[t]);
      }
      if (bj != t) col_swap(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        Integer q = floor_div(s[i][t], s[t][t]);
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        Integer q = floor_div(s[t][j], s[t][t]);
        col_axpy(j, t, q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (s[i][j] % s[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      row_axpy(s, t, bad, Integer(-1));
      row_axpy(u, t, bad, Integer(-1));
    }
    if (s[t][t] < 0) {
      row_negate(s, t);
      row_negate(u, t);
    }
  }
  IntMatrix v = IntMatrix(std::move(vt), nc).transpose();
  return {IntMatrix(std::move(s), nc), IntMatrix(std::move(u), nr), std::move(v)};
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.ncols();
  if (m.nrows() == 0) return IntMatrix::identity(n);
  HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVector> ker;
  for (std::size_t i = 0; i < hf.h.nrows(); ++i)
    if (is_zero(hf.h.row(i))) ker.push_back(hf.u.row(i));
  if (ker.empty()) return IntMatrix(std::vector<IntVector>{}, n);
  return lattice_basis(IntMatrix(std::move(ker), n));
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t ncols) {
  std::vector<IntVector> a = rows;
  return bareiss(a, ncols, nullptr);
}

std::size_t rank(const IntMatrix& m) { return rank(m.rows(), m.ncols()); }

Integer determinant(const IntMatrix& m) {
  if (m.nrows() != m.ncols()) throw DomainError("determinant of a non-square matrix");
  if (m.nrows() == 0) return 1;
  std::vector<IntVector> a = m.rows();
  Integer d;
  std::size_t r = bareiss(a, m.ncols(), &d);
  return r < m.nrows() ? Integer(0) : d;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::vector<IntVector> rows;
  for (const auto& r : hf.h.rows())
    if (!is_zero(r)) rows.push_back(r);
  return IntMatrix(std::move(rows), m.ncols());
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.ncols() == b.ncols() && lattice_basis(a) == lattice_basis(b);
}

bool in_row_lattice(const IntVector& v, const IntMatrix& m) {
  return solve_integer(m.transpose(), v).has_value();
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.nrows() != b.size()) throw DomainError("solve_integer: dimension mismatch");
  const std::size_t nc = a.ncols();
  if (a.nrows() == 0) return IntVector(nc);
  SmithForm sf = smith_normal_form(a);
  // s·y = u·b, x = v·y
  IntVector ub = sf.u * b;
  IntVector y(nc);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    const Integer d = i < nc ? sf.s(i, i) : Integer(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return sf.v * y;
}

namespace {

// Reduced row echelon form over Q of the augmented system; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b) {
  if (a.nrows() != b.size()) throw DomainError("solve_rational: dimension mismatch");
  const std::size_t nc = a.ncols();
  std::vector<RationalVector> aug(a.nrows(), RationalVector(nc + 1));
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug[i][j] = a(i, j);
    aug[i][nc] = b[i];
  }
  auto piv = rref(aug, nc);
  for (std::size_t i = piv.size(); i < aug.size(); ++i)
    if (aug[i][nc] != 0) return std::nullopt;
  RationalVector x(nc);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][nc];
  return x;
}

std::vector<RationalVector> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.nrows();
  if (m.ncols() != n) throw DomainError("inverse of a non-square matrix");
  std::vector<RationalVector> aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) throw DomainError("matrix is singular");
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (basis_.nrows() == 0 && basis_.ncols() == 0) return;
  if (toric::rank(basis_) != basis_.nrows()) throw DomainError("lattice basis rows are linearly dependent");
}

Lattice Lattice::standard(std::size_t n) { return Lattice(IntMatrix::identity(n)); }

bool Lattice::is_standard() const { return basis_ == IntMatrix::identity(basis_.nrows()); }

RationalVector Lattice::coordinates(const IntVector& v) const {
  auto x = solve_rational(basis_.transpose(), to_rational(v));
  if (!x) throw DomainError("vector " + to_string(v) + " is not in the span of the lattice");
  return *x;
}

DualLatticeData dual_lattice(const Lattice& l) {
  if (l.rank() != l.degree())
    throw DomainError("dual lattice requires a full-rank lattice (rank " + std::to_string(l.rank()) +
                      " < degree " + std::to_string(l.degree()) + ")");
  const std::size_t n = l.rank();
  auto inv = rational_inverse(l.basis());
  // L* is spanned by the columns of B^{-1}.
  Integer d = 1;
  for (const auto& row : inv)
    for (const auto& x : row) d = lcm(d, boost::multiprecision::denominator(x));
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = inv[j][i] * Rational(d);
      r(i, j) = boost::multiprecision::numerator(x);
    }
  return {lattice_basis(r), d};
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw DomainError("primitive of the zero vector");
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntMatrix reduce_rank2(const IntMatrix& basis) {
  if (basis.nrows() != 2 || rank(basis) != 2) throw DomainError("reduce_rank2 needs two independent rows");
  IntVector b1 = basis.row(0), b2 = basis.row(1);
  if (dot(b1, b1) > dot(b2, b2)) std::swap(b1, b2);
  for (;;) {
    Integer d = dot(b1, b1);
    Integer mu = ceil_div(2 * dot(b1, b2) - d, 2 * d);
    b2 = sub(b2, scale(mu, b1));
    if (dot(b2, b2) >= dot(b1, b1)) break;
    std::swap(b1, b2);
  }
  for (auto* v : {&b1, &b2}) {
    auto nz = std::find_if(v->begin(), v->end(), [](const Integer& x) { return x != 0; });
    if (*nz < 0) *v = neg(*v);
  }
  return IntMatrix({b1, b2}, basis.ncols());
}

}  // namespace toric
