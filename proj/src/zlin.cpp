#include "gyro/zlin.hpp"

#include <algorithm>
#include <cassert>

#include "gyro/error.hpp"

namespace gyro::zlin {

Vec Mat::row(int i) const {
  Vec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    assert(static_cast<int>(rows[i].size()) == cols);
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  assert(a.cols == b.rows);
  Mat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

bool mat_eq(const Mat& a, const Mat& b) {
  return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

Vec SnfResult::diag() const {
  Vec out;
  int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

void row_axpy(Mat& m, int dst, int src, const Int& c) {  // row dst += c * row src
  if (c == 0) return;
  for (int j = 0; j < m.cols; ++j)
    if (m.at(src, j) != 0) m.at(dst, j) += c * m.at(src, j);
}

void col_axpy(Mat& m, int dst, int src, const Int& c) {  // col dst += c * col src
  if (c == 0) return;
  for (int i = 0; i < m.rows; ++i)
    if (m.at(i, src) != 0) m.at(i, dst) += c * m.at(i, src);
}

void row_swap(Mat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void col_swap(Mat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void row_neg(Mat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

void col_neg(Mat& m, int j) {
  for (int r = 0; r < m.rows; ++r) m.at(r, j) = -m.at(r, j);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfResult smith_normal_form(Mat a, unsigned flags) {
  const int m = a.rows, n = a.cols;
  SnfResult res;
  bool wu = flags & kWantU, wv = flags & kWantV, wvi = flags & kWantVinv;
  if (wu) res.u = Mat::identity(m);
  if (wv) res.v = Mat::identity(n);
  if (wvi) res.vinv = Mat::identity(n);

  auto do_row_axpy = [&](int dst, int src, const Int& c) {
    row_axpy(a, dst, src, c);
    if (wu) row_axpy(res.u, dst, src, c);
  };
  auto do_col_axpy = [&](int dst, int src, const Int& c) {
    col_axpy(a, dst, src, c);
    if (wv) col_axpy(res.v, dst, src, c);
    if (wvi) row_axpy(res.vinv, src, dst, -c);
  };
  auto do_row_swap = [&](int i, int j) {
    row_swap(a, i, j);
    if (wu) row_swap(res.u, i, j);
  };
  auto do_col_swap = [&](int i, int j) {
    col_swap(a, i, j);
    if (wv) col_swap(res.v, i, j);
    if (wvi) row_swap(res.vinv, i, j);
  };

  int t = 0;
  const int nmin = std::min(m, n);
  for (; t < nmin; ++t) {
    // locate min nonzero |entry| in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        if (pi < 0 || cmpabs(x.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    do_row_swap(t, pi);
    do_col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        do_row_axpy(i, t, -q);
        if (a.at(i, t) != 0) {  // remainder became the smaller pivot
          do_row_swap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        do_col_axpy(j, t, -q);
        if (a.at(t, j) != 0) {
          do_col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot divides everything below-right or we fold a bad row in
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      do_row_axpy(t, bi, 1);
    }
    if (a.at(t, t) < 0) {
      row_neg(a, t);
      if (wu) row_neg(res.u, t);
    }
  }
  res.rank = 0;
  for (int i = 0; i < nmin; ++i)
    if (a.at(i, i) != 0) ++res.rank;
  res.d = std::move(a);
  return res;
}

Mat hnf_rows(const Mat& a) {
  RowAccumulator acc(a.cols);
  acc.add_mat(a);
  return acc.basis();
}

void RowAccumulator::add_mat(const Mat& m) {
  assert(m.cols == cols_);
  for (int i = 0; i < m.rows; ++i) add(m.row(i));
}

void RowAccumulator::add(Vec v) {
  int c = 0;
  while (c < cols_ && v[c] == 0) ++c;
  while (c < cols_) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    size_t pos = static_cast<size_t>(it - pivots_.begin());
    if (it == pivots_.end() || *it != c) {
      if (sgn(v[c]) < 0)
        for (int j = c; j < cols_; ++j) v[j] = -v[j];
      pivots_.insert(it, c);
      rows_.insert(rows_.begin() + pos, std::move(v));
      return;
    }
    Vec& b = rows_[pos];
    if (v[c] % b[c] == 0) {
      Int q = v[c] / b[c];
      for (int j = c; j < cols_; ++j)
        if (b[j] != 0) v[j] -= q * b[j];
    } else {
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
      Int bc_g = b[c] / g, vc_g = v[c] / g;
      Vec comb(cols_);
      for (int j = c; j < cols_; ++j) comb[j] = s * b[j] + t * v[j];
      for (int j = c; j < cols_; ++j) v[j] = bc_g * v[j] - vc_g * b[j];
      b = std::move(comb);
    }
    while (c < cols_ && v[c] == 0) ++c;
  }
}

Mat RowAccumulator::basis() const {
  Mat out = Mat::from_rows(rows_, cols_);
  // reduce entries above each pivot into [0, pivot)
  for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
    int p = pivots_[i];
    for (int k = 0; k < i; ++k) {
      Int q = floor_div(out.at(k, p), out.at(i, p));
      row_axpy(out, k, i, -q);
    }
  }
  return out;
}

Mat kernel_cols(const Mat& a) {
  SnfResult s = smith_normal_form(a, kWantV);
  std::vector<Vec> rows;
  for (int j = s.rank; j < a.cols; ++j) {
    Vec r(a.cols);
    for (int i = 0; i < a.cols; ++i) r[i] = s.v.at(i, j);
    rows.push_back(std::move(r));
  }
  return hnf_rows(Mat::from_rows(rows, a.cols));
}

std::optional<Vec> solve_exact(const Mat& a, const Vec& b) {
  assert(static_cast<int>(b.size()) == a.rows);
  SnfResult s = smith_normal_form(a, kWantU | kWantV);
  Vec c(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j)
      if (s.u.at(i, j) != 0 && b[j] != 0) c[i] += s.u.at(i, j) * b[j];
  Vec y(a.cols);
  int nmin = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    if (i < nmin && s.d.at(i, i) != 0) {
      if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.d.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  Vec x(a.cols);
  for (int i = 0; i < a.cols; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (s.v.at(i, j) != 0 && y[j] != 0) x[i] += s.v.at(i, j) * y[j];
  return x;
}

Int ModuleSpace::order() const {
  Int o = 1;
  for (const Int& m : moduli) o *= m;
  return o;
}

bool Subgroup::contains(Vec v) const {
  auto c = lattice_coords(hnf, std::move(v));
  return c.has_value();
}

Int Subgroup::index_in_zn() const {
  Int d = 1;
  for (int i = 0; i < std::min(hnf.rows, hnf.cols); ++i) d *= hnf.at(i, i);
  return d;
}

Int Subgroup::order(const ModuleSpace& m) const { return m.order() / index_in_zn(); }

Subgroup subgroup_from_rows(const ModuleSpace& m, const std::vector<Vec>& gens) {
  RowAccumulator acc(m.dim());
  for (const auto& g : gens) acc.add(g);
  for (int i = 0; i < m.dim(); ++i) {
    Vec d(m.dim());
    d[i] = m.moduli[i];
    acc.add(std::move(d));
  }
  Subgroup s{acc.basis()};
  assert(s.hnf.rows == m.dim());
  return s;
}

Subgroup subgroup_full(const ModuleSpace& m) { return Subgroup{Mat::identity(m.dim())}; }

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  RowAccumulator acc(a.hnf.cols);
  acc.add_mat(a.hnf);
  acc.add_mat(b.hnf);
  return Subgroup{acc.basis()};
}

Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
  // rows (x|y) with x A = y B; intersection is spanned by the x A parts
  const int n = a.hnf.cols, ka = a.hnf.rows, kb = b.hnf.rows;
  Mat stacked(ka + kb, n);
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < n; ++j) stacked.at(i, j) = a.hnf.at(i, j);
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < n; ++j) stacked.at(ka + i, j) = -b.hnf.at(i, j);
  Mat left_kernel = kernel_cols(stacked.transposed());
  RowAccumulator acc(n);
  for (int r = 0; r < left_kernel.rows; ++r) {
    Vec v(n);
    for (int i = 0; i < ka; ++i) {
      const Int& c = left_kernel.at(r, i);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        if (a.hnf.at(i, j) != 0) v[j] += c * a.hnf.at(i, j);
    }
    acc.add(std::move(v));
  }
  return Subgroup{acc.basis()};
}

bool subgroup_subset(const Subgroup& inner, const Subgroup& outer) {
  for (int i = 0; i < inner.hnf.rows; ++i)
    if (!outer.contains(inner.hnf.row(i))) return false;
  return true;
}

Int lcm_vec(const Vec& v) {
  Int l = 1;
  for (const Int& x : v)
    if (x != 0) l = lcm(l, x);
  return l;
}

Subgroup congruence_kernel(const Mat& a, const Vec& row_moduli, const ModuleSpace& m) {
  assert(a.cols == m.dim());
  assert(static_cast<int>(row_moduli.size()) == a.rows);
  if (a.rows == 0) return subgroup_full(m);
  Int e = lcm_vec(row_moduli);
  if (e == 1) return subgroup_full(m);
  Mat scaled = a;
  for (int i = 0; i < a.rows; ++i) {
    Int f = e / row_moduli[i];
    if (f == 1) continue;
    for (int j = 0; j < a.cols; ++j) scaled.at(i, j) *= f;
  }
  SnfResult s = smith_normal_form(std::move(scaled), kWantV);
  RowAccumulator acc(m.dim());
  for (int j = 0; j < m.dim(); ++j) {
    Int scale = 1;
    if (j < s.rank) scale = e / gcd(s.d.at(j, j), e);
    Vec r(m.dim());
    for (int i = 0; i < m.dim(); ++i) r[i] = scale * s.v.at(i, j);
    acc.add(std::move(r));
  }
  for (int i = 0; i < m.dim(); ++i) {
    Vec d(m.dim());
    d[i] = m.moduli[i];
    acc.add(std::move(d));
  }
  return Subgroup{acc.basis()};
}

std::optional<Vec> lattice_coords(const Mat& hnf, Vec v) {
  assert(static_cast<int>(v.size()) == hnf.cols);
  Vec coeff(hnf.rows);
  for (int i = 0; i < hnf.rows; ++i) {
    int p = 0;
    while (p < hnf.cols && hnf.at(i, p) == 0) ++p;
    if (p == hnf.cols) continue;  // zero row
    if (v[p] == 0) continue;
    if (v[p] % hnf.at(i, p) != 0) return std::nullopt;
    coeff[i] = v[p] / hnf.at(i, p);
    for (int j = p; j < hnf.cols; ++j)
      if (hnf.at(i, j) != 0) v[j] -= coeff[i] * hnf.at(i, j);
  }
  for (const Int& x : v)
    if (x != 0) return std::nullopt;
  return coeff;
}

Vec Quotient::class_of(const Vec& v) const {
  auto y = lattice_coords(big_basis, v);
  if (!y) fail(Err::RelationViolation, "vector not in the ambient subgroup of a quotient");
  const int n = big_basis.rows;
  Vec z(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      if ((*y)[k] != 0 && vmat.at(k, j) != 0) z[j] += (*y)[k] * vmat.at(k, j);
    if (factors[j] != 0) {
      mpz_fdiv_r(z[j].get_mpz_t(), z[j].get_mpz_t(), factors[j].get_mpz_t());
    }
  }
  return z;
}

Vec Quotient::invariant_factors() const {
  Vec out;
  for (const Int& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

Int Quotient::order() const {
  Int o = 1;
  for (const Int& f : factors) o *= f;
  return o;
}

Quotient make_quotient(const Subgroup& big, const Subgroup& small) {
  const int n = big.hnf.rows;
  Mat c(n, n);
  for (int i = 0; i < n; ++i) {
    auto coords = lattice_coords(big.hnf, small.hnf.row(i));
    if (!coords) fail(Err::RelationViolation, "quotient: small subgroup not inside big");
    for (int j = 0; j < n; ++j) c.at(i, j) = (*coords)[j];
  }
  SnfResult s = smith_normal_form(std::move(c), kWantV | kWantVinv);
  Quotient q;
  q.big_basis = big.hnf;
  q.vmat = s.v;
  q.factors = s.diag();
  // representative of generator j: row j of vinv * big_basis
  Mat reps = mat_mul(s.vinv, big.hnf);
  for (int j = 0; j < n; ++j) q.reps.push_back(reps.row(j));
  return q;
}

}  // namespace gyro::zlin
