#pragma once
#include <gmpxx.h>

#include <optional>
#include <vector>

// Exact integer linear algebra: Hermite/Smith normal forms, congruence
// kernels and subgroup lattices of finite modules prod Z_{m_i}. All entries
// are arbitrary-precision integers.

namespace gyro::zlin {

using Int = mpz_class;
using Vec = std::vector<Int>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Vec row(int i) const;
  static Mat identity(int n);
  static Mat diagonal(const Vec& d);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);
  Mat transposed() const;
};

Mat mat_mul(const Mat& a, const Mat& b);
bool mat_eq(const Mat& a, const Mat& b);

struct SnfResult {
  Mat d;               // u * a * v = d, diagonal, d[i][i] >= 0, divisibility chain
  Mat u, v, vinv;      // filled per request flags
  int rank = 0;        // number of nonzero diagonal entries
  Vec diag() const;
};

inline constexpr unsigned kWantU = 1, kWantV = 2, kWantVinv = 4;
SnfResult smith_normal_form(Mat a, unsigned flags = 0);

// Row-style Hermite normal form: echelon basis of the row lattice, pivots
// positive, entries above each pivot reduced into [0, pivot).
Mat hnf_rows(const Mat& a);

// Incrementally absorbs rows into an echelon basis; suited to very tall
// relation matrices where most rows reduce to zero.
class RowAccumulator {
public:
  explicit RowAccumulator(int cols) : cols_(cols) {}
  void add(Vec v);
  void add_mat(const Mat& m);
  Mat basis() const;  // HNF of everything absorbed so far
  int cols() const { return cols_; }

private:
  int cols_;
  std::vector<Vec> rows_;  // echelon, sorted by pivot column
  std::vector<int> pivots_;
};

// Basis (as rows) of {x in Z^n : a x = 0}.
Mat kernel_cols(const Mat& a);

// One solution of a x = b over the integers, if any.
std::optional<Vec> solve_exact(const Mat& a, const Vec& b);

// --- finite modules -------------------------------------------------------

// Ambient module prod_i Z_{moduli[i]}; moduli[i] >= 1.
struct ModuleSpace {
  Vec moduli;
  int dim() const { return static_cast<int>(moduli.size()); }
  Int order() const;
};

// Subgroup of a ModuleSpace, stored as the full-rank integer lattice of its
// preimages in Z^n (always contains diag(moduli)). hnf is n x n upper
// triangular.
struct Subgroup {
  Mat hnf;
  bool contains(Vec v) const;
  Int index_in_zn() const;  // det of hnf
  Int order(const ModuleSpace& m) const;
};

Subgroup subgroup_from_rows(const ModuleSpace& m, const std::vector<Vec>& gens);
Subgroup subgroup_full(const ModuleSpace& m);
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b);
bool subgroup_subset(const Subgroup& inner, const Subgroup& outer);

// Solutions of A x ≡ 0 (mod row_moduli[i]) row-wise, as a Subgroup of m.
// Row moduli of 1 make a row vacuous; entries of A act on m's coordinates.
Subgroup congruence_kernel(const Mat& a, const Vec& row_moduli, const ModuleSpace& m);

// Coefficients expressing v in the rows of an echelon basis; nullopt if v is
// not in the lattice.
std::optional<Vec> lattice_coords(const Mat& hnf, Vec v);

// Quotient big/small of two subgroups (small ⊆ big, both full rank).
struct Quotient {
  Vec factors;                       // all SNF diagonal entries, divisibility order
  std::vector<Vec> reps;             // one ambient representative per factor
  Vec class_of(const Vec& v) const;  // coordinates mod factors; v must lie in big
  Vec invariant_factors() const;     // factors > 1
  Int order() const;

  Mat big_basis, vmat;  // internals used by class_of
};
Quotient make_quotient(const Subgroup& big, const Subgroup& small);

Int lcm_vec(const Vec& v);

}  // namespace gyro::zlin
