#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gyro/zlin.hpp"

using namespace gyro::zlin;

namespace {

Mat from_ints(const std::vector<std::vector<long>>& v) {
  Mat m(static_cast<int>(v.size()), v.empty() ? 0 : static_cast<int>(v[0].size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = v[i][j];
  return m;
}

void check_snf_contract(const Mat& a) {
  SnfResult s = smith_normal_form(a, kWantU | kWantV | kWantVinv);
  CHECK(mat_eq(mat_mul(mat_mul(s.u, a), s.v), s.d));
  CHECK(mat_eq(mat_mul(s.v, s.vinv), Mat::identity(a.cols)));
  Vec d = s.diag();
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i + 1] != 0) CHECK(d[i + 1] % (d[i] == 0 ? d[i + 1] : d[i]) == 0);
    CHECK(d[i] >= 0);
  }
  for (int i = 0; i < s.rank; ++i) CHECK(s.d.at(i, i) > 0);
}

}  // namespace

TEST_CASE("snf 2x2 matches gcd/det arithmetic") {
  // independent oracle for 2x2: d1 = gcd of entries, d1*d2 = |det|
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    Mat m = from_ints({{a, b}, {c, d}});
    SnfResult s = smith_normal_form(m, kWantU | kWantV);
    CHECK(mat_eq(mat_mul(mat_mul(s.u, m), s.v), s.d));
    long det = a * d - b * c;
    long g = std::abs(std::gcd(std::gcd(a, b), std::gcd(c, d)));
    if (g == 0) {
      CHECK(s.rank == 0);
    } else {
      CHECK(s.d.at(0, 0) == g);
      if (det != 0) {
        CHECK(s.d.at(0, 0) * s.d.at(1, 1) == std::abs(det));
      }
    }
  }
}

TEST_CASE("snf contract on random shapes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-6, 6);
  std::uniform_int_distribution<int> shape(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int r = shape(rng) + 1, c = shape(rng) + 1;
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    check_snf_contract(m);
  }
}

TEST_CASE("hnf reproduces row lattice membership") {
  Mat m = from_ints({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  Mat h = hnf_rows(m);
  // every original row is in the lattice spanned by the hnf
  for (int i = 0; i < m.rows; ++i) CHECK(lattice_coords(h, m.row(i)).has_value());
  // hnf of hnf is stable
  CHECK(mat_eq(hnf_rows(h), h));
}

TEST_CASE("kernel_cols: substitution check") {
  Mat m = from_ints({{2, 4, 6}, {1, 2, 3}});
  Mat k = kernel_cols(m);
  CHECK(k.rows == 2);
  for (int i = 0; i < k.rows; ++i) {
    for (int r = 0; r < m.rows; ++r) {
      Int acc = 0;
      for (int j = 0; j < m.cols; ++j) acc += m.at(r, j) * k.at(i, j);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("solve_exact finds witnesses and rejects") {
  Mat m = from_ints({{2, 0}, {0, 3}});
  auto x = solve_exact(m, {Int(4), Int(9)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!solve_exact(m, {Int(1), Int(0)}).has_value());
}

TEST_CASE("quotient invariants: Z^2 / <(2,0),(0,3)> = Z6") {
  ModuleSpace ms{{Int(6), Int(6)}};
  Subgroup big = subgroup_full(ms);
  Subgroup small = subgroup_from_rows(ms, {{Int(2), Int(0)}, {Int(0), Int(3)}});
  Quotient q = make_quotient(big, small);
  CHECK(q.order() == 6);
  Vec inv = q.invariant_factors();
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == 6);
  // representatives map to generators of the quotient
  for (size_t j = 0; j < q.factors.size(); ++j) {
    Vec cls = q.class_of(q.reps[j]);
    for (size_t i = 0; i < cls.size(); ++i) CHECK(cls[i] == (i == j ? 1 % q.factors[j] : 0));
  }
}

TEST_CASE("congruence kernel vs brute force over Z_6 x Z_4") {
  // ambient Z6 x Z4, one constraint 2x + y = 0 mod 2  (row modulus 2)
  ModuleSpace ms{{Int(6), Int(4)}};
  Mat a = from_ints({{2, 1}});
  Subgroup k = congruence_kernel(a, {Int(2)}, ms);
  long count = 0;
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 4; ++y) {
      bool in = ((2 * x + y) % 2) == 0;
      if (in) ++count;
      CHECK(k.contains({Int(x), Int(y)}) == in);
    }
  CHECK(k.order(ms) == count);
}

TEST_CASE("subgroup sum and intersection vs brute force") {
  ModuleSpace ms{{Int(4), Int(4)}};
  Subgroup a = subgroup_from_rows(ms, {{Int(2), Int(0)}});
  Subgroup b = subgroup_from_rows(ms, {{Int(0), Int(2)}, {Int(1), Int(1)}});
  Subgroup s = subgroup_sum(a, b);
  Subgroup i = subgroup_intersect(a, b);
  long ns = 0, ni = 0;
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y < 4; ++y) {
      bool ina = (x % 2 == 0) && (y == 0 || y == 0);  // <(2,0)> = {(0,0),(2,0)}
      ina = (y == 0 && x % 2 == 0);
      bool inb = b.contains({Int(x), Int(y)});
      bool ins = s.contains({Int(x), Int(y)});
      bool ini = i.contains({Int(x), Int(y)});
      CHECK(ini == (ina && inb));
      if (ins) ++ns;
      if (ini) ++ni;
      CHECK(a.contains({Int(x), Int(y)}) == ina);
    }
  CHECK(s.order(ms) == ns);
  CHECK(i.order(ms) == ni);
}

TEST_CASE("row accumulator equals one-shot hnf") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m(12, 4);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = dist(rng);
    RowAccumulator acc(4);
    for (int i = 0; i < m.rows; ++i) acc.add(m.row(i));
    Mat h1 = acc.basis();
    Mat h2 = hnf_rows(m);
    CHECK(mat_eq(h1, h2));
  }
}

TEST_CASE("empty module edge cases") {
  ModuleSpace ms{{}};
  Subgroup full = subgroup_full(ms);
  CHECK(full.order(ms) == 1);
  Quotient q = make_quotient(full, full);
  CHECK(q.order() == 1);
  CHECK(q.invariant_factors().empty());
}
