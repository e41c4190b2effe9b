#include <doctest.h>

#include <vector>

#include "sstower/smith.hpp"

using sstower::IntMatrix;
using sstower::ModuleInvariants;
using sstower::SmithDecomposition;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
  return a;
}

std::vector<mpz_class> factors_of(const IntMatrix& a) {
  return sstower::smith_normal_form(a).invariant_factors;
}

std::vector<mpz_class> z(const std::vector<long>& v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("smith") {

TEST_CASE("diagonal matrix folds into divisibility chain") {
  CHECK(factors_of(from_rows({{2, 0}, {0, 3}})) == z({1, 6}));
}

TEST_CASE("dense 2x2") {
  // gcd of entries 2, |det| = 8.
  CHECK(factors_of(from_rows({{2, 4}, {6, 8}})) == z({2, 4}));
}

TEST_CASE("zero matrix keeps explicit zero factors") {
  auto d = sstower::smith_normal_form(IntMatrix(3, 3));
  CHECK(d.invariant_factors == z({0, 0, 0}));
  CHECK(d.rank() == 0);
}

TEST_CASE("identity") {
  CHECK(factors_of(from_rows({{1, 0}, {0, 1}})) == z({1, 1}));
}

TEST_CASE("empty matrix") {
  CHECK(factors_of(IntMatrix(0, 0)).empty());
  CHECK(factors_of(IntMatrix(0, 5)).empty());
  CHECK(factors_of(IntMatrix(5, 0)).empty());
}

TEST_CASE("sign is normalized") {
  CHECK(factors_of(from_rows({{-5}})) == z({5}));
}

TEST_CASE("rectangular keeps min(rows, cols) factors") {
  CHECK(factors_of(from_rows({{2, 0, 0}, {0, 3, 0}})) == z({1, 6}));
  CHECK(factors_of(from_rows({{4, 6}})) == z({2}));
}

TEST_CASE("factors are invariant under row and column permutation") {
  auto a = from_rows({{2, 4, 1}, {6, 8, 0}, {3, 3, 3}});
  auto b = from_rows({{3, 3, 3}, {8, 6, 0}, {4, 2, 1}});  // rows and cols shuffled
  CHECK(factors_of(a) == factors_of(b));
}

TEST_CASE("transforms reconstruct the diagonal") {
  for (auto& rows : std::vector<std::vector<std::vector<long>>>{
           {{2, 4}, {6, 8}},
           {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
           {{1, 2, 3}, {4, 5, 6}},
           {{7}, {11}, {13}},
           {{-3, 9, 6}, {12, -6, 3}, {0, 15, -9}},
       }) {
    auto a = from_rows(rows);
    auto d = sstower::smith_normal_form(a, true);
    REQUIRE(d.u.has_value());
    REQUIRE(d.v.has_value());
    CHECK(abs(sstower::determinant(*d.u)) == 1);
    CHECK(abs(sstower::determinant(*d.v)) == 1);
    IntMatrix prod = (*d.u) * a * (*d.v);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        mpz_class want = (i == j && i < d.invariant_factors.size())
                             ? d.invariant_factors[i]
                             : mpz_class(0);
        CHECK(prod(i, j) == want);
      }
    for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
      if (d.invariant_factors[i + 1] == 0) continue;
      REQUIRE(d.invariant_factors[i] != 0);
      CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
    }
  }
}

TEST_CASE("product of nonzero factors equals |det| on full-rank square") {
  auto d = sstower::smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  mpz_class prod = 1;
  for (const auto& f : d.invariant_factors) prod *= f;
  CHECK(prod == 8);
}

TEST_CASE("determinant") {
  CHECK(sstower::determinant(from_rows({{2, 4}, {6, 8}})) == -8);
  CHECK(sstower::determinant(IntMatrix::identity(4)) == 1);
  CHECK(sstower::determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(sstower::determinant(IntMatrix(0, 0)) == 1);
  CHECK(sstower::determinant(from_rows({{-7}})) == -7);
}

TEST_CASE("cokernel invariants") {
  SUBCASE("Z/2") {
    auto inv = sstower::cokernel_invariants(from_rows({{2}}), 2);
    CHECK(inv.zp_rank == 0);
    CHECK(inv.p_torsion_exponents == std::vector<unsigned>{1});
  }
  SUBCASE("unit at p") {
    auto inv = sstower::cokernel_invariants(from_rows({{3}}), 2);
    CHECK(inv.zp_rank == 0);
    CHECK(inv.p_torsion_exponents.empty());
  }
  SUBCASE("no relations") {
    auto inv = sstower::cokernel_invariants(IntMatrix(0, 4), 3);
    CHECK(inv.zp_rank == 4);
    CHECK(inv.p_torsion_exponents.empty());
  }
  SUBCASE("mixed torsion") {
    // Cokernel of diag(3, 9, 2) at p = 3: Z/3 x Z/9 x (3-adic unit part).
    auto inv =
        sstower::cokernel_invariants(from_rows({{3, 0, 0}, {0, 9, 0}, {0, 0, 2}}), 3);
    CHECK(inv.zp_rank == 0);
    CHECK(inv.p_torsion_exponents == std::vector<unsigned>{1, 2});
  }
}

}  // TEST_SUITE
