#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "sstower/errors.hpp"
#include "sstower/tower.hpp"

using sstower::Element;
using sstower::FieldSpec;
using sstower::FiniteAbelianGroup;
using sstower::InputError;
using sstower::Tower;

namespace {

std::set<std::uint64_t> residues(const sstower::UnitsGroup& u,
                                 const sstower::Subgroup& h) {
  std::set<std::uint64_t> out;
  for (const auto& e : h.elements()) out.insert(u.residue_of(e));
  return out;
}

}  // namespace

TEST_SUITE("tower") {

TEST_CASE("trace legality") {
  CHECK_NOTHROW(sstower::check_trace(7, 0));
  CHECK_THROWS_WITH_AS(sstower::check_trace(7, 7),
                       doctest::Contains("a_p must be 0 for p>3"), InputError);
  CHECK_NOTHROW(sstower::check_trace(3, 3));
  CHECK_NOTHROW(sstower::check_trace(3, -3));
  CHECK_THROWS_AS(sstower::check_trace(3, 1), InputError);
  CHECK_NOTHROW(sstower::check_trace(2, -2));
  CHECK_THROWS_AS(sstower::check_trace(2, 1), InputError);
  CHECK_THROWS_AS(sstower::check_trace(5, 5), InputError);
}

TEST_CASE("units mod 9") {
  auto u = sstower::units_group(3, 1);
  CHECK(u.modulus() == 9);
  CHECK(u.group().order() == 6);
  CHECK(u.group().cyclic_orders() == std::vector<sstower::Coord>{6});
  CHECK(u.generator_residues() == std::vector<std::uint64_t>{2});
  CHECK(residues(u, u.filtration(0)) == std::set<std::uint64_t>{1, 4, 7});
  CHECK(u.filtration(-1).order() == 6);
  CHECK(u.filtration(1).is_trivial());
  for (std::uint64_t r : {1, 2, 4, 5, 7, 8})
    CHECK(u.residue_of(u.element_of(r)) == r);
  CHECK_THROWS_AS(u.element_of(3), InputError);
  CHECK_THROWS_AS(u.element_of(0), InputError);
}

TEST_CASE("units mod 5") {
  auto u = sstower::units_group(5, 0);
  CHECK(u.group().cyclic_orders() == std::vector<sstower::Coord>{4});
  CHECK(u.generator_residues() == std::vector<std::uint64_t>{2});
  CHECK(u.filtration(0).is_trivial());
}

TEST_CASE("units mod 8") {
  auto u = sstower::units_group(2, 1);
  CHECK(u.modulus() == 8);
  CHECK(u.group().cyclic_orders() == std::vector<sstower::Coord>{2, 2});
  CHECK(u.generator_residues() == std::vector<std::uint64_t>{7, 5});
  CHECK(residues(u, u.filtration(0)) == std::set<std::uint64_t>{1, 5});
  CHECK(u.filtration(-1).order() == 4);
  CHECK(u.filtration(1).is_trivial());
}

TEST_CASE("units mod 4") {
  auto u = sstower::units_group(2, 0);
  CHECK(u.group().order() == 2);
  CHECK(u.generator_residues() == std::vector<std::uint64_t>{3});
  CHECK(residues(u, u.filtration(0)) == std::set<std::uint64_t>{1});
}

TEST_CASE("units rejects bad input") {
  CHECK_THROWS_AS(sstower::units_group(3, -1), InputError);
  CHECK_THROWS_AS(sstower::units_group(9, 0), InputError);
  CHECK_THROWS_AS(sstower::units_group(1, 0), InputError);
}

TEST_CASE("cyclotomic tower over Q3 of depth 2") {
  // K = Q_3(zeta), zeta of order 9: G cyclic of order 6.
  Tower t = sstower::build_tower({.p = 3, .f = 1, .m = 1});
  CHECK(t.galois.cyclic_orders() == std::vector<sstower::Coord>{6});
  CHECK(t.m_of_k == 1);
  CHECK(t.c == 1);
  CHECK(t.degree(-1) == 1);
  CHECK(t.degree(0) == 2);
  CHECK(t.degree(1) == 6);
  CHECK(t.level(-1).order() == 6);
  CHECK(t.level(0).order() == 3);
  CHECK(t.level(1).is_trivial());
  CHECK(sstower::layer_degree(t, 1) == 6);
  CHECK_THROWS_AS(sstower::layer_degree(t, 2), InputError);
  CHECK_THROWS_AS(sstower::layer_degree(t, -2), InputError);
}

TEST_CASE("unramified quadratic") {
  Tower t = sstower::build_tower(
      {.p = 3, .f = 2, .m = 0, .full_cyclotomic = true});
  CHECK(t.galois.order() == 2);
  CHECK(t.m_of_k == -1);
  CHECK(t.level(-1).is_trivial());
  CHECK(t.degree(-1) == 2);
  CHECK(t.c == 2);  // zeta_0 generates a ramified quadratic over K_0 = K
  // Frobenius image generates G = G/G_{-1}.
  CHECK(t.galois.element_order(t.frobenius) == 2);
}

TEST_CASE("m = -1 input is normalized to the unramified encoding") {
  Tower t = sstower::build_tower({.p = 3, .f = 2, .m = -1});
  CHECK(t.spec.m == 0);
  CHECK(t.m_of_k == -1);
  CHECK(t.galois.order() == 2);
  // unit-part generators are only legal when trivial
  CHECK_NOTHROW(
      sstower::build_tower({.p = 3, .f = 2, .m = -1, .h_generators = {{1, 1}}}));
  CHECK_THROWS_AS(
      sstower::build_tower({.p = 3, .f = 2, .m = -1, .h_generators = {{0, 2}}}),
      InputError);
}

TEST_CASE("ramified quadratic inside Q5(zeta_5)") {
  // H = the order-2 subgroup of U = (Z/5)^* = <2>; residue 4 = 2^2.
  Tower t =
      sstower::build_tower({.p = 5, .f = 1, .m = 0, .h_generators = {{0, 4}}});
  CHECK(t.galois.order() == 2);
  CHECK(t.m_of_k == 0);
  CHECK(t.c == 2);
  CHECK(t.degree(-1) == 1);
  CHECK(t.degree(0) == 2);
}

TEST_CASE("plateau layer: K_0 = K_{-1}") {
  // H = <7> of order 4 in units mod 25; G = Z/5, already reached by Delta_0.
  Tower t =
      sstower::build_tower({.p = 5, .f = 1, .m = 1, .h_generators = {{0, 7}}});
  CHECK(t.galois.order() == 5);
  CHECK(t.m_of_k == 1);
  CHECK(t.degree(-1) == 1);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 5);
}

TEST_CASE("full ramified tower degrees") {
  CHECK(sstower::build_tower({.p = 3, .f = 1, .m = 2}).degree(2) == 18);
  CHECK(sstower::build_tower({.p = 5, .f = 1, .m = 1}).degree(1) == 20);
}

TEST_CASE("frobenius lift generates G modulo the inertia-fixed level") {
  Tower t = sstower::build_tower({.p = 3, .f = 2, .m = 0});
  CHECK(t.galois.order() == 4);
  CHECK(t.level(-1).order() == 2);
  // image of frobenius in G/G_{-1} has full order [K_{-1}:Q_p] = 2
  auto q = sstower::quotient(t.galois, t.level(-1));
  CHECK(q.group.element_order(q.projection(t.frobenius)) == t.degree(-1));
}

TEST_CASE("level nesting and layer degrees over a subgroup sweep") {
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec ambient_spec{.p = p, .f = 2, .m = 1};
    Tower full = sstower::build_tower(ambient_spec);
    for (const auto& h : sstower::all_subgroups(full.ambient)) {
      FieldSpec spec = ambient_spec;
      for (const auto& e : h.elements()) spec.h_generators.push_back(
          {e[0], sstower::units_group(p, 1).residue_of({e.begin() + 1, e.end()})});
      Tower t = sstower::build_tower(spec);
      CHECK(t.m_of_k <= 1);
      for (int n = 0; n <= t.max_level(); ++n) {
        CHECK(t.level(n - 1).contains_subgroup(t.level(n)));
        std::uint64_t step = t.level(n - 1).order() / t.level(n).order();
        if (n >= 1) CHECK((step == 1 || step == p));
      }
      CHECK(t.level(t.m_of_k).is_trivial());
      if (t.m_of_k - 1 >= -1) CHECK_FALSE(t.level(t.m_of_k - 1).is_trivial());
      // c divides p - 1 for odd p, c in {1, 2} for p = 2
      if (p == 2)
        CHECK((t.c == 1 || t.c == 2));
      else
        CHECK((p - 1) % t.c == 0);
    }
  }
}

}  // TEST_SUITE
