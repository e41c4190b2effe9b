#include <doctest.h>

#include <random>

#include "sstower/group_ring.hpp"

using sstower::Element;
using sstower::FiniteAbelianGroup;
using sstower::GroupRingElement;

TEST_SUITE("group-ring") {

TEST_CASE("constants and terms") {
  FiniteAbelianGroup z2({2});
  auto one = GroupRingElement::one(z2);
  CHECK(one.support_size() == 1);
  CHECK(one.coefficient({0}) == 1);
  CHECK(one.coefficient({1}) == 0);
  CHECK(GroupRingElement::zero().is_zero());

  auto x = GroupRingElement::basis({1});
  x.add_term({1}, -1);
  CHECK(x.is_zero());  // cancelled terms are erased
}

TEST_CASE("additive operations") {
  auto g = GroupRingElement::basis(Element{1});
  FiniteAbelianGroup z2({2});
  auto gm1 = g - GroupRingElement::one(z2);
  CHECK(gm1.coefficient({0}) == -1);
  CHECK(gm1.coefficient({1}) == 1);
  CHECK((gm1 + (-gm1)).is_zero());
  CHECK((mpz_class(3) * gm1).coefficient({1}) == 3);
}

TEST_CASE("convolution in Z[Z/2]") {
  FiniteAbelianGroup z2({2});
  auto one = GroupRingElement::one(z2);
  auto g = GroupRingElement::basis(Element{1});
  // (g - 1)(g - 1) = g^2 - 2g + 1 = 2 - 2g.
  auto sq = sstower::multiply(z2, g - one, g - one);
  CHECK(sq.coefficient({0}) == 2);
  CHECK(sq.coefficient({1}) == -2);
  // (g - 1)(g + 1) = g^2 - 1 = 0.
  CHECK(sstower::multiply(z2, g - one, g + one).is_zero());
}

TEST_CASE("ring laws on random elements") {
  FiniteAbelianGroup g({2, 3});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_elt = [&] {
    GroupRingElement e;
    for (const auto& x : g.elements())
      if (rng() % 2 == 0) e.add_term(x, coeff(rng));
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_elt(), b = random_elt(), c = random_elt();
    CHECK(sstower::multiply(g, a, b) == sstower::multiply(g, b, a));
    CHECK(sstower::multiply(g, a, b + c) ==
          sstower::multiply(g, a, b) + sstower::multiply(g, a, c));
    CHECK(sstower::multiply(g, GroupRingElement::one(g), a) == a);
  }
}

}  // TEST_SUITE
