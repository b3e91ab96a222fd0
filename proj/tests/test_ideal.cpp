#include <catch2/catch_amalgamated.hpp>

#include "fitkit/ideal.hpp"

using namespace fitkit;

namespace {

FiniteAbelianGroup c2() { return FiniteAbelianGroup({2}); }

GroupRingElement one_plus_sigma(const FiniteAbelianGroup& g) {
  return GroupRingElement::one(g) + GroupRingElement::monomial(g, 1);
}
GroupRingElement one_minus_sigma(const FiniteAbelianGroup& g) {
  return GroupRingElement::one(g) - GroupRingElement::monomial(g, 1);
}

}  // namespace

TEST_CASE("ideal from generators") {
  auto g = c2();
  FractionalIdeal a = FractionalIdeal::principal(one_plus_sigma(g));
  REQUIRE(a.lattice_rank() == 1);
  CHECK(a.basis().at(0, 0) == 1);
  CHECK(a.basis().at(0, 1) == 1);

  FractionalIdeal z = FractionalIdeal::from_generators(g, {GroupRingElement(g)});
  CHECK(z.is_zero());

  // (1+s, 1-s) = {(x,y): x = y mod 2}, index 2 in Z[C2]
  FractionalIdeal both =
      FractionalIdeal::from_generators(g, {one_plus_sigma(g), one_minus_sigma(g)});
  REQUIRE(both.lattice_rank() == 2);
  CHECK(both.basis().at(0, 0) == 1);
  CHECK(both.basis().at(0, 1) == 1);
  CHECK(both.basis().at(1, 0) == 0);
  CHECK(both.basis().at(1, 1) == 2);
}

TEST_CASE("sum and product") {
  auto g = c2();
  FractionalIdeal p = FractionalIdeal::principal(one_plus_sigma(g));
  FractionalIdeal m = FractionalIdeal::principal(one_minus_sigma(g));
  CHECK(p.product(m).is_zero());
  CHECK(p.sum(FractionalIdeal::zero(g)).equals(p));
  CHECK(FractionalIdeal::unit(g).power(0).equals(FractionalIdeal::unit(g)));
  CHECK(p.power(0).equals(FractionalIdeal::unit(g)));

  // distributivity on a sample
  FractionalIdeal s = p.sum(m);
  FractionalIdeal two = FractionalIdeal::principal(GroupRingElement::constant(g, 2));
  CHECK(two.product(s).equals(two.product(p).sum(two.product(m))));
}

TEST_CASE("containment and equality") {
  auto g = c2();
  FractionalIdeal both =
      FractionalIdeal::from_generators(g, {one_plus_sigma(g), one_minus_sigma(g)});
  FractionalIdeal two = FractionalIdeal::principal(GroupRingElement::constant(g, 2));
  CHECK(both.contains(two));  // 2 = (1+s) + (1-s)
  FractionalIdeal p = FractionalIdeal::principal(one_plus_sigma(g));
  CHECK_FALSE(p.contains_element(GroupRingElement::constant(g, 2)));
  CHECK(p.equals(p));

  // same ideal under different denominators
  GroupRingElement d = GroupRingElement::constant(g, 3);
  FractionalIdeal scaled = FractionalIdeal::from_generators(
      g, {one_plus_sigma(g) * Int(3)}, d);
  CHECK(scaled.equals(p));
}

TEST_CASE("quotient index") {
  auto g = c2();
  FractionalIdeal unit = FractionalIdeal::unit(g);
  FractionalIdeal both =
      FractionalIdeal::from_generators(g, {one_plus_sigma(g), one_minus_sigma(g)});
  auto idx = unit.quotient_index(both);
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
  CHECK(both.quotient_index(both).value() == 1);

  FiniteAbelianGroup c3({3});
  FractionalIdeal three =
      FractionalIdeal::principal(GroupRingElement::constant(c3, 3));
  CHECK(FractionalIdeal::unit(c3).quotient_index(three).value() == 27);

  FractionalIdeal p = FractionalIdeal::principal(one_plus_sigma(g));
  CHECK_FALSE(unit.quotient_index(p).has_value());  // rank drop: infinite
}

TEST_CASE("p-local comparison") {
  FiniteAbelianGroup c3({3});
  FractionalIdeal unit = FractionalIdeal::unit(c3);
  FractionalIdeal three =
      FractionalIdeal::principal(GroupRingElement::constant(c3, 3));
  CHECK(unit.p_locally_contains(three, 5));
  CHECK(three.p_locally_contains(unit, 5));  // 3 is a 5-adic unit
  CHECK(unit.p_locally_contains(three, 3));
  CHECK_FALSE(three.p_locally_contains(unit, 3));
  CHECK(three.p_locally_contains(FractionalIdeal::zero(c3), 3));
  CHECK(FractionalIdeal::zero(c3).p_locally_contains(FractionalIdeal::zero(c3), 3));
}

TEST_CASE("translate closure preserved by operations") {
  FiniteAbelianGroup g({3, 3});
  GroupRingElement tau1 = GroupRingElement::monomial(g, g.index_of({1, 0})) -
                          GroupRingElement::one(g);
  GroupRingElement tau2 = GroupRingElement::monomial(g, g.index_of({0, 1})) -
                          GroupRingElement::one(g);
  FractionalIdeal a = FractionalIdeal::from_generators(g, {tau1, tau2});
  FractionalIdeal b = a.product(a);
  for (const auto& ideal : {a, b, a.sum(b)}) {
    for (std::size_t r = 0; r < ideal.basis().rows(); ++r) {
      GroupRingElement row =
          GroupRingElement::from_coeffs(g, ideal.basis().row(r));
      for (int t = 0; t < g.order(); ++t)
        CHECK(ideal.contains_element(row.translate(t)));
    }
  }
}

TEST_CASE("augmentation ideal matches kernel lattice") {
  FiniteAbelianGroup g({3, 3});
  InertiaConfig cfg = make_config(g, subgroup_from_tuples(g, {{1, 0}}),
                                  full_subgroup(g), g.index_of({0, 1}));
  CHECK(inertia_augmentation_ideal(cfg).equals(
      augmentation_kernel_lattice(g, cfg.I)));
  CHECK(decomposition_augmentation_ideal(cfg).equals(
      augmentation_kernel_lattice(g, cfg.D)));
}

TEST_CASE("product commutative and associative on canonical forms") {
  FiniteAbelianGroup g({9});
  GroupRingElement s = GroupRingElement::monomial(g, 1);
  FractionalIdeal a = FractionalIdeal::from_generators(
      g, {GroupRingElement::one(g) - s, GroupRingElement::constant(g, 3)});
  FractionalIdeal b = FractionalIdeal::principal(
      GroupRingElement::one(g) + s + GroupRingElement::constant(g, 2));
  FractionalIdeal c = FractionalIdeal::principal(
      norm_element(subgroup_from_tuples(g, {{3}})));
  CHECK(a.product(b).equals(b.product(a)));
  CHECK(a.product(b).product(c).equals(a.product(b.product(c))));
  CHECK(a.product(b.sum(c)).equals(a.product(b).sum(a.product(c))));
}
