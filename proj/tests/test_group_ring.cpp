#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fitkit/group_ring.hpp"

using namespace fitkit;

namespace {

GroupRingElement sigma(const FiniteAbelianGroup& g, int power = 1) {
  return GroupRingElement::monomial(g, g.power(1, power));
}

}  // namespace

TEST_CASE("ring multiplication") {
  FiniteAbelianGroup c3({3});
  GroupRingElement one = GroupRingElement::one(c3);
  GroupRingElement nu = norm_element(full_subgroup(c3));

  CHECK((one + sigma(c3)) * nu == nu * 2);
  CHECK(sigma(c3) * sigma(c3, 2) == one);

  FiniteAbelianGroup c2({2});
  GroupRingElement s2 = GroupRingElement::monomial(c2, 1);
  GroupRingElement z = (GroupRingElement::one(c2) + s2) *
                       (GroupRingElement::one(c2) - s2);
  CHECK(z.is_zero());

  FiniteAbelianGroup c5({5});
  CHECK_THROWS(GroupRingElement::one(c3) * GroupRingElement::one(c5));
}

TEST_CASE("norm element identities") {
  FiniteAbelianGroup g({3, 3});
  Subgroup h = subgroup_from_tuples(g, {{1, 0}});
  GroupRingElement nu = norm_element(h);
  CHECK(nu * nu == nu * Int(h.order()));
  CHECK(norm_element(trivial_subgroup(g)) == GroupRingElement::one(g));
  for (int e : h.elements()) {
    GroupRingElement diff = GroupRingElement::monomial(g, e) -
                            GroupRingElement::one(g);
    CHECK((nu * diff).is_zero());
  }
}

TEST_CASE("special elements") {
  // I = D = C_3, phi lift = identity: g lift is the constant 3
  FiniteAbelianGroup c3({3});
  InertiaConfig cfg = make_config(c3, full_subgroup(c3), full_subgroup(c3), 0);
  SpecialElements se = special_elements(cfg);
  CHECK(se.g_lift == GroupRingElement::constant(c3, 3));
  CHECK(se.quotient.group.order() == 1);

  // I trivial, D = <phi> = C_3: g lift = 2 - phi^{-1} and h = g
  InertiaConfig cfg2 = make_config(c3, trivial_subgroup(c3), full_subgroup(c3), 1);
  SpecialElements se2 = special_elements(cfg2);
  GroupRingElement expected = GroupRingElement::constant(c3, 2) -
                              GroupRingElement::monomial(c3, c3.inverse(1));
  CHECK(se2.g_lift == expected);
  CHECK(se2.h.numerator == expected);
  CHECK(se2.h.denominator == 1);

  // quotient projection maps the lift to g
  FiniteAbelianGroup g93({9, 3});
  Subgroup i = subgroup_from_tuples(g93, {{3, 0}});
  InertiaConfig cfg3 = make_config(g93, i, full_subgroup(g93),
                                   g93.index_of({1, 1}));
  SpecialElements se3 = special_elements(cfg3);
  CHECK(se3.g_lift.map_through(se3.quotient.group, se3.quotient.proj) ==
        se3.g_bar);
}

TEST_CASE("scaled element h identity nu*g = nu*h") {
  FiniteAbelianGroup g({3, 3});
  for (int phi : {0, 1, 3, 4}) {
    Subgroup i = subgroup_from_tuples(g, {{1, 0}});
    std::vector<int> dgens = i.generators();
    dgens.push_back(phi);
    Subgroup d = subgroup_generated(g, dgens);
    InertiaConfig cfg = make_config(g, i, d, phi);
    SpecialElements se = special_elements(cfg);
    GroupRingElement nu = norm_element(i);
    // #I * nu * glift == nu * (#I * h)
    CHECK(nu * se.g_lift * Int(i.order()) == nu * se.h.numerator);
  }
}

TEST_CASE("regularity") {
  FiniteAbelianGroup c3({3});
  GroupRingElement nu = norm_element(full_subgroup(c3));
  CHECK_FALSE(is_regular(nu));
  CHECK_FALSE(is_regular_det(nu));
  GroupRingElement tau = sigma(c3) - GroupRingElement::one(c3);
  CHECK_FALSE(is_regular(tau));
  CHECK(is_regular(GroupRingElement::one(c3) + nu));

  // character criterion agrees with the multiplication-matrix determinant
  FiniteAbelianGroup g({3, 3});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    GroupRingElement x(g);
    for (int i = 0; i < g.order(); ++i) x.coeff(i) = val(rng);
    CHECK(is_regular(x) == is_regular_det(x));
  }

  // g lift is regular for every config of a sample group
  FiniteAbelianGroup g93({9, 3});
  for (const auto& i : all_subgroups(g93)) {
    InertiaConfig cfg = make_config(g93, i, i, 0);
    CHECK(is_regular(g_lift_element(cfg)));
  }
}

TEST_CASE("augmentation generators") {
  FiniteAbelianGroup g({3, 3});
  InertiaConfig cfg = make_config(g, full_subgroup(g), full_subgroup(g), 0);
  auto ag = augmentation_generators(cfg);
  REQUIRE(ag.tau.size() == 2);
  REQUIRE(ag.id_gens.size() == 3);
  auto nus = part_norms(cfg);
  for (std::size_t l = 0; l < ag.tau.size(); ++l)
    CHECK((ag.tau[l] * nus[l]).is_zero());

  // padded trivial part has tau = 0
  auto padded = cyclic_decomposition(full_subgroup(g), 3);
  InertiaConfig cfg2 = make_config(g, full_subgroup(g), full_subgroup(g), 0,
                                   padded.parts);
  auto ag2 = augmentation_generators(cfg2);
  CHECK(ag2.tau[2].is_zero());
}
