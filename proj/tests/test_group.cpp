#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "fitkit/group.hpp"

using namespace fitkit;

TEST_CASE("subgroup generation") {
  FiniteAbelianGroup g33({3, 3});
  Subgroup h = subgroup_from_tuples(g33, {{1, 0}});
  CHECK(h.order() == 3);
  Subgroup whole = subgroup_from_tuples(g33, {{1, 0}, {0, 1}});
  CHECK(whole.order() == 9);

  FiniteAbelianGroup g9({9});
  Subgroup k = subgroup_from_tuples(g9, {{3}});
  CHECK(k.elements() == std::vector<int>({0, 3, 6}));

  CHECK_THROWS(subgroup_from_tuples(g9, {{9}}));
}

TEST_CASE("lagrange by enumeration") {
  FiniteAbelianGroup g({3, 9});
  for (const auto& h : all_subgroups(g)) CHECK(g.order() % h.order() == 0);
}

TEST_CASE("quotient groups") {
  FiniteAbelianGroup g9({9});
  QuotientGroup q = quotient_group(g9, subgroup_from_tuples(g9, {{3}}));
  CHECK(q.group.order() == 3);

  FiniteAbelianGroup g33({3, 3});
  QuotientGroup q2 = quotient_group(g33, subgroup_from_tuples(g33, {{1, 1}}));
  CHECK(q2.group.order() == 3);

  FiniteAbelianGroup g3({3});
  QuotientGroup q3 = quotient_group(g3, full_subgroup(g3));
  CHECK(q3.group.order() == 1);

  // projection is a homomorphism
  for (int a = 0; a < g33.order(); ++a)
    for (int b = 0; b < g33.order(); ++b)
      CHECK(q2.proj[g33.op(a, b)] ==
            q2.group.op(q2.proj[a], q2.proj[b]));
}

TEST_CASE("cyclicity and p-rank") {
  FiniteAbelianGroup g9({9});
  CHECK(is_cyclic(full_subgroup(g9)));
  FiniteAbelianGroup g33({3, 3});
  CHECK_FALSE(is_cyclic(full_subgroup(g33)));
  CHECK(is_cyclic(trivial_subgroup(g33)));

  FiniteAbelianGroup g39({3, 9});
  CHECK(p_rank(full_subgroup(g39), 3) == 2);
  FiniteAbelianGroup g5({5});
  CHECK(p_rank(full_subgroup(g5), 3) == 0);
  FiniteAbelianGroup g335({3, 3, 5});
  CHECK(p_rank(full_subgroup(g335), 3) == 2);
}

TEST_CASE("cyclic decomposition invariants") {
  FiniteAbelianGroup g({3, 9});
  auto d = cyclic_decomposition(full_subgroup(g));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].second == 9);
  CHECK(d.parts[1].second == 3);
  CHECK(decomposition_is_valid(d));

  auto padded = cyclic_decomposition(subgroup_from_tuples(g, {{1, 0}}), 3);
  REQUIRE(padded.parts.size() == 3);
  CHECK(padded.parts[0].second == 3);
  CHECK(padded.parts[1].second == 1);
  CHECK(padded.parts[2].second == 1);
  CHECK(decomposition_is_valid(padded));

  auto trivial = cyclic_decomposition(trivial_subgroup(g), 2);
  REQUIRE(trivial.parts.size() == 2);
  CHECK(decomposition_is_valid(trivial));

  CHECK_THROWS(cyclic_decomposition(full_subgroup(g), 1));

  // product of part orders is the subgroup order for every subgroup
  for (const auto& h : all_subgroups(g)) {
    auto dec = cyclic_decomposition(h);
    long long prod = 1;
    for (auto& [gen, ord] : dec.parts) prod *= ord;
    CHECK(prod == h.order());
    CHECK(decomposition_is_valid(dec));
  }
}

TEST_CASE("sylow split") {
  FiniteAbelianGroup g35({3, 5});
  auto [gp, gq] = sylow_split(g35, 3);
  CHECK(gp.order() == 3);
  CHECK(gq.order() == 5);
  CHECK(std::gcd(gp.order(), gq.order()) == 1);

  FiniteAbelianGroup g9({9});
  auto [p9, q9] = sylow_split(g9, 3);
  CHECK(p9.order() == 9);
  CHECK(q9.order() == 1);

  FiniteAbelianGroup g7({7});
  auto [p7, q7] = sylow_split(g7, 3);
  CHECK(p7.order() == 1);
  CHECK(q7.order() == 7);

  FiniteAbelianGroup g45({45});
  auto [p45, q45] = sylow_split(g45, 3);
  CHECK(p45.order() == 9);
  CHECK(q45.order() == 5);
  CHECK(p45.order() * q45.order() == g45.order());
}

TEST_CASE("subgroup as its own group") {
  FiniteAbelianGroup g({3, 9});
  Subgroup h = subgroup_from_tuples(g, {{0, 3}, {1, 0}});  // C3 x C3
  EmbeddedGroup e = subgroup_as_group(h);
  CHECK(e.group.order() == 9);
  CHECK(e.group.factors() == std::vector<int>({3, 3}));
  for (int a = 0; a < e.group.order(); ++a)
    for (int b = 0; b < e.group.order(); ++b)
      CHECK(e.to_parent[e.group.op(a, b)] ==
            g.op(e.to_parent[a], e.to_parent[b]));
}

TEST_CASE("inertia config validation") {
  FiniteAbelianGroup g({9});
  Subgroup i = subgroup_from_tuples(g, {{3}});
  Subgroup d = full_subgroup(g);
  InertiaConfig cfg = make_config(g, i, d, g.index_of({1}));
  CHECK(cfg.s() == 1);
  // the identity coset does not generate D/I here
  CHECK_THROWS(make_config(g, i, d, 0));
  CHECK_THROWS(make_config(g, d, i, 0));
}

TEST_CASE("all subgroups of an elementary abelian group") {
  FiniteAbelianGroup g({3, 3});
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 6);  // 1 + 4 + 1
}
