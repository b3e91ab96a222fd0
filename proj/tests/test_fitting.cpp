#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fitkit/fitting.hpp"

using namespace fitkit;

TEST_CASE("determinant over Z[G]") {
  FiniteAbelianGroup c3({3});
  GroupRingElement one = GroupRingElement::one(c3);
  GroupRingElement s = GroupRingElement::monomial(c3, 1);

  GroupRingMatrix m(c3, 2, 2);
  m.at(0, 0) = one; m.at(0, 1) = s;
  m.at(1, 0) = s;   m.at(1, 1) = one;
  CHECK(determinant(m) == one - s * s);

  GroupRingMatrix id(c3, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = one;
  CHECK(determinant(id) == one);

  GroupRingMatrix rep(c3, 2, 2);
  rep.at(0, 0) = s; rep.at(0, 1) = one + s;
  rep.at(1, 0) = s; rep.at(1, 1) = one + s;
  CHECK(determinant(rep).is_zero());
}

TEST_CASE("fitting ideals of explicit matrices") {
  FiniteAbelianGroup c3({3});
  InertiaConfig cfg = make_config(c3, full_subgroup(c3), full_subgroup(c3), 0);
  GroupRingElement gl = g_lift_element(cfg);

  GroupRingMatrix m(c3, 1, 1);
  m.at(0, 0) = gl;
  CHECK(fitt_i(m, 0).equals(FractionalIdeal::principal(gl)));
  CHECK(fitt_i(m, 1).equals(FractionalIdeal::unit(c3)));
  CHECK(fitt_i(m, 5).equals(FractionalIdeal::unit(c3)));

  // Fitt_0 of a square presentation equals its determinant ideal
  GroupRingElement s = GroupRingElement::monomial(c3, 1);
  GroupRingMatrix sq(c3, 2, 2);
  sq.at(0, 0) = gl; sq.at(0, 1) = s;
  sq.at(1, 0) = GroupRingElement::one(c3) - s; sq.at(1, 1) = gl * s;
  CHECK(fitt_i(sq, 0).equals(FractionalIdeal::principal(determinant(sq))));
}

TEST_CASE("block relation matrix layout") {
  FiniteAbelianGroup g({3, 3, 3});
  InertiaConfig cfg = make_config(g, full_subgroup(g), full_subgroup(g), 0);
  GroupRingMatrix m = relation_matrix(cfg);
  REQUIRE(m.rows() == 6);
  REQUIRE(m.cols() == 3);
  auto nus = part_norms(cfg);
  auto taus = augmentation_generators(cfg).tau;
  // nu rows
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (c == l) CHECK(m.at(l, c) == nus[l]);
      else CHECK(m.at(l, c).is_zero());
    }
  }
  // pair rows in the order x2x3, x1x3, x1x2
  CHECK(m.row_labels()[3] == "x2x3");
  CHECK(m.row_labels()[4] == "x1x3");
  CHECK(m.row_labels()[5] == "x1x2");
  CHECK(m.at(3, 1) == -taus[2]);
  CHECK(m.at(3, 2) == taus[1]);
  CHECK(m.at(3, 0).is_zero());
  CHECK(m.at(4, 0) == -taus[2]);
  CHECK(m.at(4, 2) == taus[0]);
  CHECK(m.at(5, 0) == -taus[1]);
  CHECK(m.at(5, 1) == taus[0]);

  // s = 1: single nu row, no pair rows
  FiniteAbelianGroup c9({9});
  InertiaConfig c9cfg = make_config(c9, full_subgroup(c9), full_subgroup(c9), 0);
  GroupRingMatrix m1 = relation_matrix(c9cfg);
  CHECK(m1.rows() == 1);
  CHECK(m1.cols() == 1);
  GroupRingMatrix n1 = pair_relation_matrix(c9, augmentation_generators(c9cfg).tau);
  CHECK(n1.rows() == 0);

  // s = 2 rows: (nu1, 0), (0, nu2), (-tau2, tau1)
  FiniteAbelianGroup g33({3, 3});
  InertiaConfig cfg2 = make_config(g33, full_subgroup(g33), full_subgroup(g33), 0);
  GroupRingMatrix m2 = relation_matrix(cfg2);
  auto nus2 = part_norms(cfg2);
  auto taus2 = augmentation_generators(cfg2).tau;
  REQUIRE(m2.rows() == 3);
  CHECK(m2.at(0, 0) == nus2[0]);
  CHECK(m2.at(1, 1) == nus2[1]);
  CHECK(m2.at(2, 0) == -taus2[1]);
  CHECK(m2.at(2, 1) == taus2[0]);
}

TEST_CASE("N_2 fitting ideals") {
  FiniteAbelianGroup g({3, 3});
  InertiaConfig cfg = make_config(g, full_subgroup(g), full_subgroup(g), 0);
  auto taus = augmentation_generators(cfg).tau;
  GroupRingMatrix n2 = pair_relation_matrix(g, taus);
  CHECK(fitt_i(n2, 0).is_zero());
  CHECK(fitt_i(n2, 1).equals(FractionalIdeal::from_generators(g, taus)));
  CHECK(fitt_i(n2, 2).equals(FractionalIdeal::unit(g)));
}

TEST_CASE("syzygy presentation") {
  FiniteAbelianGroup c3({3});
  // single unit generator: free module, empty relation module
  GroupRingMatrix free1 = syzygy_presentation(c3, {GroupRingElement::one(c3)});
  CHECK(free1.rows() == 0);
  PresentedModule fm{free1};
  CHECK(fitting_ideals(fm.presentation)[0].is_zero());

  // principal: cokernel of (nu) has Fitt_0 = (nu)
  GroupRingElement nu = norm_element(full_subgroup(c3));
  GroupRingMatrix pres = syzygy_presentation(c3, {nu});
  CHECK(fitt_i(pres, 0).equals(FractionalIdeal::principal(nu)));

  // two taus over C3xC3: all Fitting ideals match the block matrix
  FiniteAbelianGroup g({3, 3});
  InertiaConfig cfg = make_config(g, full_subgroup(g), full_subgroup(g), 0);
  auto taus = augmentation_generators(cfg).tau;
  auto from_syzygy = fitting_ideals(syzygy_presentation(g, taus));
  auto from_block = fitting_ideals(relation_matrix(cfg));
  REQUIRE(from_syzygy.size() == from_block.size());
  for (std::size_t i = 0; i < from_block.size(); ++i)
    CHECK(from_syzygy[i].equals(from_block[i]));
}

TEST_CASE("quotient fitting identity on random modules") {
  // Fitt_0(X/IX) = sum I^i Fitt_i(X) with both sides computed separately.
  std::mt19937_64 rng(20250809);
  FiniteAbelianGroup g({3, 3});
  GroupRingElement one = GroupRingElement::one(g);
  GroupRingElement s1 = GroupRingElement::monomial(g, g.index_of({1, 0}));
  GroupRingElement tau1 = s1 - one;
  GroupRingElement nu1 = norm_element(subgroup_from_tuples(g, {{1, 0}}));
  std::vector<GroupRingElement> pool = {GroupRingElement(g), one, -one,
                                        s1, -s1, tau1, nu1};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  InertiaConfig cfg = make_config(g, full_subgroup(g), full_subgroup(g), 0);
  GroupRingElement gl = g_lift_element(cfg);

  for (int trial = 0; trial < 10; ++trial) {
    std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 2) % 2;
    GroupRingMatrix m(g, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = pool[pick(rng)];
    PresentedModule x{m};
    FractionalIdeal lhs = quotient_fitting_ideal(x, gl);
    // oracle: present X/(gl)X directly by appending gl*e_k rows
    GroupRingMatrix q(g, rows + cols, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) q.at(i, j) = m.at(i, j);
    for (std::size_t k = 0; k < cols; ++k) q.at(rows + k, k) = gl;
    FractionalIdeal rhs = fitt_i(q, 0);
    CHECK(lhs.equals(rhs));
  }
}
