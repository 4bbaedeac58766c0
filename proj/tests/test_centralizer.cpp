#include "toralg/centralizer.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "paper_data.hpp"
#include "toralg/exact_linalg.hpp"

using namespace toralg;

namespace {

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

ZdAction action_2a() { return new_action({paper::a2a(), paper::b2a()}); }

NFElement elem(const NumberField& k, std::initializer_list<Rat> cs) {
  return NFElement(k, std::vector<Rat>(cs));
}

}  // namespace

TEST_CASE("commutant ranks match the worked examples") {
  CHECK(commutant_z_basis(action_2a()).rank() == 3);
  CHECK(commutant_z_basis(new_action({IntMatrix::identity(2)})).rank() == 4);

  ZdAction square = new_action({direct_sum(paper::a3a(), paper::a3a()),
                                direct_sum(paper::b3a(), paper::b3a())});
  CommutantBasis big = commutant_z_basis(square);
  CHECK(big.rank() == 12);
  CHECK(!big.is_abelian());

  // alpha_3 x alpha has an abelian commutant of rank 6
  ZdAction mixed =
      new_action({direct_sum(pow(paper::a3a(), 3), paper::a3a()),
                  direct_sum(pow(paper::b3a(), 3), paper::b3a())});
  CommutantBasis mix = commutant_z_basis(mixed);
  CHECK(mix.rank() == 6);
  CHECK(mix.is_abelian());
}

TEST_CASE("commutant closure under multiplication") {
  CommutantBasis c = commutant_z_basis(action_2a());
  for (const auto& x : c.basis)
    for (const auto& y : c.basis) {
      auto coords = commutant_coordinates(c, x * y);
      CHECK(coords.has_value());
    }
}

TEST_CASE("gamma map: orders of Example 2a") {
  NumberField k(paper::f2a());
  ZdAction min_action = action_2a();
  CommutantBasis cmin = commutant_z_basis(min_action);
  GammaMapResult gmin = gamma_map(min_action, k, paper::a2a(), cmin);
  CHECK(gmin.index_over_power_basis == Rat(1));  // gamma(C) = Z[lambda]

  ZdAction max_action = new_action({paper::ap2a(), paper::bp2a()});
  CommutantBasis cmax = commutant_z_basis(max_action);
  // witness: A' has the same irreducible charpoly
  GammaMapResult gmax = gamma_map(max_action, k, paper::ap2a(), cmax);
  CHECK(gmax.index_over_power_basis == Rat(3));  // [O_K : Z[lambda]] = 3

  // injectivity on random commutant combinations
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    IntMatrix x(3, 3), y(3, 3);
    for (std::size_t b = 0; b < cmin.basis.size(); ++b) {
      Int cx(coef(rng)), cy(coef(rng));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          x(i, j) += cx * cmin.basis[b](i, j);
          y(i, j) += cy * cmin.basis[b](i, j);
        }
    }
    NFElement gx = gamma_of_matrix(k, paper::a2a(), x);
    NFElement gy = gamma_of_matrix(k, paper::a2a(), y);
    CHECK((gx == gy) == (x == y));
    // ring homomorphism
    CHECK(gamma_of_matrix(k, paper::a2a(), x * y) == gx * gy);
  }
}

TEST_CASE("torsion elements") {
  ZdAction a = action_2a();
  auto t = torsion_elements(a, commutant_z_basis(a));
  CHECK(t.certified_complete);
  REQUIRE(t.elements.size() == 2);
  CHECK(t.elements[1] == IntMatrix::identity(3));
  CHECK(t.elements[0] == -IntMatrix::identity(3));

  // identity action on T^2: all finite-order unimodular 2x2 matrices in the
  // box; cross-check count against a direct enumeration oracle
  ZdAction id2 = new_action({IntMatrix::identity(2)});
  auto t2 = torsion_elements(id2, commutant_z_basis(id2), 2);
  std::size_t oracle = 0;
  for (int a11 = -2; a11 <= 2; ++a11)
    for (int a12 = -2; a12 <= 2; ++a12)
      for (int a21 = -2; a21 <= 2; ++a21)
        for (int a22 = -2; a22 <= 2; ++a22) {
          IntMatrix m{{a11, a12}, {a21, a22}};
          Int d = det(m);
          if (d != 1 && d != -1) continue;
          IntMatrix p = m;
          bool fin = false;
          for (int k = 1; k <= 12; ++k) {
            if (p == IntMatrix::identity(2)) {
              fin = true;
              break;
            }
            p = p * m;
          }
          if (fin) ++oracle;
        }
  CHECK(t2.elements.size() == oracle);

  ZdAction a3 = new_action({paper::a3a(), paper::b3a()});
  auto t3 = torsion_elements(a3, commutant_z_basis(a3));
  CHECK(t3.certified_complete);
  CHECK(t3.elements.size() == 2);
}

TEST_CASE("unit search basics") {
  ZdAction a = action_2a();
  CommutantBasis c = commutant_z_basis(a);
  auto box0 = unit_search(c, 0);
  CHECK(box0.empty());

  auto units = unit_search(c, 10);
  // contains A, B, A^-1 B and the identity, modulo sign normalization
  auto contains_pm = [&](const IntMatrix& m) {
    for (const auto& u : units)
      if (u == m || u == -m) return true;
    return false;
  };
  CHECK(contains_pm(IntMatrix::identity(3)));
  CHECK(contains_pm(paper::a2a()));
  CHECK(contains_pm(paper::b2a()));
  CHECK(contains_pm(inverse_unimodular(paper::a2a()) * paper::b2a()));
  // every result is unimodular and commutes with the generators
  for (const auto& u : units) {
    Int d = det(u);
    CHECK((d == 1 || d == -1));
    CHECK(u * paper::a2a() == paper::a2a() * u);
  }
}

TEST_CASE("log lattice index") {
  NumberField k(paper::f2a());
  NFElement lam = NFElement::generator(k);
  NFElement lam2 = elem(k, {Rat(2), Rat(-4), Rat(-1)});
  auto same = log_lattice_index({lam, lam2}, {lam, lam2});
  CHECK(same.index == 1);
  auto doubled = log_lattice_index({lam * lam, lam2}, {lam, lam2});
  CHECK(doubled.index == 2);
  CHECK_THROWS_AS(log_lattice_index({lam}, {lam, lam2}), domain_error);
}

TEST_CASE("unit exponent reconstruction") {
  ZdAction a = action_2a();
  NumberField k(paper::f2a());
  // A^2 B^-1 is in the group
  IntMatrix x = pow(paper::a2a(), 2) * inverse_unimodular(paper::b2a());
  auto e = unit_over_generators(a, k, paper::a2a(), x);
  REQUIRE(e.resolved);
  CHECK(e.in_group);
  CHECK(e.q == 1);
  CHECK(e.p == std::vector<Int>{2, -1});

  // Example 2b max: the square root of A' has exponents (1/2, 0)
  ZdAction a2bmax = new_action({paper::ap2b(), paper::bp2b()});
  NumberField k2b(paper::f2b());
  auto e2 = unit_over_generators(a2bmax, k2b, paper::ap2b(), paper::m2b());
  REQUIRE(e2.resolved);
  CHECK(!e2.in_group);
  CHECK(e2.q == 2);
  CHECK(e2.p == std::vector<Int>{1, 0});
}

TEST_CASE("maximality verdicts for Example 2a") {
  NumberField k(paper::f2a());
  ZdAction min_action = action_2a();
  auto vmin = is_maximal_cartan(min_action, k, paper::a2a(), {}, 50);
  CHECK(vmin.verdict == MaximalityVerdict::maximal);

  NFElement eps = elem(k, {make_rat(1, 3), make_rat(5, 3), make_rat(1, 3)});
  NFElement eps1 = eps - NFElement::one(k);
  ZdAction max_action = new_action({paper::ap2a(), paper::bp2a()});
  auto vmax =
      is_maximal_cartan(max_action, k, paper::ap2a(), {eps, eps1}, 50);
  CHECK(vmax.verdict == MaximalityVerdict::not_maximal);
  REQUIRE(vmax.witness.has_value());
  // witness is a fundamental unit of O_K
  CHECK((*vmax.witness == eps || *vmax.witness == eps1));

  // search alone (no fundamental-unit hints) also finds non-maximality
  auto vsearch = is_maximal_cartan(max_action, k, paper::ap2a(), {}, 10);
  CHECK(vsearch.verdict == MaximalityVerdict::not_maximal);
}

TEST_CASE("maximality of Example 3c (both orders)") {
  // the field presented by the first generator's minimal polynomial
  // (that of -a, namely x^3 + x^2 - 11x + 1)
  NumberField k(charpoly(paper::a3c()));
  ZdAction amin = new_action({paper::a3c(), paper::b3c()});
  ZdAction amax = new_action({paper::ap3c(), paper::bp3c()});
  CHECK(is_maximal_cartan(amin, k, paper::a3c(), {}, 25).verdict ==
        MaximalityVerdict::maximal);
  CHECK(is_maximal_cartan(amax, k, paper::ap3c(), {}, 25).verdict ==
        MaximalityVerdict::maximal);
}

TEST_CASE("affine reports of Example 2b") {
  NumberField k(paper::f2b());
  NFElement u1 = elem(k, {make_rat(1, 2), Rat(-2), make_rat(1, 2)});
  NFElement u2 = elem(k, {Rat(-2), Rat(1), Rat(0)});

  ZdAction amin = new_action({paper::a2b(), paper::b2b()});
  AffineReport rmin = affine_report(amin, k, paper::a2b(), {u1, u2});
  CHECK(rmin.fix_order == 2);
  CHECK(rmin.unit_index == 1);
  CHECK(rmin.index_zaff == 4);
  CHECK(rmin.zaff_torsion_order == 4);
  CHECK(rmin.abstract_type == "Z^2 x Z/2 x Z/2");

  ZdAction amax = new_action({paper::ap2b(), paper::bp2b()});
  AffineReport rmax = affine_report(amax, k, paper::ap2b(), {u1, u2});
  CHECK(rmax.fix_order == 4);
  CHECK(rmax.unit_index == 2);
  CHECK(rmax.index_zaff == 16);
  CHECK(rmax.zaff_torsion_order == 8);
  CHECK(rmax.abstract_type == "Z^2 x Z/2 x Z/2 x Z/2");
}

TEST_CASE("affine reports of Example 3a agree (corrected fixed points)") {
  NumberField k(paper::f3a());
  ZdAction a = new_action({paper::a3a(), paper::b3a()});
  ZdAction ap = new_action({paper::ap3a(), paper::bp3a()});
  AffineReport r1 = affine_report(a, k, paper::a3a(), {});
  AffineReport r2 = affine_report(ap, k, paper::ap3a(), {});
  CHECK(r1.fix_order == 2);
  CHECK(r2.fix_order == 2);
  CHECK(r1.abstract_type == "Z^2 x Z/2 x Z/2");
  CHECK(r2.abstract_type == r1.abstract_type);
}
