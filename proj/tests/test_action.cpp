#include "toralg/action.hpp"

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
ZdAction action_3a() { return new_action({paper::a3a(), paper::b3a()}); }

std::vector<Rat> rat_vec(std::initializer_list<Rat> v) { return v; }

IntMatrix random_unimodular3(std::mt19937& rng) {
  IntMatrix w = IntMatrix::identity(3);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < 10; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c(coef(rng));
    for (std::size_t t = 0; t < 3; ++t)
      w(static_cast<std::size_t>(i), t) += c * w(static_cast<std::size_t>(j), t);
  }
  return w;
}

}  // namespace

TEST_CASE("new_action validation") {
  CHECK_NOTHROW(new_action({IntMatrix::identity(3)}));
  ZdAction a = action_2a();
  CHECK(a.d == 2);
  CHECK(a.n == 3);

  // non-commuting pair rejected with the pair named
  IntMatrix swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK_THROWS_WITH_AS(new_action({paper::a2a(), paper::a2a() * swap01}),
                       doctest::Contains("do not commute"), domain_error);
  // non-unimodular rejected
  CHECK_THROWS_WITH_AS(new_action({IntMatrix{{2, 0}, {0, 1}}}),
                       doctest::Contains("determinant"), domain_error);
}

TEST_CASE("rho evaluation with exact inverses") {
  ZdAction a = action_2a();
  CHECK(rho(a, {0, 0}) == IntMatrix::identity(3));
  CHECK(rho(a, {1, 0}) == paper::a2a());
  IntMatrix am1b = rho(a, {-1, 1});
  CHECK(paper::a2a() * am1b == paper::b2a());
  CHECK(rho(a, {2, -1}) ==
        paper::a2a() * paper::a2a() * inverse_unimodular(paper::b2a()));
}

TEST_CASE("lyapunov data: d=1 closed form") {
  ZdAction a = new_action({IntMatrix{{2, 1}, {1, 1}}});
  LyapunovData ld = lyapunov_data(a);
  REQUIRE(ld.exponents.size() == 2);
  double h = std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(std::abs(std::abs(ld.exponents[0][0]) - h) < 1e-9);
  CHECK(std::abs(ld.exponents[0][0] + ld.exponents[1][0]) < 1e-12);
}

TEST_CASE("lyapunov data of Example 2a: rows sum to zero, one orbit") {
  LyapunovData ld = lyapunov_data(action_2a());
  REQUIRE(ld.exponents.size() == 3);
  REQUIRE(ld.galois_blocks.size() == 1);
  for (int i = 0; i < 2; ++i) {
    double s = 0;
    for (int k = 0; k < 3; ++k)
      s += ld.multiplicities[static_cast<std::size_t>(k)] *
           ld.exponents[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    CHECK(std::abs(s) < 1e-9);
  }
  // Example 3a rows all nonzero
  for (const auto& row : lyapunov_data(action_3a()).exponents)
    CHECK(std::hypot(row[0], row[1]) > 1e-6);
}

TEST_CASE("lyapunov data handles product actions with multiplicity") {
  ZdAction prod = new_action({direct_sum(paper::a3a(), paper::a3a()),
                              direct_sum(paper::b3a(), paper::b3a())});
  LyapunovData ld = lyapunov_data(prod);
  REQUIRE(ld.exponents.size() == 3);  // three tuples, each doubled
  for (int m : ld.multiplicities) CHECK(m == 2);
}

TEST_CASE("entropy function matches per-element entropy") {
  ZdAction a = action_2a();
  LyapunovData ld = lyapunov_data(a);
  for (long n1 = -2; n1 <= 2; ++n1)
    for (long n2 = -2; n2 <= 2; ++n2) {
      double via_lyap = entropy_function(ld, {n1, n2});
      if (n1 == 0 && n2 == 0) {
        CHECK(via_lyap == 0.0);
        continue;
      }
      double direct = entropy(rho(a, {n1, n2}));
      CHECK(std::abs(via_lyap - direct) < 1e-8);
    }
  // homogeneity
  double h10 = entropy_function(ld, {1, 0});
  CHECK(std::abs(entropy_function(ld, {2, 0}) - 2 * h10) < 1e-9);
}

TEST_CASE("entropy additivity inside a chamber") {
  ZdAction a = action_2a();
  LyapunovData ld = lyapunov_data(a);
  WeylChamberSet wc = weyl_chambers(a);
  for (const auto& ch : wc.chambers) {
    double mid = (ch.from_angle + ch.to_angle) / 2;
    // two integer-ish directions near the chamber midline
    double c = std::cos(mid), s = std::sin(mid);
    std::vector<long> n1 = {std::lround(100 * c), std::lround(100 * s)};
    std::vector<long> n2 = {std::lround(200 * c), std::lround(200 * s)};
    std::vector<long> sum = {n1[0] + n2[0], n1[1] + n2[1]};
    double lhs = entropy_function(ld, sum);
    double rhs = entropy_function(ld, n1) + entropy_function(ld, n2);
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("Example 1b: entropy functions agree on the grid") {
  IntMatrix a3 = pow(paper::a3a(), 3), b3 = pow(paper::b3a(), 3);
  IntMatrix a2 = pow(paper::a3a(), 2), b2 = pow(paper::b3a(), 2);
  ZdAction alpha3x1 = new_action({direct_sum(a3, paper::a3a()),
                                  direct_sum(b3, paper::b3a())});
  ZdAction alpha2x2 = new_action({direct_sum(a2, a2), direct_sum(b2, b2)});
  LyapunovData l1 = lyapunov_data(alpha3x1);
  LyapunovData l2 = lyapunov_data(alpha2x2);
  LyapunovData lbase = lyapunov_data(action_3a());
  for (long n1 = -3; n1 <= 3; ++n1)
    for (long n2 = -3; n2 <= 3; ++n2) {
      double h1 = entropy_function(l1, {n1, n2});
      double h2 = entropy_function(l2, {n1, n2});
      CHECK(std::abs(h1 - h2) < 1e-8);
      CHECK(std::abs(h1 - 4 * entropy_function(lbase, {n1, n2})) < 1e-8);
    }
}

TEST_CASE("weyl chambers of Example 2a: six sectors") {
  WeylChamberSet wc = weyl_chambers(action_2a());
  CHECK(wc.chambers.size() == 6);
  CHECK(wc.lines.size() == 3);
  CHECK(!wc.degenerate);
  // entropy is continuous across walls: compare adjacent formulas on rays
  for (std::size_t i = 0; i < wc.chambers.size(); ++i) {
    const auto& cur = wc.chambers[i];
    const auto& nxt = wc.chambers[(i + 1) % wc.chambers.size()];
    double wall = cur.to_angle;
    double x = std::cos(wall), y = std::sin(wall);
    double hc = cur.coeff_n1 * x + cur.coeff_n2 * y;
    double hn = nxt.coeff_n1 * x + nxt.coeff_n2 * y;
    CHECK(std::abs(hc - hn) < 1e-8);
  }
}

TEST_CASE("weyl chambers degenerate for {A, A}") {
  ZdAction a = new_action({paper::a2a(), paper::a2a()});
  WeylChamberSet wc = weyl_chambers(a);
  CHECK(wc.degenerate);
  CHECK(wc.chambers.size() == 2);
  CHECK_THROWS_AS(weyl_chambers(new_action({paper::a2a()})), domain_error);
}

TEST_CASE("condition (R)") {
  auto r = satisfies_R(action_2a());
  REQUIRE(r.verdict == SearchVerdict::yes);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->first == std::vector<long>{1, 0});
  CHECK(r.witness->second == std::vector<long>{0, 1});

  ZdAction trivial =
      new_action({IntMatrix::identity(2), IntMatrix::identity(2)});
  CHECK(satisfies_R(trivial).verdict == SearchVerdict::not_verified);

  // product actions still certify
  ZdAction prod = new_action({direct_sum(paper::a3a(), paper::a3a()),
                              direct_sum(paper::b3a(), paper::b3a())});
  CHECK(satisfies_R(prod).verdict == SearchVerdict::yes);
}

TEST_CASE("irreducibility verdicts") {
  auto r = is_irreducible(action_2a());
  REQUIRE(r.verdict == SearchVerdict::yes);
  CHECK(*r.witness == std::vector<long>{1, 0});

  ZdAction prod = new_action({direct_sum(paper::a3a(), paper::a3a()),
                              direct_sum(paper::b3a(), paper::b3a())});
  auto rp = is_irreducible(prod);
  REQUIRE(rp.verdict == SearchVerdict::no);
  REQUIRE(rp.invariant_subspace.has_value());
  std::size_t dim = rp.invariant_subspace->rows();
  CHECK(dim > 0);
  CHECK(dim < 6);
  // the subspace is invariant: rows * gen stays inside the row lattice's
  // rational span, checked via saturation
  IntMatrix sat = saturate_rows(*rp.invariant_subspace);
  for (const auto& g : prod.gens) {
    IntMatrix mapped = sat * g;
    for (std::size_t i = 0; i < mapped.rows(); ++i)
      CHECK(lattice_contains(sat, mapped.row(i)));
  }

  auto rid = is_irreducible(new_action({IntMatrix::identity(3)}));
  CHECK(rid.verdict == SearchVerdict::no);
}

TEST_CASE("cartan detection") {
  CHECK(is_cartan(action_2a()).cartan);
  CHECK(is_cartan(action_3a()).cartan);
  CHECK(is_cartan(new_action({paper::ap3a(), paper::bp3a()})).cartan);
  CHECK(is_cartan(new_action({paper::a3c(), paper::b3c()})).cartan);
  CHECK(is_cartan(new_action({paper::ap3c(), paper::bp3c()})).cartan);

  // d != n-1
  ZdAction prod = new_action({direct_sum(paper::a3a(), paper::a3a()),
                              direct_sum(paper::b3a(), paper::b3a())});
  CHECK(!is_cartan(prod).cartan);
  // ergodic but complex eigenvalues: rotation-like rank-1 never reaches here
  ZdAction notcartan = new_action(
      {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}},
       IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}} *
           IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}});
  // x^3 - x - 1 has one real root and a complex pair
  CHECK(!is_cartan(notcartan).cartan);
}

TEST_CASE("fixed points of the worked examples") {
  ZdAction a2b = new_action({paper::a2b(), paper::b2b()});
  FixedPointData f = fixed_points(a2b);
  CHECK(f.order == 2);
  REQUIRE(f.representatives.size() == 2);
  CHECK(f.representatives[0] == rat_vec({Rat(0), Rat(0), Rat(0)}));
  CHECK(f.representatives[1] ==
        rat_vec({make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)}));

  ZdAction ap2b = new_action({paper::ap2b(), paper::bp2b()});
  FixedPointData fp = fixed_points(ap2b);
  CHECK(fp.order == 4);
  std::vector<std::vector<Rat>> expect = {
      rat_vec({Rat(0), Rat(0), Rat(0)}),
      rat_vec({Rat(0), Rat(0), make_rat(1, 2)}),
      rat_vec({make_rat(1, 2), make_rat(1, 2), Rat(0)}),
      rat_vec({make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)})};
  CHECK(fp.representatives == expect);

  // the source text claims a single fixed point here; the true
  // multiplication matrices give two (see the corrected bp3a note)
  CHECK(fixed_points(new_action({paper::ap3a(), paper::bp3a()})).order == 2);
  CHECK(fixed_points(action_3a()).order == 2);
  CHECK(fixed_points(new_action({paper::ap3c(), paper::bp3c()})).order == 4);

  CHECK_THROWS_AS(fixed_points(new_action({IntMatrix::identity(2)})),
                  domain_error);
}

TEST_CASE("fixed point order divides det(rho^n - I) and is conjugation invariant") {
  ZdAction a = new_action({paper::a2b(), paper::b2b()});
  Int order = fixed_points(a).order;
  for (long n1 = -2; n1 <= 2; ++n1)
    for (long n2 = -2; n2 <= 2; ++n2) {
      if (n1 == 0 && n2 == 0) continue;
      Int d = det(rho(a, {n1, n2}) - IntMatrix::identity(3));
      if (d == 0) continue;
      CHECK(abs(d) % order == 0);
    }
  std::mt19937 rng(2024);
  for (int t = 0; t < 8; ++t) {
    IntMatrix w = random_unimodular3(rng);
    IntMatrix wi = inverse_unimodular(w);
    ZdAction conj = new_action({w * paper::a2b() * wi, w * paper::b2b() * wi});
    CHECK(fixed_points(conj).order == order);
  }
}
