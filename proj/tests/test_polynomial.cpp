#include "toralg/polynomial.hpp"

#include <random>

#include "doctest.h"
#include "paper_data.hpp"
#include "toralg/exact_linalg.hpp"

using namespace toralg;

namespace {

IntPoly make(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(v);
}

// brute-force reducibility oracle for monic integer polynomials of degree
// <= 4: look for a monic factor of degree 1 or 2 with coefficients bounded
// by the root bound
bool reducible_bruteforce(const IntPoly& f) {
  int n = f.degree();
  REQUIRE(f.monic());
  long rb = 1;
  for (const auto& c : f.c) {
    long a = std::abs(c.get_si());
    if (a > rb) rb = a;
  }
  long b1 = rb + 1;           // |root| bound
  long b2 = 2 * b1;           // |sum of two roots|
  long b3 = b1 * b1;          // |product of two roots|
  for (long r = -b1; r <= b1; ++r) {
    IntPoly g = make({-r, 1});
    auto dm = divmod(RatPoly(f), RatPoly(g));
    if (dm.rem.zero()) return true;
  }
  if (n >= 4) {
    for (long b = -b2; b <= b2; ++b)
      for (long c = -b3; c <= b3; ++c) {
        IntPoly g = make({c, b, 1});
        auto dm = divmod(RatPoly(f), RatPoly(g));
        if (dm.rem.zero()) {
          bool integral = true;
          for (const auto& q : dm.quot.c)
            if (!is_integer(q)) integral = false;
          if (integral) return true;
        }
      }
  }
  return false;
}

}  // namespace

TEST_CASE("basic ops") {
  IntPoly x2m1 = make({-1, 0, 1});
  IntPoly xm1 = make({-1, 1});
  IntPoly xp1 = make({1, 1});
  CHECK(mul(xp1, xm1) == x2m1);
  RatPoly g = poly_gcd(RatPoly(x2m1), RatPoly(xm1));
  CHECK(g == RatPoly(xm1));

  // f mod (x - 1) is the constant f(1)
  RatPoly r = poly_mod(RatPoly(paper::f2a()), RatPoly(xm1));
  CHECK(r.degree() == 0);
  CHECK(r.c[0] == Rat(-1));
  CHECK(paper::f2a()(Int(1)) == -1);

  CHECK_THROWS_AS(divmod(RatPoly(xm1), RatPoly()), domain_error);
}

TEST_CASE("xgcd bezout identity") {
  RatPoly p(make({-1, 0, 1}));   // x^2 - 1
  RatPoly q(make({2, -3, 1}));   // (x-1)(x-2)
  auto r = poly_xgcd(p, q);
  RatPoly lhs = add(mul(r.a, p), mul(r.b, q));
  CHECK(lhs == r.g);
  CHECK(r.g == RatPoly(make({-1, 1})));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == make({-1, 1}));
  CHECK(cyclotomic(4) == make({1, 0, 1}));
  // derived by dividing x^12 - 1 by the proper-divisor cyclotomics
  IntPoly x12m1;
  x12m1.c.assign(13, Int(0));
  x12m1.c[0] = -1;
  x12m1.c[12] = 1;
  x12m1.normalize();
  IntPoly q = x12m1;
  for (unsigned d : {1u, 2u, 3u, 4u, 6u}) q = exact_div(q, cyclotomic(d));
  CHECK(cyclotomic(12) == q);
  CHECK(cyclotomic(12) == make({1, 0, -1, 0, 1}));

  for (unsigned k = 1; k <= 30; ++k) {
    IntPoly prod = make({1});
    for (unsigned d = 1; d <= k; ++d)
      if (k % d == 0) prod = mul(prod, cyclotomic(d));
    IntPoly want;
    want.c.assign(k + 1, Int(0));
    want.c[0] = -1;
    want.c[k] = 1;
    want.normalize();
    CHECK(prod == want);
  }
}

TEST_CASE("companion matrices match the paper") {
  CHECK(companion(make({-1, -1, 1})) == IntMatrix{{0, 1}, {1, 1}});
  CHECK(companion(paper::f2a()) == paper::a2a());
  CHECK(companion(paper::f2b()) == paper::a2b());
  CHECK_THROWS_AS(companion(make({1, 2})), domain_error);  // non-monic
}

TEST_CASE("charpoly(companion(p)) == p for random monic p") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int t = 0; t < 30; ++t) {
    int deg = 1 + t % 6;
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = Int(e(rng));
    c[static_cast<std::size_t>(deg)] = 1;
    IntPoly p(c);
    CHECK(charpoly(companion(p)) == p);
  }
}

TEST_CASE("eval at matrix") {
  IntMatrix a = paper::a2a();
  RatPoly id_poly(make({0, 1}));
  CHECK(eval_poly_at_matrix(id_poly, a) == to_rational(a));

  // lambda_2 = 2 - 4*lambda - lambda^2 gives B
  RatPoly p(make({2, -4, -1}));
  CHECK(eval_poly_at_matrix(p, a) == to_rational(paper::b2a()));

  CHECK(eval_poly_at_matrix(RatPoly(paper::f2a()), a).is_zero());
}

TEST_CASE("irreducibility: golden cases") {
  CHECK(is_irreducible_q(make({-2, 0, 1})).irreducible);
  CHECK(is_irreducible_q(paper::f2a()).irreducible);
  auto r = is_irreducible_q(make({-1, 0, 1}));
  CHECK(!r.irreducible);
  REQUIRE(r.factor.has_value());
  auto dm = divmod(RatPoly(make({-1, 0, 1})), RatPoly(*r.factor));
  CHECK(dm.rem.zero());
  CHECK_THROWS_AS(is_irreducible_q(make({5})), domain_error);
}

TEST_CASE("irreducibility agrees with brute force") {
  // exhaustive over small cubics, seeded sample of quartics
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        IntPoly f = make({c, b, a, 1});
        CHECK(is_irreducible_q(f).irreducible == !reducible_bruteforce(f));
      }
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> e(-5, 5);
  for (int t = 0; t < 120; ++t) {
    IntPoly f = make({e(rng), e(rng), e(rng), e(rng), 1});
    CHECK(is_irreducible_q(f).irreducible == !reducible_bruteforce(f));
  }
}

TEST_CASE("factor_q splits products and respects multiplicity") {
  IntPoly f = mul(mul(paper::f2a(), paper::f2a()), paper::f3a());
  auto fac = factor_q(f);
  REQUIRE(fac.size() == 2);
  bool saw_2a = false, saw_3a = false;
  for (const auto& g : fac) {
    if (g.poly == paper::f2a()) {
      saw_2a = true;
      CHECK(g.multiplicity == 2);
    }
    if (g.poly == paper::f3a()) {
      saw_3a = true;
      CHECK(g.multiplicity == 1);
    }
  }
  CHECK(saw_2a);
  CHECK(saw_3a);
}

TEST_CASE("sturm real-root counts") {
  CHECK(count_real_roots(make({-2, 0, 1})) == 2);   // x^2 - 2
  CHECK(count_real_roots(make({1, 0, 1})) == 0);    // x^2 + 1
  CHECK(count_real_roots(paper::f2a()) == 3);       // totally real
  CHECK(count_real_roots(paper::f3a()) == 3);
  CHECK(count_real_roots(paper::f3b()) == 3);
  CHECK(count_real_roots(paper::f3c()) == 3);
  CHECK(count_real_roots(paper::f2b()) == 3);
  // (x^2-2)(x^2+1) has two real roots
  CHECK(count_real_roots(mul(make({-2, 0, 1}), make({1, 0, 1}))) == 2);
}

TEST_CASE("squarefree decomposition") {
  IntPoly f = mul(mul(make({-1, 1}), make({-1, 1})), make({-2, 1}));
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == make({-2, 1}));
  CHECK(parts[1] == make({-1, 1}));
}
