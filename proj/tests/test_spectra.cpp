#include "toralg/spectra.hpp"

#include <cmath>
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

// bisection oracle for real roots of a polynomial with all-real spectrum
std::vector<double> bisect_roots(const IntPoly& p, double lo, double hi,
                                 int pieces = 20000) {
  auto f = [&](double x) {
    double r = 0;
    for (std::size_t i = p.c.size(); i-- > 0;) r = r * x + to_double(p.c[i]);
    return r;
  };
  std::vector<double> out;
  double step = (hi - lo) / pieces;
  double prev = f(lo);
  for (int i = 1; i <= pieces; ++i) {
    double x = lo + i * step;
    double cur = f(x);
    if (prev == 0) out.push_back(lo + (i - 1) * step);
    if (prev * cur < 0) {
      double a = x - step, b = x;
      for (int it = 0; it < 200; ++it) {
        double mid = (a + b) / 2;
        if (f(a) * f(mid) <= 0)
          b = mid;
        else
          a = mid;
      }
      out.push_back((a + b) / 2);
    }
    prev = cur;
  }
  return out;
}

}  // namespace

TEST_CASE("roots: closed forms") {
  auto s = roots(make({-1, 0, 1}));
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(std::abs(s.eigenvalues[0].real() + 1) < 1e-12);
  CHECK(std::abs(s.eigenvalues[1].real() - 1) < 1e-12);

  auto fib = roots(make({-1, -1, 1}));
  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(fib.eigenvalues[1].real() - phi) < 1e-10);
  CHECK(std::abs(fib.eigenvalues[0].real() + 1 / phi) < 1e-10);
}

TEST_CASE("roots of Example 2a's cubic against a bisection oracle") {
  auto s = roots(paper::f2a());
  REQUIRE(s.eigenvalues.size() == 3);
  for (const auto& z : s.eigenvalues) CHECK(std::abs(z.imag()) < 1e-10);
  auto oracle = bisect_roots(paper::f2a(), -10, 10);
  REQUIRE(oracle.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(s.eigenvalues[i].real() - oracle[i]) < 1e-8);
}

TEST_CASE("roots handle repeated factors exactly") {
  IntPoly f = mul(paper::f2a(), paper::f2a());
  auto s = roots(f);
  REQUIRE(s.eigenvalues.size() == 6);
  // each root doubled
  for (std::size_t i = 0; i + 1 < 6; i += 2)
    CHECK(std::abs(s.eigenvalues[i].real() - s.eigenvalues[i + 1].real()) <
          1e-12);
}

TEST_CASE("ergodicity: exact cyclotomic certificates") {
  auto rot = is_ergodic(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(!rot.ergodic);
  CHECK(rot.cyclotomic_k == 4);

  CHECK(is_ergodic(IntMatrix{{2, 1}, {1, 1}}).ergodic);
  CHECK(is_ergodic(paper::a2a()).ergodic);
  CHECK(!is_ergodic(IntMatrix::identity(2)).ergodic);

  CHECK_THROWS_AS(is_ergodic(IntMatrix(2, 2)), domain_error);
}

TEST_CASE("ergodicity invariant under unimodular conjugation") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 10; ++t) {
    IntMatrix w = IntMatrix::identity(3);
    for (int s = 0; s < 10; ++s) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Int c(coef(rng));
      for (std::size_t k = 0; k < 3; ++k)
        w(static_cast<std::size_t>(i), k) +=
            c * w(static_cast<std::size_t>(j), k);
    }
    IntMatrix m = paper::a2a();
    IntMatrix conj = w * m * inverse_unimodular(w);
    CHECK(is_ergodic(conj).ergodic == is_ergodic(m).ergodic);
  }
}

TEST_CASE("hyperbolicity") {
  CHECK(!is_hyperbolic(IntMatrix::identity(2)));
  CHECK(is_hyperbolic(IntMatrix{{2, 1}, {1, 1}}));
  CHECK(is_hyperbolic(paper::b2b()));
  // all corpus generators are hyperbolic
  for (const auto& m : {paper::a2a(), paper::b2a(), paper::ap2a(),
                        paper::a3a(), paper::b3a(), paper::a3c(),
                        paper::bp3c()})
    CHECK(is_hyperbolic(m));
}

TEST_CASE("entropy closed form and symmetry") {
  CHECK(entropy(IntMatrix::identity(3)) == 0.0);
  double h = entropy(IntMatrix{{2, 1}, {1, 1}});
  CHECK(std::abs(h - std::log((3 + std::sqrt(5.0)) / 2)) < 1e-10);

  for (const auto& m : {paper::a2a(), paper::b2a(), paper::a3a(),
                        paper::a3b(), paper::a3c()}) {
    CHECK(std::abs(entropy(m) - entropy(inverse_unimodular(m))) < 1e-9);
    for (unsigned long k = 1; k <= 4; ++k)
      CHECK(std::abs(entropy(pow(m, k)) - static_cast<double>(k) * entropy(m)) <
            1e-9);
  }
}

TEST_CASE("entropy of Example 2a's A against the root oracle") {
  auto oracle = bisect_roots(paper::f2a(), -10, 10);
  double h = 0;
  for (double r : oracle)
    if (std::abs(r) > 1) h += std::log(std::abs(r));
  CHECK(std::abs(entropy(paper::a2a()) - h) < 1e-8);
}

TEST_CASE("all_roots_real matches sturm") {
  CHECK(all_roots_real(paper::f2a()));
  CHECK(all_roots_real(paper::f3c()));
  CHECK(!all_roots_real(make({1, 0, 1})));
}
