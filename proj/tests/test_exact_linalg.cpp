#include "toralg/exact_linalg.hpp"

#include <random>

#include "doctest.h"
#include "paper_data.hpp"
#include "toralg/lattice.hpp"
#include "toralg/polynomial.hpp"

using namespace toralg;

namespace {

// independent determinant oracle: cofactor expansion
Int det_cofactor(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int d = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    }
    d += Int(sign) * m(0, j) * det_cofactor(minor);
    sign = -sign;
  }
  return d;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntMatrix w = IntMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c(coef(rng));
    for (std::size_t t = 0; t < n; ++t)
      w(static_cast<std::size_t>(i), t) += c * w(static_cast<std::size_t>(j), t);
  }
  return w;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(n, n);
  for (auto& x : m.entries()) x = Int(e(rng));
  return m;
}

}  // namespace

TEST_CASE("det basics and oracle") {
  CHECK(det(IntMatrix::identity(3)) == 1);
  IntMatrix a = companion(paper::f2a());
  CHECK(a == paper::a2a());
  CHECK(det(a) == -1);
  CHECK(det(a) == det_cofactor(a));
  CHECK(det(paper::v2a()) != 0);
  CHECK(det(paper::v2a()) == det_cofactor(paper::v2a()));

  std::mt19937 rng(20260809);
  for (int t = 0; t < 25; ++t) {
    IntMatrix m = random_matrix(rng, 4, 9);
    CHECK(det(m) == det_cofactor(m));
  }
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), shape_error);
}

TEST_CASE("charpoly golden values") {
  CHECK(charpoly(IntMatrix::identity(2)) == IntPoly({1, -2, 1}));
  CHECK(charpoly(paper::a2a()) == paper::f2a());
  CHECK(charpoly(paper::a2b()) == paper::f2b());
}

TEST_CASE("charpoly invariants: Cayley-Hamilton and constant term") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + t % 4;
    IntMatrix m = random_matrix(rng, n, 5);
    IntPoly p = charpoly(m);
    // Horner over matrices
    RatMatrix acc = eval_poly_at_matrix(RatPoly(p), m);
    CHECK(acc.is_zero());
    Int sign = (n % 2 == 0) ? 1 : -1;
    CHECK(p.c[0] == sign * det(m));
  }
}

TEST_CASE("hnf golden values") {
  IntMatrix d{{2, 0}, {0, 3}};
  CHECK(hnf(d) == d);
  CHECK(hnf(IntMatrix{{0, 1}, {1, 0}}) == IntMatrix::identity(2));
  CHECK(hnf(IntMatrix{{2, 4}, {1, 3}}) == IntMatrix{{1, 1}, {0, 2}});
}

TEST_CASE("hnf agrees with brute-force unimodular reduction on 2x2") {
  // oracle: over all unimodular U with small entries, exactly one U*M has
  // HNF shape; it must be hnf(M)
  auto is_hnf_form = [](const IntMatrix& h) {
    if (h(1, 0) != 0) return false;
    if (h(0, 0) <= 0 || h(1, 1) <= 0) return false;
    return h(0, 1) >= 0 && h(0, 1) < h(1, 1);
  };
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m(2, 2);
    for (auto& x : m.entries()) x = Int(e(rng));
    if (det(m) == 0) continue;
    IntMatrix h = hnf(m);
    bool found = false;
    for (int a = -8; a <= 8; ++a)
      for (int b = -8; b <= 8; ++b)
        for (int c = -8; c <= 8; ++c)
          for (int d2 = -8; d2 <= 8; ++d2) {
            Int dd = Int(a) * d2 - Int(b) * c;
            if (dd != 1 && dd != -1) continue;
            IntMatrix u{{a, b}, {c, d2}};
            IntMatrix cand = u * m;
            if (is_hnf_form(cand)) {
              CHECK(cand == h);
              found = true;
            }
          }
    CHECK(found);
  }
}

TEST_CASE("hnf basis invariance under unimodular row mixing") {
  std::mt19937 rng(13);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + t % 3;
    IntMatrix m = random_matrix(rng, n, 6);
    IntMatrix w = random_unimodular(rng, n, 12);
    CHECK(hnf(w * m) == hnf(m));
    CHECK(hnf(hnf(m)) == hnf(m));
  }
}

TEST_CASE("snf golden values and invariants") {
  auto r = snf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(r.d == std::vector<Int>{1, 6});
  auto z = snf(IntMatrix(2, 2));
  CHECK(z.d == std::vector<Int>{0, 0});

  // (A - I) for Example 2b: product of divisors equals |f(1)| = 4
  IntMatrix a = paper::a2b();
  IntPoly f = charpoly(a);
  Int f1 = f(Int(1));
  CHECK(abs(f1) == 4);
  auto s = snf(a - IntMatrix::identity(3));
  Int prod = 1;
  for (const auto& d : s.d) prod *= d;
  CHECK(prod == abs(f1));

  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    std::size_t n = 2 + t % 4;
    IntMatrix m = random_matrix(rng, n, 7);
    auto res = snf(m);
    for (std::size_t i = 0; i + 1 < res.d.size(); ++i) {
      if (res.d[i] == 0) {
        CHECK(res.d[i + 1] == 0);
      } else {
        CHECK(res.d[i + 1] % res.d[i] == 0);
      }
    }
    Int du = det(res.u), dv = det(res.v);
    CHECK(abs(du) == 1);
    CHECK(abs(dv) == 1);
    Int prod2 = 1;
    for (const auto& d : res.d) prod2 *= d;
    CHECK(prod2 == abs(det(m)));
  }
}

TEST_CASE("solve_rational: kernels") {
  // x*I = x: kernel of (I - I) is everything
  RatMatrix zero3(3, 3);
  auto sol = solve_rational(zero3, RatMatrix(3, 1));
  CHECK(sol.kernel.rows() == 3);

  // commutant of Example 2a's A has dimension 3 = deg f
  auto commutant_dim = [](const IntMatrix& a) {
    std::size_t n = a.rows();
    RatMatrix sys(n * n, n * n);
    // unknown X, equation A X - X A = 0, row-major vectorization
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t eq = i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          sys(eq, k * n + j) += Rat(a(i, k));
          sys(eq, i * n + k) -= Rat(a(k, j));
        }
      }
    return solve_rational(sys, RatMatrix(n * n, 1)).kernel.rows();
  };
  CHECK(commutant_dim(paper::a2a()) == 3);

  // commutant of diag(A, A) has dimension 12
  IntMatrix a = paper::a2a();
  IntMatrix big(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      big(i, j) = a(i, j);
      big(i + 3, j + 3) = a(i, j);
    }
  CHECK(commutant_dim(big) == 12);

  // inconsistent system reports no particular solution
  RatMatrix bad(2, 1);
  bad(0, 0) = Rat(1);
  RatMatrix rhs(2, 1);
  rhs(1, 0) = Rat(1);
  auto nosol = solve_rational(bad, rhs);
  CHECK(!nosol.particular.has_value());
}

TEST_CASE("left kernel and saturation") {
  IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  IntMatrix k = left_kernel(m);
  CHECK(k.rows() == 1);
  CHECK((k.row(0) == std::vector<Int>{1, -2} ||
         k.row(0) == std::vector<Int>{Int(-1), 2}));

  // saturation of the row space of [[2,0],[0,2]] is all of Z^2
  IntMatrix s = saturate_rows(IntMatrix{{2, 0}, {0, 2}});
  CHECK(same_row_lattice(s, IntMatrix::identity(2)));
  CHECK(lattice_index_in_zn(IntMatrix{{2, 0}, {0, 2}}) == 4);
}

TEST_CASE("lattice_reduce basics") {
  RatMatrix gram = to_rational(IntMatrix::identity(2));
  RatMatrix ortho = to_rational(IntMatrix{{3, 0}, {0, 5}});
  RatMatrix r = lattice_reduce(ortho, gram);
  for (std::size_t i = 0; i < 2; ++i) {
    Rat len = form_value(gram, r.row(i));
    CHECK((len == Rat(9) || len == Rat(25)));
  }

  RatMatrix skew = to_rational(IntMatrix{{1, 0}, {100, 1}});
  RatMatrix rs = lattice_reduce(skew, gram);
  bool has_unit = false;
  for (std::size_t i = 0; i < 2; ++i)
    if (form_value(gram, rs.row(i)) == Rat(1)) has_unit = true;
  CHECK(has_unit);
}

TEST_CASE("lattice_reduce finds the shortest vector of O_K of Example 3a") {
  // trace form on the power basis of f = x^3 - 2x^2 - 8x - 1 from Newton
  // power sums: p0=3, p1=2, p2=20, p3=53, p4=264
  RatMatrix gram(3, 3);
  Int tr[5] = {3, 2, 20, 53, 264};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = Rat(tr[i + j]);
  RatMatrix basis = to_rational(IntMatrix::identity(3));
  RatMatrix red = lattice_reduce(basis, gram);
  // oracle: exhaustive search over |c| <= 10
  Rat best(0);
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b)
      for (int c = -10; c <= 10; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        std::vector<Rat> v = {Rat(a), Rat(b), Rat(c)};
        Rat q = form_value(gram, v);
        if (best == 0 || q < best) best = q;
      }
  CHECK(form_value(gram, red.row(0)) == best);
  // the minimum is attained by the image of 1
  std::vector<Rat> one = {Rat(1), Rat(0), Rat(0)};
  CHECK(form_value(gram, one) == best);
}

TEST_CASE("short vector enumeration is exhaustive on a known lattice") {
  RatMatrix gram = to_rational(IntMatrix::identity(2));
  RatMatrix basis = to_rational(IntMatrix{{2, 1}, {1, 3}});
  auto shorts = enumerate_short_vectors(basis, gram, Rat(30));
  // oracle: scan coefficient box
  std::size_t count = 0;
  for (int a = -12; a <= 12; ++a)
    for (int b = -12; b <= 12; ++b) {
      if (a == 0 && b == 0) continue;
      long x = 2 * a + b, y = a + 3 * b;
      if (x * x + y * y <= 30) ++count;
    }
  CHECK(shorts.size() * 2 == count);  // enumeration is modulo sign
}

TEST_CASE("unimodular inverse") {
  IntMatrix v = paper::v2a();
  CHECK(abs(det(paper::a2a())) == 1);
  IntMatrix ai = inverse_unimodular(paper::a2a());
  CHECK(paper::a2a() * ai == IntMatrix::identity(3));
  CHECK_THROWS_AS(inverse_unimodular(v), domain_error);  // det V = 9
}
