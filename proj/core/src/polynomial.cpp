#include "toralg/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace toralg {

IntPoly IntPoly::x() { return IntPoly({Int(0), Int(1)}); }
IntPoly IntPoly::constant(const Int& a) { return IntPoly({a}); }

Int IntPoly::operator()(const Int& v) const {
  Int r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * v + c[i];
  return r;
}

std::complex<double> IntPoly::operator()(std::complex<double> v) const {
  std::complex<double> r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * v + to_double(c[i]);
  return r;
}

RatPoly::RatPoly(const IntPoly& p) {
  c.reserve(p.c.size());
  for (const auto& a : p.c) c.emplace_back(a);
}

Rat RatPoly::operator()(const Rat& v) const {
  Rat r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * v + c[i];
  return r;
}

namespace {

template <class P>
P add_impl(const P& p, const P& q) {
  P r;
  r.c.resize(std::max(p.c.size(), q.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < p.c.size()) r.c[i] += p.c[i];
    if (i < q.c.size()) r.c[i] += q.c[i];
  }
  r.normalize();
  return r;
}

template <class P>
P sub_impl(const P& p, const P& q) {
  P r;
  r.c.resize(std::max(p.c.size(), q.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < p.c.size()) r.c[i] += p.c[i];
    if (i < q.c.size()) r.c[i] -= q.c[i];
  }
  r.normalize();
  return r;
}

template <class P>
P mul_impl(const P& p, const P& q) {
  if (p.zero() || q.zero()) return P();
  P r;
  r.c.resize(p.c.size() + q.c.size() - 1);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    for (std::size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
  }
  r.normalize();
  return r;
}

}  // namespace

IntPoly add(const IntPoly& p, const IntPoly& q) { return add_impl(p, q); }
IntPoly sub(const IntPoly& p, const IntPoly& q) { return sub_impl(p, q); }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return mul_impl(p, q); }
IntPoly neg(const IntPoly& p) {
  IntPoly r = p;
  for (auto& a : r.c) a = -a;
  return r;
}

RatPoly add(const RatPoly& p, const RatPoly& q) { return add_impl(p, q); }
RatPoly sub(const RatPoly& p, const RatPoly& q) { return sub_impl(p, q); }
RatPoly mul(const RatPoly& p, const RatPoly& q) { return mul_impl(p, q); }

RatPolyDivMod divmod(const RatPoly& p, const RatPoly& q) {
  if (q.zero()) throw domain_error("divmod: division by zero polynomial");
  RatPoly rem = p;
  RatPoly quot;
  int dq = q.degree();
  if (rem.degree() >= dq) quot.c.resize(rem.degree() - dq + 1);
  Rat lead_inv = Rat(1) / q.lead();
  while (!rem.zero() && rem.degree() >= dq) {
    int shift = rem.degree() - dq;
    Rat f = rem.lead() * lead_inv;
    quot.c[shift] = f;
    for (int i = 0; i <= dq; ++i) rem.c[shift + i] -= f * q.c[i];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

RatPoly poly_mod(const RatPoly& p, const RatPoly& q) { return divmod(p, q).rem; }

namespace {
RatPoly make_monic(const RatPoly& p) {
  if (p.zero()) return p;
  RatPoly r = p;
  Rat inv = Rat(1) / p.lead();
  for (auto& a : r.c) a *= inv;
  return r;
}
}  // namespace

RatPoly poly_gcd(const RatPoly& p, const RatPoly& q) {
  RatPoly a = p, b = q;
  while (!b.zero()) {
    RatPoly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return make_monic(a);
}

RatPolyXgcd poly_xgcd(const RatPoly& p, const RatPoly& q) {
  RatPoly r0 = p, r1 = q;
  RatPoly s0({Rat(1)}), s1;
  RatPoly t0, t1({Rat(1)});
  while (!r1.zero()) {
    auto dm = divmod(r0, r1);
    RatPoly r2 = dm.rem;
    RatPoly s2 = sub(s0, mul(dm.quot, s1));
    RatPoly t2 = sub(t0, mul(dm.quot, t1));
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.lead();
  auto scale = [&](RatPoly& f) {
    for (auto& a : f.c) a *= inv;
  };
  scale(r0);
  scale(s0);
  scale(t0);
  return {r0, s0, t0};
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& a : p.c) g = gcd(g, a);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  Int g = content(p);
  if (g == 0) return p;
  if (p.lead() < 0) g = -g;
  IntPoly r = p;
  for (auto& a : r.c) a = exact_div(a, g);
  return r;
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.zero()) return primitive_part(q);
  if (q.zero()) return primitive_part(p);
  RatPoly g = poly_gcd(RatPoly(p), RatPoly(q));
  // clear denominators, take the primitive part, restore content gcd
  Int den = 1;
  for (const auto& a : g.c) den = lcm(den, a.get_den());
  IntPoly gi;
  gi.c.reserve(g.c.size());
  for (const auto& a : g.c) gi.c.push_back(Rat(a * Rat(den)).get_num());
  gi.normalize();
  IntPoly prim = primitive_part(gi);
  Int cg = gcd(content(p), content(q));
  for (auto& a : prim.c) a *= cg;
  return prim;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.zero()) throw domain_error("exact_div: division by zero polynomial");
  auto dm = divmod(RatPoly(p), RatPoly(q));
  if (!dm.rem.zero()) throw domain_error("exact_div: inexact division");
  IntPoly r;
  r.c.reserve(dm.quot.c.size());
  for (const auto& a : dm.quot.c) {
    if (!is_integer(a)) throw domain_error("exact_div: non-integer quotient");
    r.c.push_back(a.get_num());
  }
  r.normalize();
  return r;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (std::size_t i = 1; i < p.c.size(); ++i)
    r.c[i - 1] = Int(static_cast<long>(i)) * p.c[i];
  r.normalize();
  return r;
}

IntPoly cyclotomic(unsigned k) {
  if (k == 0) throw domain_error("cyclotomic: k must be positive");
  // x^k - 1
  IntPoly xk1;
  xk1.c.assign(k + 1, Int(0));
  xk1.c[0] = -1;
  xk1.c[k] = 1;
  if (k == 1) return xk1;
  IntPoly q = xk1;
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) q = exact_div(q, cyclotomic(d));
  return q;
}

IntMatrix companion(const IntPoly& p) {
  if (p.degree() < 1) throw domain_error("companion: degree must be >= 1");
  if (!p.monic()) throw domain_error("companion: polynomial must be monic");
  std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -p.c[j];
  return m;
}

RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& m) {
  if (!m.square()) throw shape_error("eval_poly_at_matrix: non-square");
  std::size_t n = m.rows();
  RatMatrix r(n, n);
  if (p.zero()) return r;
  for (std::size_t i = 0; i < n; ++i) r(i, i) = p.c.back();
  for (std::size_t k = p.c.size() - 1; k-- > 0;) {
    r = r * m;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += p.c[k];
  }
  return r;
}

RatMatrix eval_poly_at_matrix(const RatPoly& p, const IntMatrix& m) {
  return eval_poly_at_matrix(p, to_rational(m));
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  std::vector<IntPoly> parts;
  if (p.degree() < 1) return parts;
  IntPoly f = primitive_part(p);
  IntPoly fp = derivative(f);
  IntPoly a0 = poly_gcd(f, fp);
  if (a0.degree() == 0) {
    parts.push_back(f);
    return parts;
  }
  IntPoly b = exact_div(f, a0);
  IntPoly c = exact_div(fp, a0);
  IntPoly d = sub(c, derivative(b));
  for (;;) {
    IntPoly a = poly_gcd(b, d);
    parts.push_back(a.degree() >= 1 ? primitive_part(a)
                                    : IntPoly({Int(1)}));
    b = exact_div(b, a);
    if (b.degree() < 1) break;
    c = exact_div(d, a);
    d = sub(c, derivative(b));
  }
  // strip constant placeholders down to degree-0 polys of value 1
  return parts;
}

namespace {

// ---- arithmetic in F_p[x] for small primes -------------------------------

using PmPoly = std::vector<int64_t>;  // ascending, reduced mod p

void pm_norm(PmPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PmPoly pm_from(const IntPoly& p, int64_t pr) {
  PmPoly f(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    Int r = p.c[i] % Int(pr);
    int64_t v = static_cast<int64_t>(r.get_si());
    if (v < 0) v += pr;
    f[i] = v;
  }
  pm_norm(f);
  return f;
}

PmPoly pm_mul(const PmPoly& a, const PmPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PmPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  pm_norm(c);
  return c;
}

int64_t pm_inv_scalar(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p : t;
}

PmPoly pm_mod(PmPoly a, const PmPoly& m, int64_t p) {
  int64_t li = pm_inv_scalar(m.back(), p);
  while (a.size() >= m.size()) {
    int64_t f = a.back() * li % p;
    std::size_t shift = a.size() - m.size();
    if (f)
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] - f * m[i]) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
    a.pop_back();
    pm_norm(a);
    if (a.empty()) break;
  }
  return a;
}

PmPoly pm_gcd(PmPoly a, PmPoly b, int64_t p) {
  while (!b.empty()) {
    PmPoly r = pm_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^reps) mod m, by iterated frobenius on x
PmPoly pm_frobenius_x(const PmPoly& m, int64_t p, unsigned reps) {
  PmPoly x = pm_mod({0, 1}, m, p);
  PmPoly cur = x;
  for (unsigned r = 0; r < reps; ++r) {
    // cur <- cur^p mod m
    PmPoly acc = {1};
    PmPoly base = cur;
    int64_t e = p;
    while (e) {
      if (e & 1) acc = pm_mod(pm_mul(acc, base, p), m, p);
      base = pm_mod(pm_mul(base, base, p), m, p);
      e >>= 1;
    }
    cur = acc;
  }
  return cur;
}

PmPoly pm_sub(PmPoly a, const PmPoly& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = (a[i] - b[i]) % p;
    if (a[i] < 0) a[i] += p;
  }
  pm_norm(a);
  return a;
}

bool pm_irreducible(const PmPoly& f, int64_t p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  PmPoly x = pm_mod({0, 1}, f, p);
  // x^(p^n) == x mod f
  if (pm_frobenius_x(f, p, static_cast<unsigned>(n)) != x) return false;
  // gcd(x^(p^(n/q)) - x, f) == 1 for each prime q | n
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool is_prime = true;
    for (int w = 2; w * w <= q; ++w)
      if (q % w == 0) is_prime = false;
    if (!is_prime) continue;
    PmPoly diff = pm_sub(pm_frobenius_x(f, p, static_cast<unsigned>(n / q)),
                         x, p);
    PmPoly g = pm_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---- numeric root clustering for factor proposals ------------------------

// Bare Durand-Kerner, good enough to propose factors; every proposal is
// verified by exact division so accuracy only affects hit rate.
std::vector<std::complex<double>> approx_roots_for_factoring(
    const IntPoly& p) {
  int n = p.degree();
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  double lead = to_double(p.lead());
  double radius = 1;
  for (const auto& a : p.c)
    radius = std::max(radius, std::abs(to_double(a) / lead));
  radius += 1;
  for (int i = 0; i < n; ++i) {
    double ang = 2 * M_PI * i / n + 0.4;
    z[static_cast<std::size_t>(i)] =
        std::polar(radius * (1 + 1e-3 * i), ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> num = p(z[static_cast<std::size_t>(i)]) / lead;
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i)
          den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      std::complex<double> step = num / den;
      z[static_cast<std::size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

// try to split f by rounding products of subsets of numeric roots; any
// returned factor is verified by exact division
std::optional<IntPoly> numeric_factor_candidate(const IntPoly& f) {
  int n = f.degree();
  if (n < 2 || n > 24) return std::nullopt;
  std::vector<std::complex<double>> roots = approx_roots_for_factoring(f);
  double lead = to_double(f.lead());
  unsigned total = 1u << n;
  for (unsigned mask = 1; mask + 1 < total; ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 1 || k > n / 2) continue;
    // coefficients of prod (x - r_i), descending powers
    std::vector<std::complex<double>> a(static_cast<std::size_t>(k) + 1);
    a[0] = 1.0;
    int len = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      std::complex<double> r = roots[static_cast<std::size_t>(i)];
      for (int j = len + 1; j >= 1; --j)
        a[static_cast<std::size_t>(j)] =
            (j <= len ? a[static_cast<std::size_t>(j)]
                      : std::complex<double>(0.0)) -
            r * a[static_cast<std::size_t>(j - 1)];
      ++len;
    }
    bool ok = true;
    std::vector<Int> cand(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      std::complex<double> v = a[static_cast<std::size_t>(j)] * lead;
      double re = v.real();
      if (std::abs(v.imag()) > 1e-4 || std::abs(re - std::round(re)) > 1e-4 ||
          std::abs(re) > 9e15) {
        ok = false;
        break;
      }
      cand[static_cast<std::size_t>(k - j)] =
          Int(static_cast<long>(std::llround(re)));
    }
    if (!ok) continue;
    IntPoly g = primitive_part(IntPoly(std::move(cand)));
    if (g.degree() < 1 || g.degree() >= n) continue;
    try {
      (void)exact_div(f, g);
      return g;
    } catch (const domain_error&) {
      // rounding artifact; keep scanning
    }
  }
  return std::nullopt;
}

Int binom(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Landau-Mignotte per-coefficient bound for monic-normalized divisors
std::vector<Int> mignotte_bounds(const IntPoly& f, int k) {
  double norm2 = 0;
  for (const auto& a : f.c) {
    double v = to_double(a);
    norm2 += v * v;
  }
  double nf = std::sqrt(norm2);
  std::vector<Int> b(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    double bound = to_double(binom(k, i)) * nf;
    b[static_cast<std::size_t>(i)] =
        Int(static_cast<long>(std::ceil(bound))) + 1;
  }
  return b;
}

std::vector<Int> positive_divisors(const Int& n) {
  Int a = abs(n);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Exhaustive bounded factor search. Returns a factor if one exists with
// degree in [1, deg/2]; nullopt certifies irreducibility of the primitive
// part. Throws numeric_error when the search box is impractically large.
std::optional<IntPoly> exhaustive_factor(const IntPoly& f) {
  int n = f.degree();
  std::vector<Int> lead_divs = positive_divisors(f.lead());
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<Int> bounds = mignotte_bounds(f, k);
    double box = 1;
    for (const auto& b : bounds) box *= 2 * to_double(b) + 1;
    box *= static_cast<double>(lead_divs.size());
    if (box > 4e6)
      throw numeric_error(
          "irreducibility: exhaustive factor box too large for degree " +
          std::to_string(k));
    for (const Int& lg : lead_divs) {
      std::vector<Int> coef(static_cast<std::size_t>(k) + 1);
      coef[static_cast<std::size_t>(k)] = lg;
      // odometer over coefficient box
      std::vector<Int> cur(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = -bounds[static_cast<std::size_t>(i)];
      for (;;) {
        for (int i = 0; i < k; ++i) coef[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)];
        IntPoly g{std::vector<Int>(coef)};
        if (g.degree() == k) {
          try {
            (void)exact_div(f, g);
            return primitive_part(g);
          } catch (const domain_error&) {
          }
        }
        int pos = 0;
        while (pos < k) {
          cur[static_cast<std::size_t>(pos)] += 1;
          if (cur[static_cast<std::size_t>(pos)] <= bounds[static_cast<std::size_t>(pos)]) break;
          cur[static_cast<std::size_t>(pos)] = -bounds[static_cast<std::size_t>(pos)];
          ++pos;
        }
        if (pos == k) break;
      }
    }
  }
  return std::nullopt;
}

constexpr std::array<int64_t, 15> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                  19, 23, 29, 31, 37, 41, 43,
                                                  47};

}  // namespace

IrreducibilityResult is_irreducible_q(const IntPoly& p) {
  if (p.degree() < 1)
    throw domain_error("is_irreducible_q: degree must be >= 1");
  IntPoly f = primitive_part(p);
  int n = f.degree();
  if (n == 1) return {true, "degree 1", std::nullopt};
  if (f.c[0] == 0)
    return {false, "x divides", IntPoly({Int(0), Int(1)})};

  // squarefree screen: a repeated factor is a factor
  IntPoly g = poly_gcd(f, derivative(f));
  if (g.degree() >= 1) return {false, "repeated factor", primitive_part(g)};

  // mod-p irreducibility witness
  for (int64_t pr : kSmallPrimes) {
    if (f.lead() % Int(pr) == 0) continue;
    PmPoly fp = pm_from(f, pr);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (pm_irreducible(fp, pr))
      return {true, "irreducible mod " + std::to_string(pr), std::nullopt};
  }

  // numeric proposal, verified exactly
  if (auto fac = numeric_factor_candidate(f))
    return {false, "explicit factor", *fac};

  // certified fallback
  if (auto fac = exhaustive_factor(f)) return {false, "explicit factor", *fac};
  return {true, "no factor of degree <= n/2 within Mignotte bounds",
          std::nullopt};
}

std::vector<IntPolyFactor> factor_q(const IntPoly& p) {
  std::vector<IntPolyFactor> out;
  if (p.degree() < 1) return out;
  std::vector<IntPoly> sq = squarefree_decomposition(p);
  for (std::size_t layer = 0; layer < sq.size(); ++layer) {
    int mult = static_cast<int>(layer) + 1;
    std::vector<IntPoly> stack;
    if (sq[layer].degree() >= 1) stack.push_back(primitive_part(sq[layer]));
    while (!stack.empty()) {
      IntPoly f = stack.back();
      stack.pop_back();
      auto res = is_irreducible_q(f);
      if (res.irreducible) {
        out.push_back({f, mult});
      } else {
        IntPoly g = *res.factor;
        stack.push_back(g);
        stack.push_back(exact_div(f, g));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntPolyFactor& a, const IntPolyFactor& b) {
              if (a.poly.degree() != b.poly.degree())
                return a.poly.degree() < b.poly.degree();
              return std::lexicographical_compare(
                  a.poly.c.begin(), a.poly.c.end(), b.poly.c.begin(),
                  b.poly.c.end());
            });
  // merge equal polynomials across layers (cannot happen for true Yun
  // output, but keep the invariant tight)
  std::vector<IntPolyFactor> merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().poly == f.poly)
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(f);
  }
  return merged;
}

int count_real_roots(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  // Sturm chain on the squarefree part
  IntPoly f = primitive_part(exact_div(p, poly_gcd(p, derivative(p))));
  std::vector<RatPoly> chain;
  chain.emplace_back(f);
  chain.emplace_back(derivative(f));
  while (chain.back().degree() >= 1) {
    RatPoly r = poly_mod(chain[chain.size() - 2], chain.back());
    if (r.zero()) break;
    for (auto& a : r.c) a = -a;
    chain.push_back(r);
  }
  auto sign_at_inf = [](const RatPoly& q, bool plus) -> int {
    if (q.zero()) return 0;
    int s = sgn(q.lead());
    if (!plus && q.degree() % 2 == 1) s = -s;
    return s;
  };
  auto variations = [&](bool plus) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      int s = sign_at_inf(q, plus);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  if (p.zero()) return os << "0";
  bool first = true;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    if (!first) os << (p.c[i] > 0 ? " + " : " - ");
    else if (p.c[i] < 0)
      os << "-";
    Int a = abs(p.c[i]);
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace toralg
