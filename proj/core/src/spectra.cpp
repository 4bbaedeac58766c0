#include "toralg/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "toralg/exact_linalg.hpp"

namespace toralg {

namespace {

// Durand-Kerner on one squarefree polynomial. Deterministic: initial points
// on a circle of radius 1 + max|c_i/c_n| with a fixed angular offset.
std::vector<std::complex<double>> durand_kerner(const IntPoly& p,
                                                double* residual_out) {
  int n = p.degree();
  double lead = to_double(p.lead());
  std::vector<double> cd(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i)
    cd[i] = to_double(p.c[i]) / lead;
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(cd[i]));
  radius += 1;

  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = std::polar(radius, 2 * M_PI * i / n + 0.4);

  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (int i = n; i >= 0; --i) r = r * x + cd[i];
    return r;
  };
  auto scale = [&](std::complex<double> x) {
    double s = 0, ax = std::abs(x), pw = 1;
    for (int i = 0; i <= n; ++i) {
      s += std::abs(cd[i]) * pw;
      pw *= ax;
    }
    return std::max(s, 1e-300);
  };

  const int cap = 10000;
  bool converged = false;
  for (int iter = 0; iter < cap; ++iter) {
    double worst_step = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> delta = eval(z[i]) / den;
      z[i] -= delta;
      worst_step = std::max(worst_step, std::abs(delta));
    }
    double worst_res = 0;
    for (int i = 0; i < n; ++i)
      worst_res = std::max(worst_res, std::abs(eval(z[i])) / scale(z[i]));
    if (worst_res < 1e-12 && worst_step < 1e-12) {
      converged = true;
      if (residual_out) *residual_out = worst_res;
      break;
    }
  }
  if (!converged) {
    double worst_res = 0;
    for (int i = 0; i < n; ++i)
      worst_res = std::max(worst_res, std::abs(eval(z[i])) / scale(z[i]));
    // accept a slightly weaker residual before giving up
    if (worst_res < 1e-9) {
      if (residual_out) *residual_out = worst_res;
    } else {
      throw numeric_error(
          "roots: Durand-Kerner failed to converge; residual " +
          std::to_string(worst_res));
    }
  }
  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace

Spectrum roots(const IntPoly& p) {
  if (p.degree() < 1) throw domain_error("roots: degree must be >= 1");
  Spectrum s;
  s.residual = 0;
  auto parts = squarefree_decomposition(p);
  for (std::size_t layer = 0; layer < parts.size(); ++layer) {
    if (parts[layer].degree() < 1) continue;
    double res = 0;
    auto z = durand_kerner(parts[layer], &res);
    s.residual = std::max(s.residual, res);
    for (const auto& root : z)
      for (std::size_t rep = 0; rep <= layer; ++rep)
        s.eigenvalues.push_back(root);
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const auto& a, const auto& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  return s;
}

Spectrum matrix_spectrum(const IntMatrix& m) { return roots(charpoly(m)); }

ErgodicityResult is_ergodic(const IntMatrix& m) {
  if (!m.square()) throw shape_error("is_ergodic: non-square matrix");
  IntPoly p = charpoly(m);
  if (p.c.empty() || p.c[0] == 0)
    throw domain_error("is_ergodic: matrix is singular over Q");
  unsigned n = static_cast<unsigned>(m.rows());
  // phi(k) <= n bounds the k that must be checked
  auto phi = [](unsigned k) {
    unsigned result = k;
    for (unsigned f = 2; f * f <= k; ++f)
      if (k % f == 0) {
        while (k % f == 0) k /= f;
        result -= result / f;
      }
    if (k > 1) result -= result / k;
    return result;
  };
  unsigned max_k = 0;
  RatPoly pq(p);
  for (unsigned k = 1; k <= 2 * n * n + 6; ++k) {
    if (phi(k) > n) continue;
    max_k = std::max(max_k, k);
    RatPoly g = poly_gcd(pq, RatPoly(cyclotomic(k)));
    if (g.degree() >= 1)
      return {false, "charpoly shares cyclotomic factor Phi_" +
                         std::to_string(k),
              k};
  }
  return {true, "no cyclotomic factor Phi_k for k <= " + std::to_string(max_k),
          0};
}

bool is_hyperbolic(const IntMatrix& m) {
  if (!m.square()) throw shape_error("is_hyperbolic: non-square matrix");
  IntPoly p = charpoly(m);
  if (p.c[0] == 0) return false;  // zero eigenvalue: not an automorphism case
  // exact screen: any root of unity among the eigenvalues sits on the circle
  if (!is_ergodic(m).ergodic) return false;
  const double tau = 1e-9;
  for (const auto& z : roots(p).eigenvalues)
    if (std::abs(std::abs(z) - 1.0) <= tau) return false;
  return true;
}

double entropy(const IntPoly& p) {
  double h = 0;
  for (const auto& z : roots(p).eigenvalues) {
    double a = std::abs(z);
    if (a > 1) h += std::log(a);
  }
  return h;
}

double entropy(const IntMatrix& m) {
  if (!m.square()) throw shape_error("entropy: non-square matrix");
  IntPoly p = charpoly(m);
  if (p.c[0] == 0) throw domain_error("entropy: matrix is singular over Q");
  return entropy(p);
}

bool all_roots_real(const IntPoly& p) {
  if (p.degree() < 1) return true;
  IntPoly f = primitive_part(exact_div(p, poly_gcd(p, derivative(p))));
  return count_real_roots(p) == f.degree();
}

}  // namespace toralg
