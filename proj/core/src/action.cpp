#include "toralg/action.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "toralg/exact_linalg.hpp"

namespace toralg {

ZdAction new_action(std::vector<IntMatrix> generators) {
  if (generators.empty()) throw domain_error("new_action: no generators");
  std::size_t n = generators[0].rows();
  for (const auto& g : generators) {
    if (!g.square() || g.rows() != n)
      throw shape_error("new_action: generators must be square, equal size");
    Int dg = det(g);
    if (dg != 1 && dg != -1)
      throw domain_error("new_action: generator determinant is not +-1");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] * generators[j] != generators[j] * generators[i])
        throw domain_error("new_action: generators " + std::to_string(i) +
                           " and " + std::to_string(j) + " do not commute");
  ZdAction a;
  a.d = static_cast<int>(generators.size());
  a.n = static_cast<int>(n);
  a.gens = std::move(generators);
  for (const auto& g : a.gens) a.gen_spectra.push_back(matrix_spectrum(g));
  return a;
}

IntMatrix rho(const ZdAction& a, const std::vector<long>& nvec) {
  if (static_cast<int>(nvec.size()) != a.d)
    throw shape_error("rho: exponent vector length != d");
  IntMatrix r = IntMatrix::identity(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.d; ++i) {
    long e = nvec[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    IntMatrix base = e > 0 ? a.gens[static_cast<std::size_t>(i)]
                           : inverse_unimodular(a.gens[static_cast<std::size_t>(i)]);
    r = r * pow(base, static_cast<unsigned long>(e > 0 ? e : -e));
  }
  return r;
}

ZdAction construct_action(const NumberField& field,
                          const std::vector<NFElement>& units,
                          const LatticeBasis& basis) {
  if (units.empty()) throw domain_error("construct_action: no units");
  for (const auto& u : units)
    if (!u.is_unit())
      throw domain_error("construct_action: element is not a unit");
  auto indep = units_independent(units);
  if (!indep.independent)
    throw domain_error("construct_action: units multiplicatively dependent (" +
                       indep.note + ")");
  std::vector<IntMatrix> gens;
  for (const auto& u : units) gens.push_back(mult_matrix(u, basis));
  (void)field;
  return new_action(std::move(gens));
}

namespace {

struct JointSpectrum {
  // one entry per distinct joint eigenvalue tuple
  std::vector<std::vector<std::complex<double>>> tuples;
  std::vector<int> multiplicities;
  std::vector<std::vector<int>> blocks;  // Galois orbits (by pencil factor)
};

// Joint eigenvalues of the commuting family via an integer pencil
// C = w_1 A_1 + ... + w_d A_d with spread weights. Each root of
// charpoly(C) is matched to a tuple of per-generator eigenvalues; the
// match must be unique, else the weights are enlarged.
JointSpectrum joint_spectrum(const ZdAction& a) {
  // semisimplicity gate, exact: squarefree part must annihilate
  for (const auto& g : a.gens) {
    IntPoly p = charpoly(g);
    IntPoly sf = primitive_part(exact_div(p, poly_gcd(p, derivative(p))));
    if (!eval_poly_at_matrix(RatPoly(sf), g).is_zero())
      throw domain_error(
          "lyapunov_data: derogatory spectrum (generator not semisimple)");
  }

  for (long scale : {7L, 257L, 8191L, 262147L}) {
    IntMatrix c(static_cast<std::size_t>(a.n), static_cast<std::size_t>(a.n));
    Int w = 1;
    for (int i = a.d - 1; i >= 0; --i) {
      IntMatrix t = a.gens[static_cast<std::size_t>(i)];
      for (auto& x : t.entries()) x *= w;
      c = c + t;
      w *= scale;
    }
    IntPoly pc = charpoly(c);
    auto factors = factor_q(pc);
    // exactness check: factorization must multiply back to pc
    {
      IntPoly prod = IntPoly({Int(1)});
      for (const auto& f : factors)
        for (int m = 0; m < f.multiplicity; ++m) prod = mul(prod, f.poly);
      if (!(primitive_part(prod) == primitive_part(pc))) continue;
    }

    JointSpectrum js;
    bool ambiguous = false;
    for (std::size_t fi = 0; fi < factors.size() && !ambiguous; ++fi) {
      Spectrum fr = roots(factors[fi].poly);
      std::vector<int> block;
      for (const auto& root : fr.eigenvalues) {
        // match root against all per-generator eigenvalue combinations
        std::vector<std::vector<std::complex<double>>> hits;
        std::vector<std::size_t> idx(static_cast<std::size_t>(a.d), 0);
        for (;;) {
          std::complex<double> s = 0;
          double wd = 1;
          std::vector<std::complex<double>> tuple(
              static_cast<std::size_t>(a.d));
          for (int i = a.d - 1; i >= 0; --i) {
            auto ev = a.gen_spectra[static_cast<std::size_t>(i)]
                          .eigenvalues[idx[static_cast<std::size_t>(i)]];
            tuple[static_cast<std::size_t>(i)] = ev;
            s += wd * ev;
            wd *= static_cast<double>(scale);
          }
          double err = std::abs(s - root);
          if (err < 1e-6 * std::max(1.0, std::abs(root))) {
            bool duplicate = false;
            for (const auto& h : hits) {
              double dd = 0;
              for (int i = 0; i < a.d; ++i)
                dd += std::abs(h[static_cast<std::size_t>(i)] -
                               tuple[static_cast<std::size_t>(i)]);
              if (dd < 1e-8) duplicate = true;
            }
            if (!duplicate) hits.push_back(tuple);
          }
          // odometer
          int pos = 0;
          for (; pos < a.d; ++pos) {
            if (++idx[static_cast<std::size_t>(pos)] <
                a.gen_spectra[static_cast<std::size_t>(pos)]
                    .eigenvalues.size())
              break;
            idx[static_cast<std::size_t>(pos)] = 0;
          }
          if (pos == a.d) break;
        }
        if (hits.size() != 1) {
          ambiguous = true;
          break;
        }
        // merge with an existing identical tuple in this block
        bool merged = false;
        for (int bi : block) {
          double dd = 0;
          for (int i = 0; i < a.d; ++i)
            dd += std::abs(js.tuples[static_cast<std::size_t>(bi)]
                                    [static_cast<std::size_t>(i)] -
                           hits[0][static_cast<std::size_t>(i)]);
          if (dd < 1e-9) {
            js.multiplicities[static_cast<std::size_t>(bi)] +=
                factors[fi].multiplicity;
            merged = true;
            break;
          }
        }
        if (!merged) {
          js.tuples.push_back(hits[0]);
          js.multiplicities.push_back(factors[fi].multiplicity);
          block.push_back(static_cast<int>(js.tuples.size()) - 1);
        }
      }
      if (!block.empty()) js.blocks.push_back(block);
    }
    if (ambiguous) continue;
    int total = 0;
    for (std::size_t i = 0; i < js.tuples.size(); ++i)
      total += js.multiplicities[i];
    if (total != a.n) continue;
    return js;
  }
  throw numeric_error(
      "lyapunov_data: could not resolve the joint spectrum (clustered "
      "eigenvalues)");
}

}  // namespace

LyapunovData lyapunov_data(const ZdAction& a) {
  JointSpectrum js = joint_spectrum(a);
  LyapunovData ld;
  ld.tuples = js.tuples;
  ld.multiplicities = js.multiplicities;
  ld.galois_blocks = js.blocks;
  for (const auto& tuple : js.tuples) {
    std::vector<double> row;
    for (const auto& ev : tuple) {
      double m = std::abs(ev);
      if (m == 0) throw domain_error("lyapunov_data: zero eigenvalue");
      row.push_back(std::log(m));
    }
    ld.exponents.push_back(row);
  }
  return ld;
}

double entropy_function(const LyapunovData& lyap,
                        const std::vector<long>& nvec) {
  double h = 0;
  for (std::size_t k = 0; k < lyap.exponents.size(); ++k) {
    double chi = 0;
    for (std::size_t i = 0; i < nvec.size(); ++i)
      chi += lyap.exponents[k][i] * static_cast<double>(nvec[i]);
    if (chi > 0) h += lyap.multiplicities[k] * chi;
  }
  return h;
}

double entropy_function(const ZdAction& a, const std::vector<long>& nvec) {
  if (static_cast<int>(nvec.size()) != a.d)
    throw shape_error("entropy_function: exponent vector length != d");
  return entropy_function(lyapunov_data(a), nvec);
}

WeylChamberSet weyl_chambers(const ZdAction& a) {
  if (a.d != 2)
    throw domain_error("weyl_chambers: only rank d = 2 is supported");
  LyapunovData ld = lyapunov_data(a);
  WeylChamberSet out;
  out.degenerate = false;

  // distinct nonzero lines chi_k = 0; the line of (a,b) is its direction
  // angle mod pi
  std::vector<double> wall_angles;
  int nonzero_rows = 0;
  for (const auto& row : ld.exponents) {
    double na = std::hypot(row[0], row[1]);
    if (na < 1e-12) continue;  // identically zero exponent: no wall
    ++nonzero_rows;
    double theta = std::atan2(row[1], row[0]);  // normal direction
    // wall direction = normal rotated by pi/2, folded into [0, pi)
    double wall = theta + M_PI / 2;
    while (wall < 0) wall += M_PI;
    while (wall >= M_PI) wall -= M_PI;
    bool dup = false;
    for (double wexist : wall_angles)
      if (std::abs(wexist - wall) < 1e-9 ||
          std::abs(std::abs(wexist - wall) - M_PI) < 1e-9)
        dup = true;
    if (!dup) wall_angles.push_back(wall);
  }
  for (double wall : wall_angles) {
    // remember line data (a, b) for reporting: the first row on this wall
    for (const auto& row : ld.exponents) {
      double na = std::hypot(row[0], row[1]);
      if (na < 1e-12) continue;
      double theta = std::atan2(row[1], row[0]) + M_PI / 2;
      while (theta < 0) theta += M_PI;
      while (theta >= M_PI) theta -= M_PI;
      if (std::abs(theta - wall) < 1e-9) {
        out.lines.push_back({row[0] / na, row[1] / na});
        break;
      }
    }
  }
  out.degenerate = static_cast<int>(wall_angles.size()) < nonzero_rows;
  if (wall_angles.empty()) return out;

  // boundary rays at wall and wall + pi
  std::vector<double> rays;
  for (double wall : wall_angles) {
    rays.push_back(wall);
    rays.push_back(wall + M_PI);
  }
  std::sort(rays.begin(), rays.end());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    double from = rays[i];
    double to = (i + 1 < rays.size()) ? rays[i + 1] : rays[0] + 2 * M_PI;
    if (to - from < 1e-12) continue;
    double mid = (from + to) / 2;
    WeylChamber ch;
    ch.from_angle = from;
    ch.to_angle = to;
    double c1 = 0, c2 = 0;
    for (std::size_t k = 0; k < ld.exponents.size(); ++k) {
      double chi = ld.exponents[k][0] * std::cos(mid) +
                   ld.exponents[k][1] * std::sin(mid);
      if (chi > 1e-12) {
        ch.positive_rows.push_back(static_cast<int>(k));
        c1 += ld.multiplicities[k] * ld.exponents[k][0];
        c2 += ld.multiplicities[k] * ld.exponents[k][1];
      }
    }
    ch.coeff_n1 = c1;
    ch.coeff_n2 = c2;
    out.chambers.push_back(ch);
  }
  return out;
}

namespace {

// exact refutation of a candidate kernel direction: reconstruct a rational
// point, scale to a primitive integer vector, check ergodicity of rho there
bool kernel_direction_is_ergodic(const ZdAction& a,
                                 const std::vector<long>& m1,
                                 const std::vector<long>& m2, double x,
                                 double y) {
  auto rx = rational_reconstruct(x, Int(1000));
  auto ry = rational_reconstruct(y, Int(1000));
  if (!rx || !ry) return false;  // cannot refute: treat as failure
  Int den = lcm(rx->get_den(), ry->get_den());
  Int px = Rat(*rx * Rat(den)).get_num();
  Int py = Rat(*ry * Rat(den)).get_num();
  Int g = gcd(px, py);
  if (g == 0) return false;
  px = exact_div(px, g);
  py = exact_div(py, g);
  auto opx = to_int64(px), opy = to_int64(py);
  if (!opx || !opy) return false;
  std::vector<long> comb(static_cast<std::size_t>(a.d), 0);
  for (int i = 0; i < a.d; ++i)
    comb[static_cast<std::size_t>(i)] =
        static_cast<long>(*opx) * m1[static_cast<std::size_t>(i)] +
        static_cast<long>(*opy) * m2[static_cast<std::size_t>(i)];
  bool all_zero = true;
  for (long v : comb)
    if (v != 0) all_zero = false;
  if (all_zero) return false;
  return is_ergodic(rho(a, comb)).ergodic;
}

// certify that no nonzero integer combination of the pair kills a Galois
// block of exponents
bool pair_certified(const ZdAction& a, const LyapunovData& ld,
                    const std::vector<long>& m1, const std::vector<long>& m2) {
  for (const auto& block : ld.galois_blocks) {
    // rows restricted to the pair: (chi_k(m1), chi_k(m2))
    std::vector<std::array<double, 2>> rows;
    double scale = 1e-300;
    for (int k : block) {
      double a1 = 0, a2 = 0;
      for (int i = 0; i < a.d; ++i) {
        a1 += ld.exponents[static_cast<std::size_t>(k)]
                          [static_cast<std::size_t>(i)] *
              static_cast<double>(m1[static_cast<std::size_t>(i)]);
        a2 += ld.exponents[static_cast<std::size_t>(k)]
                          [static_cast<std::size_t>(i)] *
              static_cast<double>(m2[static_cast<std::size_t>(i)]);
      }
      rows.push_back({a1, a2});
      scale = std::max({scale, std::abs(a1), std::abs(a2)});
    }
    // rank-2 test: some 2x2 minor well away from zero
    double best_minor = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        best_minor =
            std::max(best_minor, std::abs(rows[i][0] * rows[j][1] -
                                          rows[i][1] * rows[j][0]));
    if (best_minor > 1e-8 * scale * scale) continue;
    // near-deficient: all rows essentially parallel; the common kernel
    // direction is orthogonal to the largest row
    std::size_t big = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (std::hypot(rows[i][0], rows[i][1]) >
          std::hypot(rows[big][0], rows[big][1]))
        big = i;
    double bx = rows[big][0], by = rows[big][1];
    if (std::hypot(bx, by) < 1e-12) {
      // entire block vanishes on the pair lattice: any nonzero element
      // fails, certified non-ergodic direction
      return false;
    }
    // kernel direction (x, y) with bx*x + by*y = 0
    double x = -by, y = bx;
    double nn = std::max(std::abs(x), std::abs(y));
    if (!kernel_direction_is_ergodic(a, m1, m2, x / nn, y / nn)) return false;
  }
  return true;
}

}  // namespace

namespace {

// Nonzero integer vectors with |v|_inf <= box: standard basis vectors
// first, then by max-norm and lexicographic order. Deterministic.
std::vector<std::vector<long>> box_candidates(int d, int box) {
  std::vector<std::vector<long>> out;
  for (int i = 0; i < d; ++i) {
    std::vector<long> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(e);
  }
  std::vector<std::vector<long>> rest;
  std::vector<long> v(static_cast<std::size_t>(d), -static_cast<long>(box));
  for (;;) {
    bool nonzero = false;
    for (long x : v)
      if (x != 0) nonzero = true;
    if (nonzero && std::find(out.begin(), out.end(), v) == out.end())
      rest.push_back(v);
    int pos = 0;
    for (; pos < d; ++pos) {
      if (++v[static_cast<std::size_t>(pos)] <= box) break;
      v[static_cast<std::size_t>(pos)] = -box;
    }
    if (pos == d) break;
  }
  std::sort(rest.begin(), rest.end(),
            [](const std::vector<long>& x, const std::vector<long>& y) {
              long nx = 0, ny = 0;
              for (long t : x) nx = std::max(nx, std::abs(t));
              for (long t : y) ny = std::max(ny, std::abs(t));
              if (nx != ny) return nx < ny;
              return x < y;
            });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

ConditionRResult satisfies_R(const ZdAction& a, int box) {
  if (a.d < 2)
    return {SearchVerdict::not_verified, std::nullopt,
            "condition (R) needs rank d >= 2"};
  LyapunovData ld;
  try {
    ld = lyapunov_data(a);
  } catch (const std::exception& e) {
    return {SearchVerdict::not_verified, std::nullopt,
            std::string("lyapunov data unavailable: ") + e.what()};
  }
  std::vector<std::vector<long>> candidates = box_candidates(a.d, box);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const auto& m1 = candidates[i];
      const auto& m2 = candidates[j];
      // require the pair to generate a rank-2 subgroup
      bool rank2 = false;
      for (int p = 0; p < a.d && !rank2; ++p)
        for (int q = p + 1; q < a.d; ++q) {
          long minor = m1[static_cast<std::size_t>(p)] *
                           m2[static_cast<std::size_t>(q)] -
                       m1[static_cast<std::size_t>(q)] *
                           m2[static_cast<std::size_t>(p)];
          if (minor != 0) {
            rank2 = true;
            break;
          }
        }
      if (!rank2) continue;
      if (pair_certified(a, ld, m1, m2))
        return {SearchVerdict::yes, std::make_pair(m1, m2),
                "witness pair certified blockwise"};
    }
  return {SearchVerdict::not_verified, std::nullopt,
          "no certified pair within box " + std::to_string(box)};
}

IrreducibilityVerdict is_irreducible(const ZdAction& a, int box) {
  // search rho^w for an irreducible characteristic polynomial
  std::vector<std::vector<long>> candidates = box_candidates(a.d, box);
  for (const auto& w : candidates) {
    IntPoly p = charpoly(rho(a, w));
    if (is_irreducible_q(p).irreducible)
      return {SearchVerdict::yes, w, std::nullopt, "irreducible charpoly"};
  }
  // look for an invariant rational subspace: kernels of irreducible factors
  // of commuting witnesses (generators and small commutant combinations)
  for (const auto& g : a.gens) {
    for (const auto& fac : factor_q(charpoly(g))) {
      RatMatrix im = eval_poly_at_matrix(RatPoly(fac.poly), g);
      IntMatrix imz = clear_denominators(im);
      IntMatrix ker = left_kernel(imz);  // x * fac(g) = 0
      if (ker.rows() == 0 || static_cast<int>(ker.rows()) == a.n) continue;
      return {SearchVerdict::no, std::nullopt, ker,
              "invariant rational subspace from a generator factor"};
    }
  }
  // derogatory case (e.g. product actions): use commutant elements
  {
    std::size_t n = static_cast<std::size_t>(a.n);
    RatMatrix sys(n * n * static_cast<std::size_t>(a.d), n * n);
    for (int gidx = 0; gidx < a.d; ++gidx) {
      const IntMatrix& g = a.gens[static_cast<std::size_t>(gidx)];
      std::size_t base = static_cast<std::size_t>(gidx) * n * n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t eq = base + i * n + j;
          for (std::size_t k = 0; k < n; ++k) {
            sys(eq, i * n + k) += Rat(g(k, j));   // (X g)_{ij}
            sys(eq, k * n + j) -= Rat(g(i, k));   // (g X)_{ij}
          }
        }
    }
    auto sol = solve_rational(sys, RatMatrix(sys.rows(), 0));
    for (std::size_t r = 0; r < sol.kernel.rows(); ++r) {
      IntMatrix x(n, n);
      RatMatrix xr(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xr(i, j) = sol.kernel(r, i * n + j);
      x = clear_denominators(xr);
      for (const auto& fac : factor_q(charpoly(x))) {
        RatMatrix im = eval_poly_at_matrix(RatPoly(fac.poly), x);
        IntMatrix ker = left_kernel(clear_denominators(im));
        if (ker.rows() == 0 || static_cast<int>(ker.rows()) == a.n) continue;
        return {SearchVerdict::no, std::nullopt, ker,
                "invariant rational subspace from a commutant element"};
      }
    }
  }
  return {SearchVerdict::not_verified, std::nullopt, std::nullopt,
          "no witness within box " + std::to_string(box) +
              ", no splitting found"};
}

CartanResult is_cartan(const ZdAction& a) {
  if (a.n < 3) return {false, "torus dimension < 3"};
  if (a.d != a.n - 1) return {false, "rank != n - 1"};
  // all eigenvalues of all generators real, exact
  for (int i = 0; i < a.d; ++i)
    if (!all_roots_real(charpoly(a.gens[static_cast<std::size_t>(i)])))
      return {false, "generator " + std::to_string(i) +
                         " has non-real eigenvalues"};
  // every nonzero element of the box |n| <= 2 ergodic with real eigenvalues
  std::vector<long> v(static_cast<std::size_t>(a.d), -2);
  for (;;) {
    bool nonzero = false;
    for (long x : v)
      if (x != 0) nonzero = true;
    if (nonzero) {
      IntMatrix m = rho(a, v);
      if (!is_ergodic(m).ergodic) return {false, "non-ergodic element in box"};
      if (!all_roots_real(charpoly(m)))
        return {false, "element with non-real eigenvalues in box"};
    }
    int pos = 0;
    for (; pos < a.d; ++pos) {
      if (++v[static_cast<std::size_t>(pos)] <= 2) break;
      v[static_cast<std::size_t>(pos)] = -2;
    }
    if (pos == a.d) break;
  }
  // full-group kernel condition: within each Galois block the exponent
  // matrix must have a trivial rational kernel
  LyapunovData ld;
  try {
    ld = lyapunov_data(a);
  } catch (const std::exception& e) {
    return {false, std::string("lyapunov data unavailable: ") + e.what()};
  }
  for (const auto& block : ld.galois_blocks) {
    // numeric rank of the |block| x d matrix
    std::vector<std::vector<double>> rows;
    for (int k : block) rows.push_back(ld.exponents[static_cast<std::size_t>(k)]);
    std::size_t rk = 0;
    std::vector<std::vector<double>> work = rows;
    for (int col = 0; col < a.d && rk < work.size(); ++col) {
      std::size_t best = rk;
      for (std::size_t i = rk; i < work.size(); ++i)
        if (std::abs(work[i][static_cast<std::size_t>(col)]) >
            std::abs(work[best][static_cast<std::size_t>(col)]))
          best = i;
      if (std::abs(work[best][static_cast<std::size_t>(col)]) < 1e-9) continue;
      std::swap(work[rk], work[best]);
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == rk) continue;
        double f = work[i][static_cast<std::size_t>(col)] /
                   work[rk][static_cast<std::size_t>(col)];
        for (int j = 0; j < a.d; ++j)
          work[i][static_cast<std::size_t>(j)] -=
              f * work[rk][static_cast<std::size_t>(j)];
      }
      ++rk;
    }
    if (static_cast<int>(rk) < a.d)
      return {false, "Lyapunov exponent block with nontrivial kernel"};
  }
  return {true, "Cartan"};
}

FixedPointData fixed_points(const ZdAction& a) {
  std::size_t n = static_cast<std::size_t>(a.n);
  std::size_t dn = n * static_cast<std::size_t>(a.d);
  // Fix(alpha) = {x : (A_i - I) x in Z^n for all i}, the dual of
  // Z^n / sum_i Z^n (A_i - I); stack the blocks vertically
  IntMatrix stack(dn, n);
  for (int gi = 0; gi < a.d; ++gi) {
    IntMatrix diff =
        a.gens[static_cast<std::size_t>(gi)] - IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stack(static_cast<std::size_t>(gi) * n + i, j) = diff(i, j);
  }
  SnfResult s = snf(stack);
  FixedPointData out;
  out.order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.d[i] == 0)
      throw domain_error("fixed_points: infinite fixed-point set");
    out.order *= s.d[i];
    if (s.d[i] > 1) out.invariant_factors.push_back(s.d[i]);
  }
  // stack = u^-1 diag(d) v^-1, so x is fixed iff (v^-1 x)_i lies in
  // (1/d_i) Z: representatives are x = v * y over the divisor grid.
  // Skipped (order still reported) when the group is impractically large.
  if (out.order > 4096) return out;
  RatMatrix v = to_rational(s.v);
  std::vector<Int> k(n, 0);
  for (;;) {
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      Rat yi = make_rat(k[i], s.d[i]);
      for (std::size_t j = 0; j < n; ++j) x[j] += v(j, i) * yi;
    }
    for (auto& c : x) c = c - floor_rat(c);
    out.representatives.push_back(x);
    std::size_t pos = 0;
    for (; pos < n; ++pos) {
      if (++k[pos] < s.d[pos]) break;
      k[pos] = 0;
    }
    if (pos == n) break;
  }
  std::sort(out.representatives.begin(), out.representatives.end());
  out.representatives.erase(
      std::unique(out.representatives.begin(), out.representatives.end()),
      out.representatives.end());
  if (Int(static_cast<long>(out.representatives.size())) != out.order)
    throw numeric_error("fixed_points: representative count mismatch");
  return out;
}

}  // namespace toralg
