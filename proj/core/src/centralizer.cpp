#include "toralg/centralizer.hpp"

#include <algorithm>
#include <cmath>

#include "toralg/exact_linalg.hpp"

namespace toralg {

bool CommutantBasis::is_abelian() const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
  return true;
}

CommutantBasis commutant_z_basis(const ZdAction& a) {
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix sys(n * n * static_cast<std::size_t>(a.d), n * n);
  for (int gidx = 0; gidx < a.d; ++gidx) {
    const IntMatrix& g = a.gens[static_cast<std::size_t>(gidx)];
    std::size_t base = static_cast<std::size_t>(gidx) * n * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t eq = base + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          sys(eq, i * n + k) += Rat(g(k, j));  // (X g)_{ij}
          sys(eq, k * n + j) -= Rat(g(i, k));  // (g X)_{ij}
        }
      }
  }
  auto sol = solve_rational(sys, RatMatrix(sys.rows(), 0));
  // saturate: integer matrices in the rational solution space
  IntMatrix rows(sol.kernel.rows(), n * n);
  for (std::size_t r = 0; r < sol.kernel.rows(); ++r) {
    RatMatrix rr(1, n * n);
    for (std::size_t c = 0; c < n * n; ++c) rr(0, c) = sol.kernel(r, c);
    IntMatrix zr = clear_denominators(rr);
    for (std::size_t c = 0; c < n * n; ++c) rows(r, c) = zr(0, c);
  }
  IntMatrix sat = saturate_rows(rows);
  CommutantBasis out;
  for (std::size_t r = 0; r < sat.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < n * n; ++c)
      if (sat(r, c) != 0) zero = false;
    if (zero) continue;
    IntMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = sat(r, i * n + j);
    out.basis.push_back(x);
  }
  // sanity: every basis element commutes with every generator
  for (const auto& x : out.basis)
    for (const auto& g : a.gens)
      if (x * g != g * x)
        throw numeric_error("commutant_z_basis: verification failed");
  return out;
}

std::optional<std::vector<Int>> commutant_coordinates(const CommutantBasis& c,
                                                      const IntMatrix& x) {
  if (c.basis.empty()) return std::nullopt;
  std::size_t n = x.rows();
  RatMatrix sys(n * n, c.basis.size());
  RatMatrix rhs(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rhs(i * n + j, 0) = Rat(x(i, j));
      for (std::size_t b = 0; b < c.basis.size(); ++b)
        sys(i * n + j, b) = Rat(c.basis[b](i, j));
    }
  auto sol = solve_rational(sys, rhs);
  if (!sol.particular) return std::nullopt;
  std::vector<Int> coords;
  for (std::size_t b = 0; b < c.basis.size(); ++b) {
    const Rat& v = (*sol.particular)(b, 0);
    if (!is_integer(v)) return std::nullopt;
    coords.push_back(v.get_num());
  }
  return coords;
}

NFElement gamma_of_matrix(const NumberField& field, const IntMatrix& witness,
                          const IntMatrix& x) {
  // solve x = sum_i c_i witness^i over Q
  std::size_t n = witness.rows();
  RatMatrix sys(n * n, n);
  RatMatrix rhs(n * n, 1);
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t deg = 0; deg < n; ++deg) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(i * n + j, deg) = Rat(p(i, j));
    if (deg + 1 < n) p = p * witness;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rhs(i * n + j, 0) = Rat(x(i, j));
  auto sol = solve_rational(sys, rhs);
  if (!sol.particular)
    throw domain_error(
        "gamma_of_matrix: matrix is not a polynomial in the witness");
  std::vector<Rat> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = (*sol.particular)(i, 0);
  return NFElement(field, coords);
}

GammaMapResult gamma_map(const ZdAction& a, const NumberField& field,
                         const IntMatrix& witness,
                         const CommutantBasis& commutant) {
  if (!(charpoly(witness) == field.poly()))
    throw domain_error("gamma_map: witness charpoly differs from field poly");
  if (!is_irreducible_q(field.poly()).irreducible)
    throw domain_error("gamma_map: witness is not irreducible");
  GammaMapResult out;
  std::size_t n = static_cast<std::size_t>(a.n);
  out.order_rows = RatMatrix(commutant.basis.size(), n);
  for (std::size_t b = 0; b < commutant.basis.size(); ++b) {
    NFElement e = gamma_of_matrix(field, witness, commutant.basis[b]);
    out.order_basis.push_back(e);
    for (std::size_t j = 0; j < n; ++j)
      out.order_rows(b, j) = e.coords()[j];
  }
  if (out.order_basis.size() != n)
    throw domain_error("gamma_map: commutant rank differs from degree");
  LatticeBasis order(field, out.order_rows);
  if (!order.is_ring())
    throw numeric_error("gamma_map: image is not a ring");
  // Z[lambda] <= gamma(C)
  LatticeBasis power = LatticeBasis::power_basis(field);
  out.index_over_power_basis = order.index_of_sublattice(power);
  return out;
}

TorsionResult torsion_elements(const ZdAction& a, const CommutantBasis& c,
                               int box) {
  std::size_t n = static_cast<std::size_t>(a.n);
  TorsionResult out;
  // certified shortcut: irreducible + totally real + hyperbolic witness
  auto irr = is_irreducible(a);
  if (irr.verdict == SearchVerdict::yes) {
    IntMatrix w = rho(a, *irr.witness);
    if (all_roots_real(charpoly(w)) && is_hyperbolic(w)) {
      out.elements = {-IntMatrix::identity(n), IntMatrix::identity(n)};
      std::sort(out.elements.begin(), out.elements.end());
      out.certified_complete = true;
      out.note =
          "irreducible, hyperbolic, totally real: only +-I has finite order";
      return out;
    }
  }
  if (c.rank() > 6 || std::pow(2.0 * box + 1, c.rank()) > 2e7) {
    out.certified_complete = false;
    out.note = "commutant rank too large for the exhaustive box";
    return out;
  }
  std::vector<long> e(static_cast<std::size_t>(c.rank()), -box);
  for (;;) {
    IntMatrix x(n, n);
    bool nonzero = false;
    for (std::size_t b = 0; b < c.basis.size(); ++b) {
      if (e[b] == 0) continue;
      nonzero = true;
      Int coef(e[b]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) += coef * c.basis[b](i, j);
    }
    if (nonzero) {
      Int d = det(x);
      if (d == 1 || d == -1) {
        // finite order iff x^k == I for some k with phi(k) <= n; the lcm of
        // admissible orders is small, try powers directly
        IntMatrix p = x;
        for (int k = 1; k <= 840; ++k) {
          if (p == IntMatrix::identity(n)) {
            out.elements.push_back(x);
            break;
          }
          bool diverged = false;
          for (const auto& ent : p.entries())
            if (abs(ent) > 1000000) {
              diverged = true;
              break;
            }
          if (diverged) break;
          p = p * x;
        }
      }
    }
    std::size_t pos = 0;
    for (; pos < e.size(); ++pos) {
      if (++e[pos] <= box) break;
      e[pos] = -box;
    }
    if (pos == e.size()) break;
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  out.certified_complete = false;
  out.note = "exhaustive coefficient box " + std::to_string(box);
  return out;
}

namespace {

// int64 fast path determinant for n <= 3 (entries stay far from overflow at
// the search sizes used here)
int64_t det64(const std::vector<int64_t>& m, std::size_t n) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace

std::vector<IntMatrix> unit_search(const CommutantBasis& c, int box) {
  std::vector<IntMatrix> out;
  if (c.basis.empty()) return out;
  std::size_t n = c.basis[0].rows();
  double combos = std::pow(2.0 * box + 1, c.rank());
  if (combos > 5e7)
    throw domain_error("unit_search: coefficient box too large for the rank");

  bool fast = n <= 3;
  int64_t max_entry = 0;
  std::vector<std::vector<int64_t>> basis64;
  if (fast) {
    for (const auto& b : c.basis) {
      std::vector<int64_t> flat;
      for (const auto& ent : b.entries()) {
        auto v = to_int64(ent);
        if (!v) {
          fast = false;
          break;
        }
        flat.push_back(*v);
        max_entry = std::max<int64_t>(max_entry, std::llabs(*v));
      }
      if (!fast) break;
      basis64.push_back(flat);
    }
    // crude overflow guard: |entries of X| <= rank * box * max_entry and the
    // 3x3 determinant is a sum of 6 triple products
    if (fast) {
      double bound = static_cast<double>(c.rank()) * box *
                     static_cast<double>(max_entry);
      if (6 * bound * bound * bound > 9e17) fast = false;
    }
  }

  std::vector<long> e(static_cast<std::size_t>(c.rank()), -box);
  std::vector<int64_t> x64(n * n, 0);
  auto recompute = [&] {
    std::fill(x64.begin(), x64.end(), 0);
    for (std::size_t b = 0; b < basis64.size(); ++b) {
      if (e[b] == 0) continue;
      for (std::size_t t = 0; t < n * n; ++t)
        x64[t] += e[b] * basis64[b][t];
    }
  };
  if (fast) recompute();

  auto harvest = [&](const std::vector<long>& coeffs) {
    IntMatrix x(n, n);
    for (std::size_t b = 0; b < c.basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      Int coef(coeffs[b]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          x(i, j) += coef * c.basis[b](i, j);
    }
    Int d = det(x);
    if (d != 1 && d != -1) return;
    // sign normalization modulo +-I
    for (const auto& ent : x.entries()) {
      if (ent == 0) continue;
      if (ent < 0) x = -x;
      break;
    }
    out.push_back(x);
  };

  for (;;) {
    bool nonzero = false;
    for (long v : e)
      if (v != 0) nonzero = true;
    if (nonzero) {
      if (fast) {
        int64_t d = det64(x64, n);
        if (d == 1 || d == -1) harvest(e);
      } else {
        harvest(e);
      }
    }
    std::size_t pos = 0;
    for (; pos < e.size(); ++pos) {
      if (++e[pos] <= box) break;
      e[pos] = -box;
    }
    if (pos == e.size()) break;
    if (fast) {
      if (pos == 0) {
        for (std::size_t t = 0; t < n * n; ++t) x64[t] += basis64[0][t];
      } else {
        recompute();
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LogLatticeIndex log_lattice_index(const std::vector<NFElement>& sub,
                                  const std::vector<NFElement>& super) {
  if (sub.empty() || sub.size() != super.size())
    throw domain_error("log_lattice_index: rank mismatch");
  const NumberField& k = sub[0].field();
  std::size_t r = sub.size();
  if (static_cast<int>(r) != k.unit_rank())
    throw domain_error("log_lattice_index: lists must have full unit rank");
  auto regulator = [&](const std::vector<NFElement>& units) {
    // det of the r x r block of the log embedding (drop the last place)
    std::vector<std::vector<double>> m;
    for (const auto& u : units) {
      auto lv = u.log_embedding();
      m.push_back(std::vector<double>(lv.begin(), lv.begin() + r));
    }
    // Gaussian elimination determinant
    double d = 1;
    for (std::size_t col = 0; col < r; ++col) {
      std::size_t best = col;
      for (std::size_t i = col; i < r; ++i)
        if (std::abs(m[i][col]) > std::abs(m[best][col])) best = i;
      if (std::abs(m[best][col]) < 1e-14) return 0.0;
      if (best != col) {
        std::swap(m[best], m[col]);
        d = -d;
      }
      d *= m[col][col];
      for (std::size_t i = col + 1; i < r; ++i) {
        double f = m[i][col] / m[col][col];
        for (std::size_t j = col; j < r; ++j) m[i][j] -= f * m[col][j];
      }
    }
    return std::abs(d);
  };
  double rs = regulator(sub), rsup = regulator(super);
  if (rs == 0.0 || rsup == 0.0)
    throw domain_error("log_lattice_index: multiplicatively dependent list");
  double ratio = rs / rsup;
  Int idx(static_cast<long>(std::llround(ratio)));
  double residual = std::abs(ratio - to_double(idx));
  if (idx < 1 || residual > 1e-6)
    throw numeric_error("log_lattice_index: ratio " + std::to_string(ratio) +
                        " is not near an integer");
  return {idx, residual};
}

UnitExponents unit_over_generators(const ZdAction& a, const NumberField& field,
                                   const IntMatrix& witness,
                                   const IntMatrix& unit_matrix) {
  UnitExponents out;
  out.resolved = false;
  out.in_group = false;
  NFElement u = gamma_of_matrix(field, witness, unit_matrix);
  std::vector<NFElement> gens;
  for (const auto& g : a.gens)
    gens.push_back(gamma_of_matrix(field, witness, g));
  // least squares on the log embedding: log(u) = sum e_i log(gens_i)
  std::size_t places = field.places().size();
  std::size_t d = gens.size();
  std::vector<std::vector<double>> g(d, std::vector<double>(places));
  for (std::size_t i = 0; i < d; ++i) g[i] = gens[i].log_embedding();
  std::vector<double> rhs = u.log_embedding();
  // normal equations (d x d)
  std::vector<std::vector<double>> ata(d, std::vector<double>(d, 0));
  std::vector<double> atb(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < places; ++p) ata[i][j] += g[i][p] * g[j][p];
    for (std::size_t p = 0; p < places; ++p) atb[i] += g[i][p] * rhs[p];
  }
  // solve
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t best = col;
    for (std::size_t i = col; i < d; ++i)
      if (std::abs(ata[i][col]) > std::abs(ata[best][col])) best = i;
    if (std::abs(ata[best][col]) < 1e-12) return out;
    std::swap(ata[best], ata[col]);
    std::swap(atb[best], atb[col]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col) continue;
      double f = ata[i][col] / ata[col][col];
      for (std::size_t j = 0; j < d; ++j) ata[i][j] -= f * ata[col][j];
      atb[i] -= f * atb[col];
    }
  }
  std::vector<double> expo(d);
  for (std::size_t i = 0; i < d; ++i) expo[i] = atb[i] / ata[i][i];
  // rational reconstruction with a common denominator
  Int q(1);
  std::vector<Rat> re(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto r = rational_reconstruct(expo[i], Int(60), 1e-5);
    if (!r) return out;
    re[i] = *r;
    q = lcm(q, r->get_den());
  }
  // exact verification on the matrix side: u^q == +- prod gens^p_i
  std::vector<Int> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = Rat(re[i] * Rat(q)).get_num();
  auto powm = [&](const IntMatrix& m, const Int& e) {
    Int ae = abs(e);
    IntMatrix base = e >= 0 ? m : inverse_unimodular(m);
    IntMatrix acc = IntMatrix::identity(m.rows());
    Int k = ae;
    while (k > 0) {
      if (k % 2 == 1) acc = acc * base;
      k /= 2;
      if (k > 0) base = base * base;
    }
    return acc;
  };
  IntMatrix lhs = powm(unit_matrix, q);
  IntMatrix rhsm = IntMatrix::identity(unit_matrix.rows());
  for (std::size_t i = 0; i < d; ++i)
    rhsm = rhsm * powm(a.gens[i], p[i]);
  if (lhs != rhsm && lhs != -rhsm) return out;
  out.resolved = true;
  out.q = q;
  out.p = p;
  out.in_group = (q == 1);
  return out;
}

MaximalityResult is_maximal_cartan(const ZdAction& a, const NumberField& field,
                                   const IntMatrix& witness,
                                   const std::vector<NFElement>& fundamentals,
                                   int box) {
  auto cartan = is_cartan(a);
  if (!cartan.cartan)
    throw domain_error("is_maximal_cartan: not a Cartan action (" +
                       cartan.reason + ")");
  CommutantBasis c = commutant_z_basis(a);
  MaximalityResult out;
  out.box = box;
  auto torsion = torsion_elements(a, c);
  if (!(torsion.certified_complete &&
        torsion.elements.size() == 2)) {
    out.verdict = MaximalityVerdict::not_verified;
    out.note = "torsion not certified as {+-I}";
    return out;
  }
  GammaMapResult gm = gamma_map(a, field, witness, c);
  LatticeBasis order(field, gm.order_rows);
  // claimed fundamental units inside the order give exact witnesses
  for (const auto& fu : fundamentals) {
    if (!fu.is_unit()) continue;
    if (!order.contains(fu)) continue;
    IntMatrix fm = mult_matrix_via_order(a, field, witness, fu, c);
    auto expo = unit_over_generators(a, field, witness, fm);
    if (expo.resolved && !expo.in_group) {
      out.verdict = MaximalityVerdict::not_maximal;
      out.witness = fu;
      out.note = "claimed fundamental unit lies in the order but outside "
                 "the group of the action";
      return out;
    }
    if (!expo.resolved) {
      out.verdict = MaximalityVerdict::not_verified;
      out.note = "fundamental unit exponents could not be reconstructed";
      return out;
    }
  }
  for (const auto& x : unit_search(c, box)) {
    auto expo = unit_over_generators(a, field, witness, x);
    if (!expo.resolved) {
      out.verdict = MaximalityVerdict::not_verified;
      out.note = "search unit exponents could not be reconstructed";
      return out;
    }
    if (!expo.in_group) {
      out.verdict = MaximalityVerdict::not_maximal;
      out.witness = gamma_of_matrix(field, witness, x);
      out.note = "unit found outside the group of the action (box " +
                 std::to_string(box) + ")";
      return out;
    }
  }
  out.verdict = MaximalityVerdict::maximal;
  out.note = "no outside unit within coefficient box " + std::to_string(box);
  return out;
}

AffineReport affine_report(const ZdAction& a, const NumberField& field,
                           const IntMatrix& witness,
                           const std::vector<NFElement>& fundamentals,
                           int box) {
  CommutantBasis c = commutant_z_basis(a);
  FixedPointData fix = fixed_points(a);
  auto torsion = torsion_elements(a, c);
  AffineReport out;
  out.fix_order = fix.order;
  out.fix_factors = fix.invariant_factors;
  out.zalpha_torsion_order = Int(static_cast<long>(torsion.elements.size()));
  out.free_rank = field.unit_rank();

  // exponent lattice of the discovered unit group over the generator
  // formal basis: starts at Z^d, refined by units with fractional exponents
  std::vector<std::vector<Rat>> lattice_rows;
  for (int i = 0; i < a.d; ++i) {
    std::vector<Rat> row(static_cast<std::size_t>(a.d), Rat(0));
    row[static_cast<std::size_t>(i)] = Rat(1);
    lattice_rows.push_back(row);
  }
  auto add_unit = [&](const IntMatrix& um) {
    auto expo = unit_over_generators(a, field, witness, um);
    if (!expo.resolved || expo.q == 1) return;
    std::vector<Rat> row(static_cast<std::size_t>(a.d));
    for (int i = 0; i < a.d; ++i)
      row[static_cast<std::size_t>(i)] =
          make_rat(expo.p[static_cast<std::size_t>(i)], expo.q);
    lattice_rows.push_back(row);
  };
  GammaMapResult gm = gamma_map(a, field, witness, c);
  LatticeBasis order(field, gm.order_rows);
  for (const auto& fu : fundamentals) {
    if (!fu.is_unit() || !order.contains(fu)) continue;
    add_unit(mult_matrix_via_order(a, field, witness, fu, c));
  }
  for (const auto& x : unit_search(c, box)) add_unit(x);

  // index of the refined exponent lattice over Z^d
  std::size_t rows = lattice_rows.size();
  Int den(1);
  for (const auto& row : lattice_rows)
    for (const auto& v : row) den = lcm(den, v.get_den());
  IntMatrix scaled(rows, static_cast<std::size_t>(a.d));
  for (std::size_t i = 0; i < rows; ++i)
    for (int j = 0; j < a.d; ++j)
      scaled(i, static_cast<std::size_t>(j)) =
          Rat(lattice_rows[i][static_cast<std::size_t>(j)] * Rat(den))
              .get_num();
  IntMatrix h = hnf(scaled);
  Int covol(1);
  for (int j = 0; j < a.d; ++j)
    covol *= h(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
  // [lattice : Z^d] = den^d / covol
  Int dend = 1;
  for (int j = 0; j < a.d; ++j) dend *= den;
  out.unit_index = exact_div(dend, covol);

  out.index_zaff = out.zalpha_torsion_order * out.unit_index * out.fix_order;
  out.zaff_torsion_order = out.zalpha_torsion_order * out.fix_order;
  std::string type = "Z^" + std::to_string(out.free_rank);
  if (out.zalpha_torsion_order == 2) type += " x Z/2";
  for (const auto& f : fix.invariant_factors)
    type += " x Z/" + f.get_str();
  out.abstract_type = type;
  return out;
}

IntMatrix mult_matrix_via_order(const ZdAction& a, const NumberField& field,
                                const IntMatrix& witness, const NFElement& u,
                                const CommutantBasis& c) {
  // the matrix acting on Z^n whose gamma-image is u: solve for integer
  // coordinates of u over the gamma images of the commutant basis
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix sys(n, c.basis.size());
  RatMatrix rhs(n, 1);
  for (std::size_t b = 0; b < c.basis.size(); ++b) {
    NFElement gb = gamma_of_matrix(field, witness, c.basis[b]);
    for (std::size_t i = 0; i < n; ++i) sys(i, b) = gb.coords()[i];
  }
  for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = u.coords()[i];
  auto sol = solve_rational(sys, rhs);
  if (!sol.particular || !is_integral(*sol.particular))
    throw domain_error(
        "mult_matrix_via_order: unit is not in the commutant order");
  IntMatrix x(n, n);
  for (std::size_t b = 0; b < c.basis.size(); ++b) {
    Int coef = (*sol.particular)(b, 0).get_num();
    if (coef == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) += coef * c.basis[b](i, j);
  }
  return x;
}

}  // namespace toralg
