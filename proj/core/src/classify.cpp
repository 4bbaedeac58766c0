#include "toralg/classify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "toralg/exact_linalg.hpp"
#include "toralg/lattice.hpp"

namespace toralg {

bool ActionFieldData::ok_is_power_basis() const {
  auto it = lattices.find("ok_basis");
  if (it == lattices.end()) return false;
  LatticeBasis ok(*field, it->second);
  LatticeBasis power = LatticeBasis::power_basis(*field);
  return ok.same_lattice(power);
}

// ---- conjugacy --------------------------------------------------------------

namespace {

// kernel basis of the joint intertwiner system {V A_i = B_i V}
RatMatrix intertwiner_kernel(const ZdAction& a, const ZdAction& b) {
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix sys(n * n * static_cast<std::size_t>(a.d), n * n);
  for (int g = 0; g < a.d; ++g) {
    const IntMatrix& am = a.gens[static_cast<std::size_t>(g)];
    const IntMatrix& bm = b.gens[static_cast<std::size_t>(g)];
    std::size_t base = static_cast<std::size_t>(g) * n * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t eq = base + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          sys(eq, i * n + k) += Rat(am(k, j));  // (V a)_{ij}
          sys(eq, k * n + j) -= Rat(bm(i, k));  // (b V)_{ij}
        }
      }
  }
  return solve_rational(sys, RatMatrix(sys.rows(), 0)).kernel;
}

IntMatrix kernel_row_to_matrix(const RatMatrix& kernel, std::size_t row,
                               std::size_t n) {
  RatMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i, j) = kernel(row, i * n + j);
  return primitive_integer_matrix(v);
}

bool verify_conjugation(const ZdAction& a, const ZdAction& b,
                        const IntMatrix& v) {
  for (int g = 0; g < a.d; ++g)
    if (v * a.gens[static_cast<std::size_t>(g)] !=
        b.gens[static_cast<std::size_t>(g)] * v)
      return false;
  return true;
}

}  // namespace

ConjugacyQResult conjugate_over_q(const ZdAction& a, const ZdAction& b) {
  if (a.d != b.d)
    throw shape_error("conjugate_over_q: actions have different rank");
  if (a.n != b.n)
    return {SearchVerdict::no, std::nullopt, "different torus dimensions"};
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix kernel = intertwiner_kernel(a, b);
  if (kernel.rows() == 0)
    return {SearchVerdict::no, std::nullopt, "no nonzero intertwiner"};
  if (is_irreducible(a).verdict == SearchVerdict::yes) {
    // any nonzero intertwiner is invertible: a kernel would be an invariant
    // rational subspace
    IntMatrix v = kernel_row_to_matrix(kernel, 0, n);
    if (det(v) == 0)
      throw numeric_error(
          "conjugate_over_q: singular intertwiner for an irreducible action");
    if (!verify_conjugation(a, b, v))
      throw numeric_error("conjugate_over_q: verification failed");
    return {SearchVerdict::yes, v, "irreducible case"};
  }
  // bounded search over integer combinations
  std::size_t k = kernel.rows();
  if (k > 6)
    return {SearchVerdict::not_verified, std::nullopt,
            "intertwiner space too large for the bounded search"};
  std::vector<IntMatrix> basis;
  for (std::size_t r = 0; r < k; ++r)
    basis.push_back(kernel_row_to_matrix(kernel, r, n));
  std::vector<long> e(k, -10);
  for (;;) {
    IntMatrix v(n, n);
    bool nonzero = false;
    for (std::size_t r = 0; r < k; ++r) {
      if (e[r] == 0) continue;
      nonzero = true;
      Int c(e[r]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i, j) += c * basis[r](i, j);
    }
    if (nonzero && det(v) != 0 && verify_conjugation(a, b, v))
      return {SearchVerdict::yes, v, "found by bounded search"};
    std::size_t pos = 0;
    for (; pos < k; ++pos) {
      if (++e[pos] <= 10) break;
      e[pos] = -10;
    }
    if (pos == k) break;
  }
  return {SearchVerdict::not_verified, std::nullopt,
          "no invertible combination with coefficients <= 10"};
}

ConjugacyZResult conjugate_over_z(
    const ZdAction& a, const ZdAction& b, int bound,
    const std::optional<IntMatrix>& square_root_of_b) {
  ConjugacyZResult out;
  out.bound = bound;
  if (a.n != b.n) {
    out.verdict = SearchVerdict::no;
    out.obstruction = "different torus dimensions";
    return out;
  }
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix kernel = intertwiner_kernel(a, b);
  if (kernel.rows() == 0) {
    out.verdict = SearchVerdict::no;
    out.obstruction = "not even rationally conjugate";
    return out;
  }
  std::size_t k = kernel.rows();
  if (k <= 6) {
    std::vector<IntMatrix> basis;
    for (std::size_t r = 0; r < k; ++r)
      basis.push_back(kernel_row_to_matrix(kernel, r, n));
    std::vector<long> e(k, -bound);
    for (;;) {
      IntMatrix v(n, n);
      bool nonzero = false;
      for (std::size_t r = 0; r < k; ++r) {
        if (e[r] == 0) continue;
        nonzero = true;
        Int c(e[r]);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) v(i, j) += c * basis[r](i, j);
      }
      if (nonzero) {
        Int d = det(v);
        if ((d == 1 || d == -1) && verify_conjugation(a, b, v)) {
          out.verdict = SearchVerdict::yes;
          out.conjugator = v;
          return out;
        }
      }
      std::size_t pos = 0;
      for (; pos < k; ++pos) {
        if (++e[pos] <= bound) break;
        e[pos] = -bound;
      }
      if (pos == k) break;
    }
  }
  // mod-2 square obstruction: if b = M^2 in SL(n,Z) and a is not a square
  // mod 2, a cannot be conjugate to b over Z
  if (square_root_of_b && a.d == 1 && a.n <= 4) {
    const IntMatrix& m = *square_root_of_b;
    if (m * m == b.gens[0] && !is_square_mod2(a.gens[0])) {
      out.verdict = SearchVerdict::no;
      out.obstruction =
          "second matrix is a square in SL(n,Z); first is not a square "
          "mod 2";
      return out;
    }
  }
  out.verdict = SearchVerdict::not_verified;
  out.obstruction =
      "no unimodular combination with coefficients <= " +
      std::to_string(bound);
  return out;
}

bool is_square_mod2(const IntMatrix& m) {
  if (!m.square()) throw shape_error("is_square_mod2: non-square matrix");
  std::size_t n = m.rows();
  if (n > 4) throw domain_error("is_square_mod2: supported for n <= 4 only");
  std::size_t bits = n * n;
  std::vector<int> target(bits);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int r = m(i, j) % 2;
      target[i * n + j] = (r != 0) ? 1 : 0;
    }
  for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
    // X^2 over F_2
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        int s = 0;
        for (std::size_t k = 0; k < n; ++k) {
          int xik = (mask >> (i * n + k)) & 1ul;
          int xkj = (mask >> (k * n + j)) & 1ul;
          s ^= xik & xkj;
        }
        if (s != target[i * n + j]) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

// ---- cyclicity --------------------------------------------------------------

IntMatrix orbit_lattice(const ZdAction& a, const std::vector<Int>& v) {
  std::size_t n = static_cast<std::size_t>(a.n);
  std::vector<IntMatrix> ops;
  for (const auto& g : a.gens) {
    ops.push_back(g);
    ops.push_back(inverse_unimodular(g));
  }
  IntMatrix l(1, n);
  l.set_row(0, v);
  l = hnf(l);
  for (;;) {
    // stack l with all images and reduce
    IntMatrix next(l.rows() * (ops.size() + 1), n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < l.rows(); ++i) next.set_row(r++, l.row(i));
    for (const auto& op : ops) {
      IntMatrix im = l * op;
      for (std::size_t i = 0; i < im.rows(); ++i) next.set_row(r++, im.row(i));
    }
    IntMatrix h = hnf(next);
    // drop zero rows
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (h(i, j) != 0) {
          nonzero = i + 1;
          break;
        }
    IntMatrix trimmed(nonzero, n);
    for (std::size_t i = 0; i < nonzero; ++i) trimmed.set_row(i, h.row(i));
    if (trimmed == l) return l;
    l = trimmed;
  }
}

std::vector<Int> orbit_form_coefficients(const IntMatrix& a) {
  if (a.rows() != 3) throw domain_error("orbit_form_coefficients: n != 3");
  // rows of [m; mA; mA^2] are linear forms in m; each column j of A gives
  // the coefficient vector of (mA)_j
  IntMatrix a2 = a * a;
  // linear forms: lf[r][j] = coefficient vector (length 3) of entry (r, j)
  std::vector<std::vector<std::vector<Int>>> lf(
      3, std::vector<std::vector<Int>>(3, std::vector<Int>(3)));
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      lf[0][j][i] = (i == j) ? 1 : 0;
      lf[1][j][i] = a(i, j);
      lf[2][j][i] = a2(i, j);
    }
  }
  // expand det = sum over permutations
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const int signs[6] = {1, 1, 1, -1, -1, -1};
  // cubic coefficients indexed by exponent triple
  std::map<std::array<int, 3>, Int> cubic;
  for (int p = 0; p < 6; ++p) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          Int c = Int(signs[p]) * lf[0][static_cast<std::size_t>(perms[p][0])]
                                    [static_cast<std::size_t>(i)] *
                  lf[1][static_cast<std::size_t>(perms[p][1])]
                    [static_cast<std::size_t>(j)] *
                  lf[2][static_cast<std::size_t>(perms[p][2])]
                    [static_cast<std::size_t>(k)];
          if (c == 0) continue;
          std::array<int, 3> expo = {0, 0, 0};
          expo[static_cast<std::size_t>(i)]++;
          expo[static_cast<std::size_t>(j)]++;
          expo[static_cast<std::size_t>(k)]++;
          cubic[expo] += c;
        }
  }
  const std::array<std::array<int, 3>, 10> order = {{{3, 0, 0},
                                                     {2, 1, 0},
                                                     {2, 0, 1},
                                                     {1, 2, 0},
                                                     {1, 1, 1},
                                                     {1, 0, 2},
                                                     {0, 3, 0},
                                                     {0, 2, 1},
                                                     {0, 1, 2},
                                                     {0, 0, 3}}};
  std::vector<Int> out;
  for (const auto& e : order) out.push_back(cubic[e]);
  return out;
}

namespace {

// every generator and inverse an integer polynomial in the witness
bool ring_generated_by(const ZdAction& a, const IntMatrix& witness) {
  std::size_t n = static_cast<std::size_t>(a.n);
  RatMatrix sys(n * n, n);
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t deg = 0; deg < n; ++deg) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(i * n + j, deg) = Rat(p(i, j));
    if (deg + 1 < n) p = p * witness;
  }
  auto expressible = [&](const IntMatrix& x) {
    RatMatrix rhs(n * n, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rhs(i * n + j, 0) = Rat(x(i, j));
    auto sol = solve_rational(sys, rhs);
    return sol.particular && is_integral(*sol.particular);
  };
  for (const auto& g : a.gens) {
    if (!expressible(g)) return false;
    if (!expressible(inverse_unimodular(g))) return false;
  }
  return true;
}

}  // namespace

CyclicityResult cyclicity(const ZdAction& a, int vbox) {
  std::size_t n = static_cast<std::size_t>(a.n);
  CyclicityResult out;
  // keep the witness box tractable in higher dimension
  while (vbox > 1 &&
         std::pow(2.0 * vbox + 1, static_cast<double>(n)) > 5000.0)
    --vbox;
  // stage 1: witness search, standard basis vectors first
  std::vector<std::vector<Int>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    candidates.push_back(e);
  }
  {
    std::vector<long> v(n, -vbox);
    for (;;) {
      bool nonzero = false;
      for (long x : v)
        if (x != 0) nonzero = true;
      if (nonzero) {
        std::vector<Int> cand(n);
        for (std::size_t i = 0; i < n; ++i) cand[i] = Int(v[i]);
        if (std::find(candidates.begin(), candidates.end(), cand) ==
            candidates.end())
          candidates.push_back(cand);
      }
      std::size_t pos = 0;
      for (; pos < n; ++pos) {
        if (++v[pos] <= vbox) break;
        v[pos] = -vbox;
      }
      if (pos == n) break;
    }
  }
  for (const auto& v : candidates) {
    IntMatrix l = orbit_lattice(a, v);
    if (l.rows() == n && lattice_index_in_zn(l) == 1) {
      out.verdict = CyclicityVerdict::cyclic;
      out.witness = v;
      out.note = "orbit of the witness spans Z^n";
      return out;
    }
  }
  // stage 2: modular obstruction from the orbit form (n = 3, single
  // generating matrix for the acting ring)
  if (n == 3) {
    auto irr = is_irreducible(a);
    if (irr.verdict == SearchVerdict::yes) {
      IntMatrix witness = rho(a, *irr.witness);
      if (ring_generated_by(a, witness)) {
        std::vector<Int> form = orbit_form_coefficients(witness);
        out.form_coefficients = form;
        for (int p : {2, 3, 5, 7}) {
          bool all = true;
          for (const auto& c : form)
            if (c % p != 0) all = false;
          if (all) {
            out.verdict = CyclicityVerdict::non_cyclic;
            out.obstruction_prime = p;
            out.note = "orbit form vanishes identically mod " +
                       std::to_string(p);
            return out;
          }
        }
      }
    }
  }
  out.verdict = CyclicityVerdict::not_verified;
  out.note = "no witness within |v| <= " + std::to_string(vbox) +
             " and no modular obstruction";
  return out;
}

// ---- ideals -----------------------------------------------------------------

IdealLattice ideal_from_rows(std::shared_ptr<const NumberField> field,
                             const RatMatrix& rows) {
  LatticeBasis basis(*field, rows);
  LatticeBasis canon = basis.canonical();
  IdealLattice out;
  out.field = std::move(field);
  out.basis_rows = canon.coord_matrix();
  out.norm = canon.covolume();
  return out;
}

IdealLattice lm_ideal_of_matrix(const IntMatrix& m,
                                std::shared_ptr<const NumberField> field) {
  if (!(charpoly(m) == field->poly()))
    throw domain_error(
        "lm_ideal_of_matrix: charpoly differs from the field polynomial");
  const NumberField& k = *field;
  std::size_t n = static_cast<std::size_t>(k.degree());
  // solve (m - lambda I) v = 0 over K by Gaussian elimination
  std::vector<std::vector<NFElement>> w(
      n, std::vector<NFElement>(n, NFElement::zero(k)));
  NFElement lambda = NFElement::generator(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w[i][j] = Rat(m(i, j)) * NFElement::one(k);
      if (i == j) w[i][j] = w[i][j] - lambda;
    }
  // eliminate; the kernel is one-dimensional
  std::vector<std::size_t> pivot_of_col(n, n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = rank; i < n; ++i)
      if (!w[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(w[rank], w[piv]);
    NFElement inv = w[rank][col].inverse();
    for (std::size_t j = 0; j < n; ++j) w[rank][j] = inv * w[rank][j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || w[i][col].is_zero()) continue;
      NFElement f = w[i][col];
      for (std::size_t j = 0; j < n; ++j)
        w[i][j] = w[i][j] - f * w[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  if (rank != n - 1)
    throw numeric_error("lm_ideal_of_matrix: kernel dimension != 1");
  // free column gives the eigenvector
  std::size_t free_col = n;
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_of_col[col] == n) free_col = col;
  std::vector<NFElement> v(n, NFElement::zero(k));
  v[free_col] = NFElement::one(k);
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] == n) continue;
    v[col] = -w[pivot_of_col[col]][free_col];
  }
  // scale all entries into Z[lambda]
  Int den = 1;
  for (const auto& e : v)
    for (const auto& c : e.coords()) den = lcm(den, c.get_den());
  RatMatrix rows(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows(i, j) = v[i].coords()[j] * Rat(den);
  // sanity: m v = lambda v componentwise
  for (std::size_t i = 0; i < n; ++i) {
    NFElement lhs = NFElement::zero(k);
    for (std::size_t j = 0; j < n; ++j)
      lhs = lhs + Rat(m(i, j)) * NFElement(k, rows.row(j));
    if (!(lhs == lambda * NFElement(k, rows.row(i))))
      throw numeric_error("lm_ideal_of_matrix: eigenvector check failed");
  }
  IdealLattice out = ideal_from_rows(field, rows);
  // module property: the multiplication matrix of lambda on this basis is m
  LatticeBasis basis(*field, [&] {
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = rows(i, j);
    return b;
  }());
  IntMatrix check = mult_matrix(lambda, basis);
  if (check != m)
    throw numeric_error("lm_ideal_of_matrix: module verification failed");
  return out;
}

IdealEquivalenceResult ideal_equivalent(const IdealLattice& i,
                                        const IdealLattice& j,
                                        const std::vector<NFElement>& units) {
  IdealEquivalenceResult out;
  if (!(i.field->poly() == j.field->poly()))
    throw domain_error("ideal_equivalent: different fields");
  const NumberField& k = *i.field;
  std::size_t n = static_cast<std::size_t>(k.degree());
  if (k.complex_pairs() != 0) {
    out.verdict = IdealEquivalence::not_verified;
    out.note = "certified enumeration implemented for totally real fields";
    return out;
  }
  LatticeBasis bi(k, i.basis_rows), bj(k, j.basis_rows);
  // units must preserve both lattices for the fundamental-domain reduction
  for (const auto& u : units) {
    if (!u.is_unit() || !bi.scaled(u).same_lattice(bi) ||
        !bj.scaled(u).same_lattice(bj)) {
      out.verdict = IdealEquivalence::not_verified;
      out.note = "a unit does not preserve both lattices";
      return out;
    }
  }
  if (static_cast<int>(units.size()) != k.unit_rank()) {
    out.verdict = IdealEquivalence::not_verified;
    out.note = "need a full-rank independent unit system";
    return out;
  }
  // H = (J : I) = intersection of J * b^-1 over basis elements b of I
  RatMatrix h_rows = j.basis_rows;
  bool have = false;
  for (int bidx = 0; bidx < bi.rank(); ++bidx) {
    NFElement binv = bi.element(bidx).inverse();
    LatticeBasis scaled = bj.scaled(binv);
    if (!have) {
      h_rows = scaled.coord_matrix();
      have = true;
      continue;
    }
    // intersect h_rows with scaled
    Int den = 1;
    for (const auto& x : h_rows.entries()) den = lcm(den, x.get_den());
    for (const auto& x : scaled.coord_matrix().entries())
      den = lcm(den, x.get_den());
    auto scale_up = [&](const RatMatrix& m) {
      IntMatrix z(m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          z(r, c) = Rat(m(r, c) * Rat(den)).get_num();
      return z;
    };
    IntMatrix inter = lattice_intersection(scale_up(h_rows),
                                           scale_up(scaled.coord_matrix()));
    RatMatrix back(inter.rows(), inter.cols());
    for (std::size_t r = 0; r < inter.rows(); ++r)
      for (std::size_t c = 0; c < inter.cols(); ++c)
        back(r, c) = make_rat(inter(r, c), den);
    h_rows = back;
  }
  Rat target = j.norm / i.norm;  // |N(x)| for any multiplier
  // enumeration radius from the unit fundamental cell
  double cov = 0;
  for (const auto& u : units) {
    double s = 0;
    for (double l : u.log_embedding()) s += l * l;
    cov += std::sqrt(s);
  }
  cov /= 2;
  double tt = to_double(target);
  double radius_d =
      n * std::pow(tt, 2.0 / static_cast<double>(n)) * std::exp(2 * cov);
  Rat radius = make_rat(Int(static_cast<long>(std::ceil(radius_d * 1.05))) + 1,
                        1);
  RatMatrix gram = LatticeBasis::trace_form_gram(k);
  RatMatrix reduced = lattice_reduce(h_rows, gram);
  auto shorts = enumerate_short_vectors(reduced, gram, radius);
  for (const auto& vec : shorts) {
    NFElement x(k, vec);
    Rat nx = x.norm();
    if (!(nx == target || nx == -target)) continue;
    if (bi.scaled(x).same_lattice(bj)) {
      out.verdict = IdealEquivalence::equivalent;
      out.multiplier = x;
      out.note = "multiplier found by short-vector enumeration";
      return out;
    }
  }
  out.verdict = IdealEquivalence::inequivalent;
  out.note =
      "no multiplier of norm +-" + target.get_str() +
      " in the fundamental-cell ball (radius " + radius.get_str() + ")";
  return out;
}

// ---- centralizer transitivity -------------------------------------------------

TransitivityResult centralizer_transitive(const ZdAction& a,
                                          const ActionFieldData* fd,
                                          int vbox) {
  TransitivityResult out;
  auto irr = is_irreducible(a);
  if (irr.verdict != SearchVerdict::yes) {
    out.verdict = TransitivityVerdict::not_transitive;
    out.note = "action is not irreducible (transitivity in the module sense "
               "applies to irreducible actions)";
    return out;
  }
  CommutantBasis c = commutant_z_basis(a);
  std::size_t n = static_cast<std::size_t>(a.n);
  // witness search: orbit of v under the commutant
  std::vector<std::vector<Int>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    candidates.push_back(e);
  }
  std::vector<long> v(n, -vbox);
  for (;;) {
    bool nonzero = false;
    for (long x : v)
      if (x != 0) nonzero = true;
    if (nonzero) {
      std::vector<Int> cand(n);
      for (std::size_t t = 0; t < n; ++t) cand[t] = Int(v[t]);
      if (std::find(candidates.begin(), candidates.end(), cand) ==
          candidates.end())
        candidates.push_back(cand);
    }
    std::size_t pos = 0;
    for (; pos < n; ++pos) {
      if (++v[pos] <= vbox) break;
      v[pos] = -vbox;
    }
    if (pos == n) break;
  }
  for (const auto& cand : candidates) {
    IntMatrix orbit(static_cast<std::size_t>(c.rank()), n);
    for (int b = 0; b < c.rank(); ++b) {
      auto img = cand * c.basis[static_cast<std::size_t>(b)];
      orbit.set_row(static_cast<std::size_t>(b), img);
    }
    IntMatrix h = hnf(orbit);
    bool full = true;
    for (std::size_t t = 0; t < n; ++t)
      if (h(t, t) != 1) full = false;
    if (full) {
      out.verdict = TransitivityVerdict::transitive;
      out.witness = cand;
      out.note = "commutant orbit of the witness is Z^n";
      return out;
    }
  }
  // certified non-transitivity via the ideal route
  if (fd && fd->field) {
    IntMatrix witness = rho(a, *irr.witness);
    if (charpoly(witness) == fd->field->poly()) {
      try {
        IdealLattice m = lm_ideal_of_matrix(witness, fd->field);
        CommutantBasis cb = commutant_z_basis(a);
        GammaMapResult gm = gamma_map(a, *fd->field, witness, cb);
        IdealLattice order = ideal_from_rows(fd->field, gm.order_rows);
        auto eq = ideal_equivalent(order, m, fd->units);
        if (eq.verdict == IdealEquivalence::inequivalent) {
          out.verdict = TransitivityVerdict::not_transitive;
          out.note = "orbit module is not principal over the commutant order";
          return out;
        }
        if (eq.verdict == IdealEquivalence::equivalent) {
          // principal: some vector's orbit is everything (outside the box)
          out.verdict = TransitivityVerdict::transitive;
          out.note = "orbit module principal over the commutant order";
          return out;
        }
      } catch (const std::exception&) {
        // fall through to not verified
      }
    }
  }
  out.verdict = TransitivityVerdict::not_verified;
  out.note = "no witness within |v| <= " + std::to_string(vbox) +
             "; no ideal certificate available";
  return out;
}

// ---- time change ---------------------------------------------------------------

TimeChangeResult time_change_equivalent_q(const ZdAction& a,
                                          const ZdAction& b,
                                          const ActionFieldData& fa,
                                          const ActionFieldData& fb) {
  TimeChangeResult out;
  if (!(fa.field->poly() == fb.field->poly())) {
    out.verdict = SearchVerdict::not_verified;
    out.note = "field presentations differ";
    return out;
  }
  const NumberField& k = *fa.field;
  std::size_t d = fa.units.size();
  if (d != fb.units.size() || static_cast<int>(d) != a.d || a.d != b.d) {
    out.verdict = SearchVerdict::no;
    out.note = "unit tuples of different lengths";
    return out;
  }
  std::size_t places = k.places().size();
  std::vector<std::vector<double>> la, lb;
  for (const auto& u : fa.units) la.push_back(u.log_embedding());
  for (const auto& u : fb.units) lb.push_back(u.log_embedding());
  // candidate permutations of the places
  std::vector<int> perm(places);
  for (std::size_t i = 0; i < places; ++i) perm[i] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t pi = 0; pi < perms.size(); ++pi) {
    const auto& sigma = perms[pi];
    // solve log(mu_i) = sum_j C_ij sigma(log(lambda_j)) for integer C
    // via least squares row by row
    std::vector<std::vector<double>> g(d, std::vector<double>(places));
    for (std::size_t jdx = 0; jdx < d; ++jdx)
      for (std::size_t p = 0; p < places; ++p)
        g[jdx][p] = la[jdx][static_cast<std::size_t>(sigma[p])];
    bool ok = true;
    IntMatrix c(d, d);
    for (std::size_t i = 0; i < d && ok; ++i) {
      // normal equations
      std::vector<std::vector<double>> ata(d, std::vector<double>(d, 0));
      std::vector<double> atb(d, 0);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t p = 0; p < places; ++p)
            ata[r][s] += g[r][p] * g[s][p];
        for (std::size_t p = 0; p < places; ++p) atb[r] += g[r][p] * lb[i][p];
      }
      for (std::size_t col = 0; col < d && ok; ++col) {
        std::size_t best = col;
        for (std::size_t r = col; r < d; ++r)
          if (std::abs(ata[r][col]) > std::abs(ata[best][col])) best = r;
        if (std::abs(ata[best][col]) < 1e-12) {
          ok = false;
          break;
        }
        std::swap(ata[best], ata[col]);
        std::swap(atb[best], atb[col]);
        for (std::size_t r = 0; r < d; ++r) {
          if (r == col) continue;
          double f = ata[r][col] / ata[col][col];
          for (std::size_t s = 0; s < d; ++s) ata[r][s] -= f * ata[col][s];
          atb[r] -= f * atb[col];
        }
      }
      if (!ok) break;
      for (std::size_t jdx = 0; jdx < d; ++jdx) {
        double e = atb[jdx] / ata[jdx][jdx];
        double r = std::round(e);
        if (std::abs(e - r) > 1e-6 || std::abs(r) > 64) {
          ok = false;
          break;
        }
        c(i, jdx) = Int(static_cast<long>(r));
      }
      // residual check
      if (ok) {
        for (std::size_t p = 0; p < places; ++p) {
          double s = 0;
          for (std::size_t jdx = 0; jdx < d; ++jdx)
            s += to_double(Rat(c(i, jdx))) * g[jdx][p];
          if (std::abs(s - lb[i][p]) > 1e-8) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    Int dc = det(c);
    if (dc != 1 && dc != -1) continue;
    // verification
    bool identity_sigma = true;
    for (std::size_t p = 0; p < places; ++p)
      if (sigma[p] != static_cast<int>(p)) identity_sigma = false;
    bool verified = true;
    for (std::size_t i = 0; i < d && verified; ++i) {
      NFElement z = NFElement::one(k);
      for (std::size_t jdx = 0; jdx < d; ++jdx) {
        auto e = to_int64(c(i, jdx));
        z = z * fa.units[jdx].pow(static_cast<long>(*e));
      }
      if (identity_sigma) {
        if (!(z == fb.units[i] || z == -fb.units[i])) verified = false;
      } else {
        // exact minimal-polynomial agreement plus the numeric pairing that
        // produced sigma
        if (!(z.min_poly() == fb.units[i].min_poly()) &&
            !(z.min_poly() == (-fb.units[i]).min_poly()))
          verified = false;
      }
    }
    if (!verified) continue;
    out.verdict = SearchVerdict::yes;
    out.galois_index = static_cast<int>(pi);
    out.change = c;
    out.exact = identity_sigma;
    out.note = identity_sigma
                   ? "identity embedding, verified exactly in the field"
                   : "nontrivial root permutation; minimal polynomials agree "
                     "and the log pairing matches";
    return out;
  }
  out.verdict = SearchVerdict::no;
  out.note = "no root permutation admits an integer unimodular exponent "
             "change";
  return out;
}

// ---- comparison -------------------------------------------------------------------

ComparisonReport compare(const ZdAction& a, const ZdAction& b,
                         const ActionFieldData* fa,
                         const ActionFieldData* fb) {
  if (a.d != b.d) throw domain_error("compare: actions of different rank");
  ComparisonReport r;
  r.n_a = a.n;
  r.n_b = b.n;
  r.d = a.d;

  // entropy functions on the grid
  LyapunovData la = lyapunov_data(a);
  LyapunovData lb = lyapunov_data(b);
  double dev = 0;
  std::vector<long> v(static_cast<std::size_t>(a.d), -3);
  for (;;) {
    dev = std::max(dev, std::abs(entropy_function(la, v) -
                                 entropy_function(lb, v)));
    std::size_t pos = 0;
    for (; pos < v.size(); ++pos) {
      if (++v[pos] <= 3) break;
      v[pos] = -3;
    }
    if (pos == v.size()) break;
  }
  r.entropy_max_deviation = dev;
  r.entropy_equal = dev < 1e-8;

  r.rational = a.n == b.n
                   ? conjugate_over_q(a, b)
                   : ConjugacyQResult{SearchVerdict::no, std::nullopt,
                                      "different torus dimensions"};
  r.integral = conjugate_over_z(a, b);

  r.cyclicity_a = cyclicity(a);
  r.cyclicity_b = cyclicity(b);
  r.fix_a = fixed_points(a).order;
  r.fix_b = fixed_points(b).order;

  CommutantBasis ca = commutant_z_basis(a);
  CommutantBasis cb = commutant_z_basis(b);
  r.commutant_rank_a = ca.rank();
  r.commutant_rank_b = cb.rank();
  r.commutant_abelian_a = ca.is_abelian();
  r.commutant_abelian_b = cb.is_abelian();

  r.maximality_available = false;
  if (fa && fb && is_cartan(a).cartan && is_cartan(b).cartan) {
    auto wa = is_irreducible(a);
    auto wb = is_irreducible(b);
    if (wa.verdict == SearchVerdict::yes && wb.verdict == SearchVerdict::yes) {
      IntMatrix ma = rho(a, *wa.witness);
      IntMatrix mb = rho(b, *wb.witness);
      if (charpoly(ma) == fa->field->poly() &&
          charpoly(mb) == fb->field->poly()) {
        r.maximal_a =
            is_maximal_cartan(a, *fa->field, ma, fa->fundamental_units);
        r.maximal_b =
            is_maximal_cartan(b, *fb->field, mb, fb->fundamental_units);
        r.maximality_available = true;
      }
    }
  }

  // Latimer-MacDuffee route: common witness word, fields presented by the
  // same polynomial with O_K equal to the power order
  r.ideal_available = false;
  if (fa && fb && a.n == b.n && fa->field->poly() == fb->field->poly() &&
      fa->ok_is_power_basis() && fb->ok_is_power_basis()) {
    auto wa = is_irreducible(a);
    if (wa.verdict == SearchVerdict::yes) {
      IntMatrix ma = rho(a, *wa.witness);
      IntMatrix mb = rho(b, *wa.witness);
      if (charpoly(ma) == fa->field->poly() && charpoly(ma) == charpoly(mb)) {
        IdealLattice ia = lm_ideal_of_matrix(ma, fa->field);
        IdealLattice ib = lm_ideal_of_matrix(mb, fa->field);
        r.ideal_classes = ideal_equivalent(ia, ib, fa->units);
        r.ideal_available = true;
        if (r.ideal_classes.verdict == IdealEquivalence::inequivalent &&
            r.integral.verdict == SearchVerdict::not_verified) {
          r.integral.verdict = SearchVerdict::no;
          r.integral.obstruction = "distinct ideal classes";
        }
      }
    }
  }

  if (fa && fb)
    r.time_change = time_change_equivalent_q(a, b, *fa, *fb);
  else {
    r.time_change.verdict = SearchVerdict::not_verified;
    r.time_change.note = "no field data";
  }

  // verdict-logic chain
  if (r.integral.verdict == SearchVerdict::yes &&
      r.rational.verdict != SearchVerdict::yes)
    throw numeric_error("compare: Z-conjugate but not Q-conjugate");
  if (r.rational.verdict == SearchVerdict::yes && !r.entropy_equal)
    throw numeric_error("compare: Q-conjugate but entropies differ");

  // first distinguishing invariant in the preferred order
  auto definitive = [](SearchVerdict v) { return v != SearchVerdict::not_verified; };
  if (!r.entropy_equal) {
    r.distinguishing_invariant = "entropy function";
  } else if (r.rational.verdict == SearchVerdict::no) {
    r.distinguishing_invariant = "rational conjugacy";
    if (r.commutant_rank_a != r.commutant_rank_b)
      r.distinguishing_invariant += " (commutant ranks " +
                                    std::to_string(r.commutant_rank_a) +
                                    " vs " +
                                    std::to_string(r.commutant_rank_b) + ")";
  } else if (r.cyclicity_a.verdict != CyclicityVerdict::not_verified &&
             r.cyclicity_b.verdict != CyclicityVerdict::not_verified &&
             r.cyclicity_a.verdict != r.cyclicity_b.verdict) {
    r.distinguishing_invariant = "cyclicity";
  } else if (r.fix_a != r.fix_b) {
    r.distinguishing_invariant = "fixed-point order";
  } else if (r.maximality_available &&
             r.maximal_a.verdict != MaximalityVerdict::not_verified &&
             r.maximal_b.verdict != MaximalityVerdict::not_verified &&
             r.maximal_a.verdict != r.maximal_b.verdict) {
    r.distinguishing_invariant = "maximality";
  } else if (r.ideal_available &&
             r.ideal_classes.verdict == IdealEquivalence::inequivalent) {
    r.distinguishing_invariant = "ideal class";
  } else if (r.integral.verdict == SearchVerdict::yes) {
    r.distinguishing_invariant = "none (conjugate over Z)";
  } else {
    r.distinguishing_invariant = "none found";
  }
  (void)definitive;

  // summary line
  std::string s;
  if (r.rational.verdict == SearchVerdict::yes)
    s += "weakly isomorphic: yes";
  else if (r.rational.verdict == SearchVerdict::no)
    s += "weakly isomorphic: no (" + r.rational.note + ")";
  else
    s += "weakly isomorphic: not verified";
  s += "; Z-conjugate: ";
  if (r.integral.verdict == SearchVerdict::yes)
    s += "yes";
  else if (r.integral.verdict == SearchVerdict::no)
    s += "no (" + r.integral.obstruction + ")";
  else
    s += "not verified";
  s += "; distinguishing invariant: " + r.distinguishing_invariant;
  r.summary = s;
  return r;
}

}  // namespace toralg
