#include "toralg/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace toralg {

std::optional<Rat> rational_reconstruct(double x, const Int& max_den,
                                        double tol) {
  if (!(x == x)) return std::nullopt;  // NaN
  bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction expansion of v
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double a_floor = std::floor(frac);
    if (a_floor > 1e18) return std::nullopt;
    Int a(static_cast<long>(a_floor));
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - a_floor;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rat r = make_rat(neg ? Int(-p1) : p1, q1);
  if (std::abs(to_double(r) - x) > tol) return std::nullopt;
  return r;
}

Int det(const IntMatrix& m) {
  if (!m.square()) throw shape_error("det: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

Rat det(const RatMatrix& m) {
  if (!m.square()) throw shape_error("det: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  RatMatrix a = m;
  Rat d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      a.swap_rows(k, piv);
      d = -d;
    }
    d *= a(k, k);
    Rat inv_piv = Rat(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) * inv_piv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

// Faddeev-LeVerrier; all divisions are exact over Z.
IntPoly charpoly(const IntMatrix& m) {
  if (!m.square()) throw shape_error("charpoly: non-square matrix");
  std::size_t n = m.rows();
  std::vector<Int> coeff(n + 1);
  coeff[n] = 1;
  IntMatrix nk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix mk = m * nk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    Int ck = -exact_div(tr, Int(static_cast<long>(k)));
    coeff[n - k] = ck;
    if (k < n) {
      nk = mk;
      for (std::size_t i = 0; i < n; ++i) nk(i, i) += ck;
    }
  }
  return IntPoly(std::move(coeff));
}

HnfResult hnf_with_transform(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows >= r
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 &&
            (best == rows || abs(h(i, c)) < abs(h(best, c))))
          best = i;
      if (best == rows) break;
      if (best != r) {
        h.swap_rows(r, best);
        u.swap_rows(r, best);
      }
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = round_div(h(i, c), h(r, c));
        if (q != 0) {
          for (std::size_t j = 0; j < cols; ++j) h(i, j) -= q * h(r, j);
          for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
        }
        if (h(i, c) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) h(i, j) -= q * h(r, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
      }
    }
    ++r;
  }
  return {h, u, r};
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).h; }

SnfResult snf(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t t = std::min(rows, cols);

  auto find_pivot = [&](std::size_t k) -> bool {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a(i, j) != 0 &&
            (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) return false;
    if (bi != k) {
      a.swap_rows(k, bi);
      u.swap_rows(k, bi);
    }
    if (bj != k) {
      a.swap_cols(k, bj);
      v.swap_cols(k, bj);
    }
    return true;
  };

  // Diagonalize with the pivot dividing the whole trailing block before
  // moving on; the chain condition then holds by construction.
  for (std::size_t k = 0; k < t; ++k) {
    if (!find_pivot(k)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a(i, k) == 0) continue;
        Int q = round_div(a(i, k), a(k, k));
        for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(k, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(k, j);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a(k, j) == 0) continue;
        Int q = round_div(a(k, j), a(k, k));
        for (std::size_t i = 0; i < rows; ++i) a(i, j) -= q * a(i, k);
        for (std::size_t i = 0; i < cols; ++i) v(i, j) -= q * v(i, k);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) {
        find_pivot(k);
        continue;
      }
      std::size_t bad_i = rows;
      for (std::size_t i = k + 1; i < rows && bad_i == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bad_i = i;
            break;
          }
      if (bad_i == rows) break;
      // pull the offending row up; the next pass shrinks the pivot
      for (std::size_t j = 0; j < cols; ++j) a(k, j) += a(bad_i, j);
      for (std::size_t j = 0; j < rows; ++j) u(k, j) += u(bad_i, j);
    }
  }

  for (std::size_t k = 0; k < t; ++k) {
    if (a(k, k) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(k, j) = -a(k, j);
      for (std::size_t j = 0; j < rows; ++j) u(k, j) = -u(k, j);
    }
  }

  SnfResult r;
  r.d.resize(t);
  for (std::size_t k = 0; k < t; ++k) r.d[k] = a(k, k);
  r.u = u;
  r.v = v;
  // paranoia: the decomposition is cheap to verify, so verify it
  IntMatrix check = u * m * v;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int want = (i == j && i < t) ? r.d[i] : Int(0);
      if (check(i, j) != want) throw numeric_error("snf: verification failed");
    }
  return r;
}

LinearSolution solve_rational(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw shape_error("solve_rational: row counts differ");
  std::size_t m = a.rows(), n = a.cols(), k = b.cols();
  RatMatrix w(m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) w(i, n + j) = b(i, j);
  }
  // row-reduce [a | b]
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && w(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != r) w.swap_rows(r, piv);
    Rat inv_piv = Rat(1) / w(r, c);
    for (std::size_t j = c; j < n + k; ++j) w(r, j) *= inv_piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (std::size_t j = c; j < n + k; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution out;
  // consistency: a zero row of the coefficient part must have zero rhs
  bool consistent = true;
  for (std::size_t i = r; i < m && consistent; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (w(i, n + j) != 0) {
        consistent = false;
        break;
      }
  if (consistent) {
    RatMatrix x(n, k);
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
      for (std::size_t j = 0; j < k; ++j) x(pivot_col[p], j) = w(p, n + j);
    out.particular = x;
  }
  // kernel basis: one vector per free column
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix kernel(free_cols.size(), n);
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    kernel(fi, fc) = Rat(1);
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
      kernel(fi, pivot_col[p]) = -w(p, fc);
  }
  out.kernel = kernel;
  return out;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix b(m.rows(), 0);
  return m.cols() - solve_rational(m, b).kernel.rows();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw shape_error("inverse: non-square matrix");
  auto sol = solve_rational(m, to_rational(IntMatrix::identity(m.rows())));
  if (!sol.particular || sol.kernel.rows() != 0)
    throw domain_error("inverse: singular matrix");
  return *sol.particular;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    throw domain_error("inverse_unimodular: determinant is not +-1");
  return to_integer(inverse(to_rational(m)));
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfResult h = hnf_with_transform(m);
  std::size_t zero_rows = m.rows() - h.rank;
  IntMatrix k(zero_rows, m.rows());
  for (std::size_t i = 0; i < zero_rows; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i, j) = h.u(h.rank + i, j);
  return hnf(k);
}

IntMatrix saturate_rows(const IntMatrix& m) {
  IntMatrix k = left_kernel(m.transpose());   // orthogonal complement
  IntMatrix s = left_kernel(k.transpose());   // complement back: saturation
  return s;  // already in HNF
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
  if (basis.cols() != v.size())
    throw shape_error("lattice_contains: dimension mismatch");
  IntMatrix stacked(basis.rows() + 1, basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    stacked.set_row(i, basis.row(i));
  stacked.set_row(basis.rows(), v);
  return same_row_lattice(stacked, basis);
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix ha = hnf(a), hb = hnf(b);
  // compare nonzero parts
  auto nonzero = [](const IntMatrix& h) {
    std::size_t r = h.rows();
    while (r > 0) {
      bool zero = true;
      for (std::size_t j = 0; j < h.cols(); ++j)
        if (h(r - 1, j) != 0) zero = false;
      if (!zero) break;
      --r;
    }
    IntMatrix out(r, h.cols());
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, h.row(i));
    return out;
  };
  return nonzero(ha) == nonzero(hb);
}

Int lattice_index_in_zn(const IntMatrix& basis) {
  if (basis.rows() < basis.cols())
    throw domain_error("lattice_index_in_zn: rank-deficient lattice");
  IntMatrix h = hnf(basis);
  Int idx = 1;
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    if (h(i, i) == 0)
      throw domain_error("lattice_index_in_zn: rank-deficient lattice");
    idx *= h(i, i);
  }
  return idx;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw shape_error("lattice_intersection: ambient dims differ");
  // x = u*a = w*b  <=>  (u, w) in left kernel of [a; -b]
  IntMatrix stacked(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) stacked.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto r = b.row(i);
    for (auto& x : r) x = -x;
    stacked.set_row(a.rows() + i, r);
  }
  IntMatrix ker = left_kernel(stacked);
  IntMatrix u_part(ker.rows(), a.rows());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) u_part(i, j) = ker(i, j);
  return hnf(u_part * a);
}

IntMatrix clear_denominators(const RatMatrix& m) {
  Int l = 1;
  for (const auto& x : m.entries()) l = lcm(l, x.get_den());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m(i, j) * Rat(l);
      out(i, j) = scaled.get_num();
    }
  return out;
}

IntMatrix primitive_integer_matrix(const RatMatrix& m, Rat* scale) {
  Int l = 1;
  for (const auto& x : m.entries()) l = lcm(l, x.get_den());
  IntMatrix cleared(m.rows(), m.cols());
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m(i, j) * Rat(l);
      cleared(i, j) = scaled.get_num();
      g = gcd(g, cleared(i, j));
    }
  if (g == 0) g = 1;
  for (auto& x : cleared.entries()) x = exact_div(x, g);
  if (scale) *scale = make_rat(l, g);
  return cleared;
}

}  // namespace toralg
