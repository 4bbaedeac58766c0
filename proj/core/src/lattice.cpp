#include "toralg/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "toralg/exact_linalg.hpp"

namespace toralg {

namespace {

Rat inner(const RatMatrix& gram, const std::vector<Rat>& x,
          const std::vector<Rat>& y) {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat row(0);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += gram(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

struct GramSchmidt {
  // mu[i][j] for j < i; B[i] = |b_i*|^2
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;
};

GramSchmidt gram_schmidt(const RatMatrix& basis, const RatMatrix& gram) {
  std::size_t k = basis.rows();
  std::vector<std::vector<Rat>> star(k);
  GramSchmidt gs;
  gs.mu.assign(k, std::vector<Rat>(k, Rat(0)));
  gs.B.assign(k, Rat(0));
  for (std::size_t i = 0; i < k; ++i) {
    star[i] = basis.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      Rat m = inner(gram, basis.row(i), star[j]) / gs.B[j];
      gs.mu[i][j] = m;
      for (std::size_t t = 0; t < star[i].size(); ++t)
        star[i][t] -= m * star[j][t];
    }
    gs.B[i] = inner(gram, star[i], star[i]);
    if (gs.B[i] <= 0)
      throw domain_error("lattice_reduce: dependent rows or indefinite form");
  }
  return gs;
}

}  // namespace

Rat form_value(const RatMatrix& gram, const std::vector<Rat>& x) {
  return inner(gram, x, x);
}

RatMatrix lattice_reduce(const RatMatrix& basis, const RatMatrix& gram) {
  std::size_t k = basis.rows();
  if (k == 0) return basis;
  if (gram.rows() != basis.cols() || gram.cols() != basis.cols())
    throw shape_error("lattice_reduce: gram shape mismatch");
  RatMatrix b = basis;
  const Rat delta = make_rat(3, 4);

  auto gs = gram_schmidt(b, gram);
  std::size_t i = 1;
  while (i < k) {
    // size-reduce b_i against b_j, j < i
    for (std::size_t j = i; j-- > 0;) {
      Rat m = gs.mu[i][j];
      Int q = round_rat(m);
      if (q != 0) {
        for (std::size_t t = 0; t < b.cols(); ++t)
          b(i, t) -= Rat(q) * b(j, t);
        gs = gram_schmidt(b, gram);
      }
    }
    if (i >= 1 &&
        gs.B[i] < (delta - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * gs.B[i - 1]) {
      b.swap_rows(i, i - 1);
      gs = gram_schmidt(b, gram);
      i = i > 1 ? i - 1 : 1;
    } else {
      ++i;
    }
  }

  // exhaustive shortest-vector pass for small rank
  if (k <= 4) {
    gs = gram_schmidt(b, gram);
    Rat best = inner(gram, b.row(0), b.row(0));
    auto shorts = enumerate_short_vectors(b, gram, best);
    std::vector<Rat> best_vec = b.row(0);
    for (const auto& v : shorts) {
      Rat q = form_value(gram, v);
      if (q > 0 && q < best) {
        best = q;
        best_vec = v;
      }
    }
    // put a shortest vector first if we found a shorter one
    if (best_vec != b.row(0)) {
      // coordinates of best_vec over the current basis (integral, and
      // primitive since a shortest vector cannot be a proper multiple)
      RatMatrix rhs(b.cols(), 1);
      for (std::size_t t = 0; t < b.cols(); ++t) rhs(t, 0) = best_vec[t];
      auto sol = solve_rational(b.transpose(), rhs);
      if (sol.particular && is_integral(*sol.particular)) {
        IntMatrix coord(k, 1);
        for (std::size_t t = 0; t < k; ++t)
          coord(t, 0) = (*sol.particular)(t, 0).get_num();
        // unimodular V whose first row is coord^T: from u*coord = e1 the
        // first column of u^-1 is coord, so take V = (u^-1)^T
        auto h = hnf_with_transform(coord);
        if (h.h(0, 0) == 1) {
          IntMatrix v = inverse_unimodular(h.u).transpose();
          b = to_rational(v) * b;
        }
      }
    }
  }
  return b;
}

std::vector<std::vector<Rat>> enumerate_short_vectors(const RatMatrix& basis,
                                                      const RatMatrix& gram,
                                                      const Rat& radius) {
  std::size_t k = basis.rows();
  std::vector<std::vector<Rat>> out;
  if (k == 0 || radius < 0) return out;
  auto gs = gram_schmidt(basis, gram);

  // Fincke-Pohst over coordinates x_k..x_1; float bounds padded, exact
  // final filter.
  double r = to_double(radius) * (1 + 1e-9) + 1e-12;
  std::vector<double> bd(k);
  std::vector<std::vector<double>> mu(k, std::vector<double>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    bd[i] = to_double(gs.B[i]);
    for (std::size_t j = 0; j < i; ++j) mu[i][j] = to_double(gs.mu[i][j]);
  }
  std::vector<long> x(k, 0);
  std::vector<std::vector<Rat>> found;
  // recursive descent from the last coordinate
  struct Walker {
    std::size_t k;
    double r;
    const std::vector<double>& bd;
    const std::vector<std::vector<double>>& mu;
    std::vector<long>& x;
    std::vector<std::vector<Rat>>& found;
    const RatMatrix& basis;
    const RatMatrix& gram;
    const Rat& radius;

    void descend(std::size_t level, double used) {
      // center for this level given choices above
      double c = 0;
      for (std::size_t j = level + 1; j < k; ++j)
        c -= mu[j][level] * static_cast<double>(x[j]);
      double budget = (r - used) / bd[level] + 1e-9;
      if (budget < 0) return;
      double half = std::sqrt(budget) + 1e-9;
      long lo = static_cast<long>(std::ceil(c - half - 1e-9));
      long hi = static_cast<long>(std::floor(c + half + 1e-9));
      for (long v = lo; v <= hi; ++v) {
        x[level] = v;
        double dv = static_cast<double>(v) - c;
        double used2 = used + dv * dv * bd[level];
        if (used2 > r * (1 + 1e-6) + 1e-9) continue;
        if (level == 0) {
          bool all_zero = true;
          for (std::size_t j = 0; j < k; ++j)
            if (x[j] != 0) all_zero = false;
          if (all_zero) continue;
          // sign normalization: first nonzero coefficient positive
          long lead = 0;
          for (std::size_t j = 0; j < k; ++j)
            if (x[j] != 0) {
              lead = x[j];
              break;
            }
          if (lead < 0) continue;
          std::vector<Rat> vec(basis.cols(), Rat(0));
          for (std::size_t j = 0; j < k; ++j) {
            if (x[j] == 0) continue;
            for (std::size_t t = 0; t < basis.cols(); ++t)
              vec[t] += Rat(Int(x[j])) * basis(j, t);
          }
          if (form_value(gram, vec) <= radius) found.push_back(vec);
        } else {
          descend(level - 1, used2);
        }
      }
      x[level] = 0;
    }
  } walker{k, r, bd, mu, x, found, basis, gram, radius};
  walker.descend(k - 1, 0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace toralg
