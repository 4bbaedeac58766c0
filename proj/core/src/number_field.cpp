#include "toralg/number_field.hpp"

#include <algorithm>
#include <cmath>

#include "toralg/exact_linalg.hpp"
#include "toralg/spectra.hpp"

namespace toralg {

NumberField::NumberField(IntPoly min_poly) : f_(std::move(min_poly)) {
  if (f_.degree() < 1)
    throw domain_error("NumberField: polynomial must have degree >= 1");
  if (!f_.monic()) throw domain_error("NumberField: polynomial must be monic");
  auto irr = is_irreducible_q(f_);
  if (!irr.irreducible)
    throw domain_error("NumberField: polynomial is reducible over Q");
  n_ = f_.degree();
  r1_ = count_real_roots(f_);
  r2_ = (n_ - r1_) / 2;
  roots_ = toralg::roots(f_).eigenvalues;
  // sanity between exact signature and numeric roots
  int numeric_real = 0;
  for (const auto& z : roots_)
    if (std::abs(z.imag()) < 1e-9) ++numeric_real;
  if (numeric_real != r1_)
    throw numeric_error("NumberField: numeric roots disagree with Sturm");
  for (int i = 0; i < n_; ++i) {
    if (std::abs(roots_[static_cast<std::size_t>(i)].imag()) < 1e-9)
      places_.push_back({i, false});
    else if (roots_[static_cast<std::size_t>(i)].imag() > 0)
      places_.push_back({i, true});
  }
}

NFElement::NFElement(const NumberField& field, std::vector<Rat> coords)
    : field_(&field), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != field.degree())
    throw shape_error("NFElement: coordinate length != degree");
}

NFElement NFElement::zero(const NumberField& field) {
  return NFElement(field,
                   std::vector<Rat>(static_cast<std::size_t>(field.degree())));
}

NFElement NFElement::one(const NumberField& field) {
  auto c = std::vector<Rat>(static_cast<std::size_t>(field.degree()));
  c[0] = Rat(1);
  return NFElement(field, std::move(c));
}

NFElement NFElement::generator(const NumberField& field) {
  if (field.degree() == 1) {
    // lambda is the rational root -f(0)
    auto c = std::vector<Rat>(1);
    c[0] = Rat(-field.poly().c[0]);
    return NFElement(field, std::move(c));
  }
  auto c = std::vector<Rat>(static_cast<std::size_t>(field.degree()));
  c[1] = Rat(1);
  return NFElement(field, std::move(c));
}

NFElement NFElement::from_poly(const NumberField& field, const RatPoly& p) {
  RatPoly r = poly_mod(p, RatPoly(field.poly()));
  std::vector<Rat> c(static_cast<std::size_t>(field.degree()));
  for (std::size_t i = 0; i < r.c.size(); ++i) c[i] = r.c[i];
  return NFElement(field, std::move(c));
}

bool NFElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool NFElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool NFElement::is_integral() const {
  for (const auto& x : c_)
    if (!is_integer(x)) return false;
  return true;
}

namespace {
void check_same_field(const NFElement& a, const NFElement& b) {
  if (&a.field() != &b.field() && !(a.field().poly() == b.field().poly()))
    throw domain_error("NFElement: elements of different fields");
}
}  // namespace

NFElement operator+(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return NFElement(a.field(), std::move(c));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
  return NFElement(a.field(), std::move(c));
}

NFElement operator-(const NFElement& a) {
  std::vector<Rat> c(a.coords());
  for (auto& x : c) x = -x;
  return NFElement(a.field(), std::move(c));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  RatPoly pa{std::vector<Rat>(a.coords())};
  RatPoly pb{std::vector<Rat>(b.coords())};
  return NFElement::from_poly(a.field(), mul(pa, pb));
}

NFElement operator*(const Rat& s, const NFElement& a) {
  std::vector<Rat> c(a.coords());
  for (auto& x : c) x *= s;
  return NFElement(a.field(), std::move(c));
}

bool operator==(const NFElement& a, const NFElement& b) {
  return a.coords() == b.coords() && a.field().poly() == b.field().poly();
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw domain_error("NFElement: inverse of zero");
  RatPoly self{std::vector<Rat>(c_)};
  auto x = poly_xgcd(self, RatPoly(field_->poly()));
  if (x.g.degree() != 0)
    throw domain_error("NFElement: gcd with min poly is nontrivial");
  return NFElement::from_poly(*field_, x.a);
}

NFElement NFElement::pow(long e) const {
  NFElement base = e >= 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
  NFElement acc = NFElement::one(*field_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

RatMatrix NFElement::regular_matrix() const {
  int n = field_->degree();
  RatMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  NFElement cur = *this;
  NFElement lambda = NFElement::generator(*field_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          cur.coords()[static_cast<std::size_t>(j)];
    if (i + 1 < n) cur = cur * lambda;
  }
  return m;
}

Rat NFElement::norm() const { return det(regular_matrix()); }

Rat NFElement::trace() const {
  RatMatrix m = regular_matrix();
  Rat t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool NFElement::is_algebraic_integer() const {
  if (is_zero()) return true;
  for (const auto& c : min_poly().c)
    if (!is_integer(c)) return false;
  return true;
}

bool NFElement::is_unit() const {
  if (is_zero() || !is_algebraic_integer()) return false;
  Rat n = norm();
  return n == 1 || n == -1;
}

RatPoly NFElement::min_poly() const {
  // smallest k with 1, x, ..., x^k linearly dependent
  int n = field_->degree();
  std::vector<NFElement> powers;
  powers.push_back(NFElement::one(*field_));
  for (int k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * (*this));
    RatMatrix sys(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    RatMatrix rhs(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j)
        sys(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            powers[static_cast<std::size_t>(j)]
                .coords()[static_cast<std::size_t>(i)];
      rhs(static_cast<std::size_t>(i), 0) =
          -powers[static_cast<std::size_t>(k)]
               .coords()[static_cast<std::size_t>(i)];
    }
    auto sol = solve_rational(sys, rhs);
    if (sol.particular && sol.kernel.rows() == 0) {
      std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j < k; ++j)
        c[static_cast<std::size_t>(j)] =
            (*sol.particular)(static_cast<std::size_t>(j), 0);
      c[static_cast<std::size_t>(k)] = Rat(1);
      return RatPoly(std::move(c));
    }
  }
  throw numeric_error("min_poly: no relation found (unreachable)");
}

std::complex<double> NFElement::embed(int root_index) const {
  std::complex<double> lam =
      field_->roots()[static_cast<std::size_t>(root_index)];
  std::complex<double> r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lam + to_double(c_[i]);
  return r;
}

std::vector<double> NFElement::log_embedding() const {
  std::vector<double> v;
  for (const auto& place : field_->places()) {
    double a = std::abs(embed(place.root_index));
    if (a == 0) throw domain_error("log_embedding: zero element");
    double l = std::log(a);
    v.push_back(place.complex_pair ? 2 * l : l);
  }
  return v;
}

// ---- LatticeBasis ---------------------------------------------------------

LatticeBasis::LatticeBasis(const NumberField& field, RatMatrix coord_rows)
    : field_(&field), w_(std::move(coord_rows)) {
  if (w_.rows() != w_.cols() || static_cast<int>(w_.rows()) != field.degree())
    throw shape_error("LatticeBasis: need n x n coordinate matrix");
  if (det(w_) == 0)
    throw domain_error("LatticeBasis: basis rows are dependent");
}

LatticeBasis LatticeBasis::power_basis(const NumberField& field) {
  return LatticeBasis(field, to_rational(IntMatrix::identity(
                                 static_cast<std::size_t>(field.degree()))));
}

NFElement LatticeBasis::element(int i) const {
  return NFElement(*field_, w_.row(static_cast<std::size_t>(i)));
}

std::vector<NFElement> LatticeBasis::elements() const {
  std::vector<NFElement> v;
  for (int i = 0; i < rank(); ++i) v.push_back(element(i));
  return v;
}

std::vector<Rat> LatticeBasis::rational_coords(const NFElement& x) const {
  // solve c * W = x  =>  W^T c^T = x^T
  RatMatrix rhs(w_.cols(), 1);
  for (std::size_t i = 0; i < w_.cols(); ++i) rhs(i, 0) = x.coords()[i];
  auto sol = solve_rational(w_.transpose(), rhs);
  if (!sol.particular)
    throw domain_error("rational_coords: element outside the Q-span");
  std::vector<Rat> c(w_.rows());
  for (std::size_t i = 0; i < w_.rows(); ++i) c[i] = (*sol.particular)(i, 0);
  return c;
}

bool LatticeBasis::contains(const NFElement& x) const {
  for (const auto& c : rational_coords(x))
    if (!is_integer(c)) return false;
  return true;
}

bool LatticeBasis::is_ring() const {
  if (!contains(NFElement::one(*field_))) return false;
  auto els = elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j)
      if (!contains(els[i] * els[j])) return false;
  return true;
}

Rat LatticeBasis::covolume() const { return abs(det(w_)); }

Rat LatticeBasis::index_of_sublattice(const LatticeBasis& sub) const {
  for (const auto& e : sub.elements())
    if (!contains(e))
      throw domain_error("index_of_sublattice: not a sublattice");
  return sub.covolume() / covolume();
}

LatticeBasis LatticeBasis::canonical() const {
  // scale to integers, HNF, scale back
  Int den = 1;
  for (const auto& x : w_.entries()) den = lcm(den, x.get_den());
  IntMatrix zi(w_.rows(), w_.cols());
  for (std::size_t i = 0; i < w_.rows(); ++i)
    for (std::size_t j = 0; j < w_.cols(); ++j)
      zi(i, j) = Rat(w_(i, j) * Rat(den)).get_num();
  IntMatrix h = hnf(zi);
  RatMatrix back(w_.rows(), w_.cols());
  for (std::size_t i = 0; i < w_.rows(); ++i)
    for (std::size_t j = 0; j < w_.cols(); ++j)
      back(i, j) = make_rat(h(i, j), den);
  return LatticeBasis(*field_, back);
}

bool LatticeBasis::same_lattice(const LatticeBasis& other) const {
  if (!(field_->poly() == other.field_->poly())) return false;
  return canonical().coord_matrix() == other.canonical().coord_matrix();
}

LatticeBasis LatticeBasis::scaled(const NFElement& x) const {
  RatMatrix nw(w_.rows(), w_.cols());
  for (int i = 0; i < rank(); ++i) {
    NFElement e = x * element(i);
    for (std::size_t j = 0; j < w_.cols(); ++j)
      nw(static_cast<std::size_t>(i), j) = e.coords()[j];
  }
  return LatticeBasis(*field_, nw);
}

RatMatrix LatticeBasis::trace_form_gram(const NumberField& field) {
  int n = field.degree();
  const IntPoly& f = field.poly();
  // power sums of the roots from Newton's identities
  std::vector<Rat> p(static_cast<std::size_t>(2 * n - 1));
  std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
  e[0] = Rat(1);
  for (int k = 1; k <= n; ++k) {
    Rat a(f.c[static_cast<std::size_t>(n - k)]);
    e[static_cast<std::size_t>(k)] = (k % 2 == 0) ? a : -a;
  }
  p[0] = Rat(n);
  for (int k = 1; k < 2 * n - 1; ++k) {
    Rat s(0);
    for (int i = 1; i < k && i <= n; ++i) {
      Rat term =
          e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
      s += (i % 2 == 1) ? term : -term;
    }
    if (k <= n) {
      Rat term = Rat(k) * e[static_cast<std::size_t>(k)];
      s += (k % 2 == 1) ? term : -term;
    }
    p[static_cast<std::size_t>(k)] = s;
  }
  RatMatrix gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          p[static_cast<std::size_t>(i + j)];
  return gram;
}

IntMatrix mult_matrix(const NFElement& x, const LatticeBasis& basis) {
  int n = basis.rank();
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    NFElement prod = x * basis.element(i);
    auto coords = basis.rational_coords(prod);
    for (int j = 0; j < n; ++j) {
      if (!is_integer(coords[static_cast<std::size_t>(j)]))
        throw domain_error(
            "mult_matrix: lattice is not a module for the element "
            "(multiplying basis element " +
            std::to_string(i) + " leaves the lattice)");
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          coords[static_cast<std::size_t>(j)].get_num();
    }
  }
  return m;
}

bool is_unit_in_order(const NFElement& x, const LatticeBasis& order) {
  if (!order.is_ring())
    throw domain_error("is_unit_in_order: lattice is not a ring");
  if (x.is_zero()) return false;
  return order.contains(x) && order.contains(x.inverse());
}

IndependenceResult units_independent(const std::vector<NFElement>& units) {
  if (units.empty()) return {true, "no units", {}};
  const NumberField& K = units[0].field();
  std::size_t d = units.size();
  std::size_t places = K.places().size();
  std::vector<std::vector<double>> logm;
  for (const auto& u : units) {
    if (!u.is_unit()) return {false, "element is not a unit", {}};
    logm.push_back(u.log_embedding());
  }
  // numeric rank by Gaussian elimination with partial pivoting
  std::vector<std::vector<double>> work = logm;
  std::size_t rank_num = 0;
  const double tol = 1e-8;
  for (std::size_t col = 0; col < places && rank_num < d; ++col) {
    std::size_t best = rank_num;
    for (std::size_t i = rank_num; i < d; ++i)
      if (std::abs(work[i][col]) > std::abs(work[best][col])) best = i;
    if (std::abs(work[best][col]) < tol) continue;
    std::swap(work[rank_num], work[best]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == rank_num) continue;
      double f = work[i][col] / work[rank_num][col];
      for (std::size_t j = 0; j < places; ++j)
        work[i][j] -= f * work[rank_num][j];
    }
    ++rank_num;
  }
  if (rank_num == d)
    return {true, "log-embedding rank " + std::to_string(d), {}};
  // suspected dependence: search small exact relations and verify them in
  // exact field arithmetic
  if (d <= 3) {
    std::vector<long> e(d, -20);
    for (;;) {
      bool nonzero = false;
      for (long x : e)
        if (x != 0) nonzero = true;
      if (nonzero) {
        std::vector<double> comb(places, 0);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < places; ++j)
            comb[j] += static_cast<double>(e[i]) * logm[i][j];
        double norm = 0;
        for (double x : comb) norm += x * x;
        if (norm < 1e-12) {
          NFElement prod = NFElement::one(K);
          for (std::size_t i = 0; i < d; ++i) prod = prod * units[i].pow(e[i]);
          if (prod == NFElement::one(K) || prod == -NFElement::one(K))
            return {false, "exact multiplicative relation found", e};
        }
      }
      std::size_t pos = 0;
      while (pos < d) {
        if (++e[pos] <= 20) break;
        e[pos] = -20;
        ++pos;
      }
      if (pos == d) break;
    }
  }
  return {false,
          "log-embedding rank deficient; no small exact relation located",
          {}};
}

}  // namespace toralg
