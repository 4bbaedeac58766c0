#ifndef TORALG_NUMBER_FIELD_HPP
#define TORALG_NUMBER_FIELD_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toralg/matrix.hpp"
#include "toralg/polynomial.hpp"

namespace toralg {

// K = Q[x]/(f) for a monic irreducible integer polynomial f. Field objects
// are immutable and must outlive the elements and lattices that point at
// them; numeric embeddings are computed once at construction, sorted by
// (real part, imaginary part).
class NumberField {
 public:
  explicit NumberField(IntPoly min_poly);

  const IntPoly& poly() const { return f_; }
  int degree() const { return n_; }
  int real_embeddings() const { return r1_; }
  int complex_pairs() const { return r2_; }
  // Dirichlet unit rank r1 + r2 - 1.
  int unit_rank() const { return r1_ + r2_ - 1; }
  const std::vector<std::complex<double>>& roots() const { return roots_; }

  // Indices into roots() for the archimedean places: all real embeddings,
  // then one of each complex-conjugate pair.
  struct Place {
    int root_index;
    bool complex_pair;
  };
  const std::vector<Place>& places() const { return places_; }

 private:
  IntPoly f_;
  int n_, r1_, r2_;
  std::vector<std::complex<double>> roots_;
  std::vector<Place> places_;
};

// Element of K in the power basis 1, lambda, ..., lambda^(n-1).
class NFElement {
 public:
  NFElement() : field_(nullptr) {}
  NFElement(const NumberField& field, std::vector<Rat> coords);
  static NFElement zero(const NumberField& field);
  static NFElement one(const NumberField& field);
  static NFElement generator(const NumberField& field);  // lambda
  // From ascending polynomial coefficients (any length; reduced mod f).
  static NFElement from_poly(const NumberField& field, const RatPoly& p);

  const NumberField& field() const { return *field_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;           // integer power-basis coordinates
  bool is_algebraic_integer() const;  // monic integer minimal polynomial

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const Rat& s, const NFElement& a);
  friend bool operator==(const NFElement& a, const NFElement& b);
  friend bool operator!=(const NFElement& a, const NFElement& b) {
    return !(a == b);
  }

  NFElement inverse() const;  // domain error on zero
  NFElement pow(long e) const;

  Rat norm() const;
  Rat trace() const;
  bool is_unit() const;  // integral with norm +-1

  // Regular-representation matrix over the power basis: row i holds the
  // coordinates of x * lambda^i.
  RatMatrix regular_matrix() const;
  // Minimal polynomial over Q, monic.
  RatPoly min_poly() const;

  std::complex<double> embed(int root_index) const;
  // log|phi(x)| per place, complex places doubled. Dirichlet log map.
  std::vector<double> log_embedding() const;

 private:
  void reduce();
  const NumberField* field_;
  std::vector<Rat> c_;
};

// n elements of K forming a Z-basis of a full-rank lattice in K; stored as
// the rational row matrix of power-basis coordinates.
class LatticeBasis {
 public:
  LatticeBasis(const NumberField& field, RatMatrix coord_rows);
  static LatticeBasis power_basis(const NumberField& field);

  const NumberField& field() const { return *field_; }
  const RatMatrix& coord_matrix() const { return w_; }
  int rank() const { return static_cast<int>(w_.rows()); }
  NFElement element(int i) const;
  std::vector<NFElement> elements() const;

  // Coordinates of x in this basis, if x lies in the spanned Q-space.
  std::vector<Rat> rational_coords(const NFElement& x) const;
  bool contains(const NFElement& x) const;  // integer coordinates
  bool is_ring() const;  // contains 1 and closed under multiplication
  // |det| of the coordinate matrix: covolume relative to the power basis.
  Rat covolume() const;
  // index [this : sub] for sub contained in this
  Rat index_of_sublattice(const LatticeBasis& sub) const;
  // canonical HNF-reduced form of the same lattice
  LatticeBasis canonical() const;
  bool same_lattice(const LatticeBasis& other) const;
  // lattice scaled by an element: x * L
  LatticeBasis scaled(const NFElement& x) const;
  // Gram matrix of the trace form Tr(x*y) on given coordinates (exact;
  // positive definite for totally real fields).
  static RatMatrix trace_form_gram(const NumberField& field);

 private:
  const NumberField* field_;
  RatMatrix w_;
};

// Matrix of multiplication by x on the lattice basis (row i = coordinates
// of x * b_i). Throws naming the offending basis element if the lattice is
// not closed under multiplication by x.
IntMatrix mult_matrix(const NFElement& x, const LatticeBasis& basis);

// true iff the order contains both x and its inverse; the order must be a
// ring (checked).
bool is_unit_in_order(const NFElement& x, const LatticeBasis& order);

// Multiplicative independence of units via the rank of the log-embedding
// matrix (tolerance 1e-8), with an exact confirmation of any suspected
// dependence relation (exponents up to 20).
struct IndependenceResult {
  bool independent;
  std::string note;
  std::vector<long> relation;  // exact relation when dependent
};
IndependenceResult units_independent(const std::vector<NFElement>& units);

}  // namespace toralg

#endif
