#ifndef TORALG_NUMERIC_HPP
#define TORALG_NUMERIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace toralg {

using Int = mpz_class;
using Rat = mpq_class;

struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mpq_class does not canonicalize a num/den pair on construction.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// quotient rounded to nearest (ties toward even floor side); used by HNF
// reduction and gcd steps where any consistent rounding works
inline Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw domain_error("exact_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw domain_error("exact_div: not divisible");
  return q;
}

inline Rat floor_rat(const Rat& q) {
  return Rat(floor_div(q.get_num(), q.get_den()));
}

inline Int round_rat(const Rat& q) {
  return round_div(q.get_num(), q.get_den());
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::optional<int64_t> to_int64(const Int& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<int64_t>(z.get_si());
}

// Continued-fraction reconstruction of a nearby rational with bounded
// denominator. Returns nullopt if no denominator <= max_den approximates x
// to within tol.
std::optional<Rat> rational_reconstruct(double x, const Int& max_den,
                                        double tol = 1e-6);

}  // namespace toralg

#endif
