#include "toralg/matrix.hpp"

namespace toralg {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.entries())
    if (!is_integer(x)) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      if (!is_integer(x)) throw domain_error("to_integer: non-integral entry");
      r(i, j) = x.get_num();
    }
  return r;
}

IntMatrix pow(const IntMatrix& m, unsigned long k) {
  if (!m.square()) throw shape_error("pow: non-square matrix");
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

namespace {
template <class T>
std::ostream& print(std::ostream& os, const Mat<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << m(i, j) << (j + 1 < m.cols() ? ", " : "");
    os << "]" << (i + 1 < m.rows() ? ",\n" : "");
  }
  return os << "]";
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return print(os, m);
}
std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  return print(os, m);
}

}  // namespace toralg
