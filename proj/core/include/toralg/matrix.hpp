#ifndef TORALG_MATRIX_HPP
#define TORALG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "toralg/numeric.hpp"

namespace toralg {

// Dense row-major matrix over an exact scalar (Int or Rat). Throughout the
// project matrices act on integer row vectors from the right: x -> x*M.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw shape_error("Mat: ragged initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  std::vector<T>& entries() { return e_; }
  const std::vector<T>& entries() const { return e_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    if (r.size() != cols_) throw shape_error("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k)
      std::swap((*this)(k, i), (*this)(k, j));
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "+");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "-");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
  }
  friend Mat operator-(const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = -a.e_[i];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw shape_error("Mat*: inner dims differ");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
    return c;
  }

  friend std::vector<T> operator*(const std::vector<T>& x, const Mat& a) {
    if (x.size() != a.rows_) throw shape_error("vec*Mat: dims differ");
    std::vector<T> y(a.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < a.cols_; ++j) y[j] += x[i] * a(i, j);
    }
    return y;
  }

  // strict lexicographic order on (rows, cols, entries); used for
  // deterministic sorting of search results
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
  }

 private:
  static void check_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw shape_error(std::string("Mat") + op + ": shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> e_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

RatMatrix to_rational(const IntMatrix& m);
bool is_integral(const RatMatrix& m);
IntMatrix to_integer(const RatMatrix& m);  // throws if non-integral

IntMatrix pow(const IntMatrix& m, unsigned long k);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace toralg

#endif
