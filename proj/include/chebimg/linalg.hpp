#pragma once

// Small exact linear algebra over the integers and rationals. Matrices are
// dense, square or rectangular, row-major; sizes here never exceed the rank
// of a root system.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace chebimg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<long long>;
using Complex = std::complex<double>;

using IntVector = std::vector<long long>;
using RationalVector = std::vector<Rational>;
using ComplexVector = std::vector<Complex>;

std::string to_string(const Rational& r);
std::string to_string(const IntVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (long long x : v) {
      h ^= std::hash<long long>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

long long dot(const IntVector& a, const IntVector& b);
Complex dot(const IntVector& a, const ComplexVector& x);
Rational dot(const IntVector& a, const RationalVector& x);

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& ark = a(r, k);
        if (ark == T(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += ark * b(k, c);
      }
    return p;
  }

  template <typename V>
  std::vector<V> apply(const std::vector<V>& x) const {
    std::vector<V> y(rows_, V(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += static_cast<V>((*this)(r, c)) * x[c];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.data_ < b.data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long long>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
std::size_t matrix_rank(const RationalMatrix& m);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(long long s, const IntVector& a);
bool is_zero(const IntVector& v);

// Floor division and modulus with a positive divisor.
inline long long floor_div(long long a, long long m) {
  long long q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}
inline long long floor_mod(long long a, long long m) { return a - floor_div(a, m) * m; }

}  // namespace chebimg
