#include "chebimg/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chebimg {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

long long dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Complex dot(const IntVector& a, const ComplexVector& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * x[i];
  return s;
}

Rational dot(const IntVector& a, const RationalVector& x) {
  if (a.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

namespace {

// Gauss-Jordan on an augmented copy; returns the rank and the reduced matrix.
std::size_t row_reduce(RationalMatrix& a, Rational* det_out) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c) == Rational(0)) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
      det = -det;
    }
    const Rational p = a(rank, c);
    det *= p;
    for (std::size_t k = 0; k < cols; ++k) a(rank, k) /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == Rational(0)) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  if (det_out) *det_out = det;
  return rank;
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug, nullptr) < n) throw std::domain_error("inverse: singular matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != Rational(1)) throw std::domain_error("inverse: singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  RationalMatrix a = m;
  Rational det;
  if (row_reduce(a, &det) < m.rows()) return 0;
  return det;
}

std::size_t matrix_rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a, nullptr);
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(long long s, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace chebimg
