#include "ehrkit/matrix.hpp"

namespace ehrkit {

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sgn_acc = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sgn_acc = -sgn_acc;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sgn_acc > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      det = -det;
    }
    det *= a.at(k, k);
    Rat inv = 1 / a.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = 1 / a.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

}  // namespace ehrkit
