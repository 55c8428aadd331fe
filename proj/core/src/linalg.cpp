#include "ehrkit/linalg.hpp"

#include <algorithm>

namespace ehrkit {

namespace {

void swap_rows(IntMatrix& m, IntMatrix& u, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(a, k), m.at(b, k));
  for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(a, k), u.at(b, k));
}

void swap_cols(IntMatrix& m, IntMatrix& v, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, a), m.at(k, b));
  for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, a), v.at(k, b));
}

void negate_row(IntMatrix& m, IntMatrix& u, std::size_t i) {
  for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
}

// row_j -= q * row_i on m and its row cofactor.
void submul_row(IntMatrix& m, IntMatrix& u, std::size_t j, std::size_t i,
                const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k) m.at(j, k) -= q * m.at(i, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u.at(j, k) -= q * u.at(i, k);
}

// col_j -= q * col_i on m and its column cofactor.
void submul_col(IntMatrix& m, IntMatrix& v, std::size_t j, std::size_t i,
                const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, j) -= q * m.at(k, i);
  for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, j) -= q * v.at(k, i);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient rounding the remainder into (-|b|/2, |b|/2]. Keeps entries small
// during the Euclidean sweeps.
Int nearest_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += sgn(b) > 0 ? 1 : -1;
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    // Euclidean reduction: repeatedly divide the column below pr by the
    // minimal nonzero entry until only the pivot survives
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      if (best == rows) break;  // column already clear
      swap_rows(h, u, pr, best);
      bool clear = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        submul_row(h, u, i, pr, floor_div(h.at(i, c), h.at(pr, c)));
        if (h.at(i, c) != 0) clear = false;
      }
      if (clear) break;  // pivot shrank strictly otherwise; repeat
    }
    if (h.at(pr, c) == 0) continue;
    if (h.at(pr, c) < 0) negate_row(h, u, pr);
    for (std::size_t i = 0; i < pr; ++i)
      submul_row(h, u, i, pr, floor_div(h.at(i, c), h.at(pr, c)));
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

SnfResult smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // move the minimal nonzero entry of the trailing block to (k, k)
      std::size_t pi = d.rows(), pj = d.cols();
      for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi == d.rows() || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == d.rows()) goto done;  // trailing block is zero
      swap_rows(d, u, k, pi);
      swap_cols(d, v, k, pj);

      bool clear = true;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        submul_row(d, u, i, k, nearest_div(d.at(i, k), d.at(k, k)));
        if (d.at(i, k) != 0) clear = false;
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        submul_col(d, v, j, k, nearest_div(d.at(k, j), d.at(k, k)));
        if (d.at(k, j) != 0) clear = false;
      }
      if (!clear) continue;  // remainders are smaller than the pivot

      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = k + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = k + 1; j < d.cols() && !fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            for (std::size_t c = 0; c < d.cols(); ++c) d.at(k, c) += d.at(i, c);
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(k, c) += u.at(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d.at(k, k) < 0) negate_row(d, u, k);
  }
done:
  return {std::move(d), std::move(u), std::move(v)};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // Rows of u aligned with zero rows of hnf(m^T) satisfy row * m^T = 0,
  // i.e. m * row^T = 0. Unimodularity of u makes the kernel basis saturated.
  HnfResult hr = hermite_normal_form(m.transpose());
  std::vector<Int> entries;
  std::size_t count = 0;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    for (std::size_t j = 0; j < hr.u.cols(); ++j) entries.push_back(hr.u.at(i, j));
    ++count;
  }
  return IntMatrix(count, hr.u.cols(), std::move(entries));
}

IntMatrix saturation_basis(const IntMatrix& m) {
  // span_Q(rows) ∩ Z^n is the integer kernel of the kernel of m; the HNF
  // pass canonicalizes the basis so output is deterministic.
  IntMatrix basis = kernel_basis(kernel_basis(m));
  HnfResult hr = hermite_normal_form(basis);
  std::vector<Int> entries;
  std::size_t count = 0;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h.at(i, j) != 0) zero = false;
    if (zero) continue;
    for (std::size_t j = 0; j < hr.h.cols(); ++j) entries.push_back(hr.h.at(i, j));
    ++count;
  }
  return IntMatrix(count, hr.h.cols(), std::move(entries));
}

std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw Error("solve_rational: rhs length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix w(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(w.at(r, j), w.at(p, j));
    Rat inv = 1 / w.at(r, c);
    for (std::size_t j = c; j <= cols; ++j) w.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Rat f = w.at(i, c);
      for (std::size_t j = c; j <= cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (w.at(i, cols) != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w.at(i, cols);
  return x;
}

}  // namespace ehrkit
