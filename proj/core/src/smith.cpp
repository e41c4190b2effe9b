#include "sstower/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "sstower/errors.hpp"

namespace sstower {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(a_[i * cols_ + k], a_[j * cols_ + k]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap(a_[k * cols_ + i], a_[k * cols_ + j]);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j,
                                 const mpz_class& q) {
  for (std::size_t k = 0; k < cols_; ++k)
    a_[i * cols_ + k] += q * a_[j * cols_ + k];
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j,
                                 const mpz_class& q) {
  for (std::size_t k = 0; k < rows_; ++k)
    a_[k * cols_ + i] += q * a_[k * cols_ + j];
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k)
    a_[i * cols_ + k] = -a_[i * cols_ + k];
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw InputError("matrix product: inner dimensions disagree");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : invariant_factors)
    if (d != 0) ++r;
  return r;
}

namespace {

// Smallest |entry| over the submatrix with corner (t, t); row-major ties.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      mpz_class mag = abs(m(i, j));
      if (!found || mag < best) {
        found = true;
        best = std::move(mag);
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a, bool want_transforms) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t k = std::min(rows, cols);

  SmithDecomposition out;
  if (want_transforms) {
    out.u = IntMatrix::identity(rows);
    out.v = IntMatrix::identity(cols);
  }
  auto row_add = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    m.add_row_multiple(i, j, q);
    if (out.u) out.u->add_row_multiple(i, j, q);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    m.add_col_multiple(i, j, q);
    if (out.v) out.v->add_col_multiple(i, j, q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    m.swap_rows(i, j);
    if (out.u) out.u->swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    m.swap_cols(i, j);
    if (out.v) out.v->swap_cols(i, j);
  };

  std::size_t t = 0;
  for (; t < k; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(m, t, pi, pj)) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      // Kill the column below the pivot, then the row to its right.
      // Truncated quotients leave remainders strictly smaller than the
      // pivot, so re-pivoting on the minimum terminates.
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        mpz_class q = m(i, t) / m(t, t);  // mpz_class division truncates
        if (q != 0) row_add(i, t, -q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        mpz_class q = m(t, j) / m(t, t);
        if (q != 0) col_add(j, t, -q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t pi2, pj2;
        find_pivot(m, t, pi2, pj2);
        row_swap(t, pi2);
        col_swap(t, pj2);
        continue;
      }
      // Pivot now divides its row and column; force it to divide the
      // whole remaining submatrix before moving on.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (m(i, j) % m(t, t) != 0) {
            row_add(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      if (out.u) out.u->negate_row(t);
    }
  }

  out.invariant_factors.assign(k, 0);
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors[i] = m(i, i);
  return out;
}

ModuleInvariants cokernel_invariants(const IntMatrix& relations,
                                     const mpz_class& p) {
  if (p < 2) throw InputError("cokernel_invariants: p must be at least 2");
  SmithDecomposition d = smith_normal_form(relations);
  ModuleInvariants inv;
  inv.zp_rank = relations.cols() - d.rank();
  for (const auto& f : d.invariant_factors) {
    if (f == 0) continue;
    mpz_class rest;
    unsigned long v = mpz_remove(rest.get_mpz_t(), f.get_mpz_t(), p.get_mpz_t());
    if (v > 0) inv.p_torsion_exponents.push_back(static_cast<unsigned>(v));
  }
  std::sort(inv.p_torsion_exponents.begin(), inv.p_torsion_exponents.end());
  return inv;
}

}  // namespace sstower
