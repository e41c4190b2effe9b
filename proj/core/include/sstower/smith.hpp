#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace sstower {

// Dense matrix over arbitrary-precision integers. Row-major storage;
// dimensions may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += q * row j  /  col i += q * col j
  void add_row_multiple(std::size_t i, std::size_t j, const mpz_class& q);
  void add_col_multiple(std::size_t i, std::size_t j, const mpz_class& q);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination. Square input.
mpz_class determinant(const IntMatrix& a);

struct SmithDecomposition {
  // d_1 | d_2 | ... | d_k with k = min(rows, cols); nonnegative, with
  // trailing zeros carrying the free-rank contribution of the cokernel.
  std::vector<mpz_class> invariant_factors;
  // Present when requested: unimodular U (rows x rows) and V (cols x cols)
  // with U * A * V = diag(invariant_factors).
  std::optional<IntMatrix> u, v;

  std::size_t rank() const;
};

/*
 * Integer Smith normal form. Deterministic pivoting: the smallest
 * absolute nonzero entry of the working submatrix, ties broken by
 * row-major position. Dense and exact throughout; built for matrices up
 * to a few hundred on a side.
 */
SmithDecomposition smith_normal_form(const IntMatrix& a,
                                     bool want_transforms = false);

// Invariant data of a finitely generated Z_p-module, read off an integer
// Smith normal form.
struct ModuleInvariants {
  std::uint64_t zp_rank = 0;
  // p-adic valuations of the nonzero invariant factors, zeros omitted;
  // sorted ascending. Empty means the module is free of p-torsion.
  std::vector<unsigned> p_torsion_exponents;

  bool operator==(const ModuleInvariants&) const = default;
};

// Cokernel of a relation matrix, viewed p-adically: free rank is
// cols - rank(A); torsion prime to p is discarded.
ModuleInvariants cokernel_invariants(const IntMatrix& relations,
                                     const mpz_class& p);

}  // namespace sstower
