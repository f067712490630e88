#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "superhom/rational.hpp"

namespace superhom {

class SparseRationalMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  SparseRationalMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Index, Rational>& entries() const { return entries_; }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  SparseRationalMatrix transpose() const;
  // Entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseRationalMatrix permuted(const std::vector<std::size_t>& row_perm,
                                const std::vector<std::size_t>& col_perm) const;
  SparseRationalMatrix scaled(const Rational& s) const;

  bool operator==(const SparseRationalMatrix& o) const = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_, cols_;
  std::map<Index, Rational> entries_;
};

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

// Matrices with both sides below this use dense Bareiss elimination.
constexpr std::size_t kDenseThreshold = 64;

std::size_t rank(const SparseRationalMatrix& m);
std::size_t kernel_dim(const SparseRationalMatrix& m);

// The two elimination routes, exposed so they can be compared directly.
std::size_t dense_bareiss_rank(const SparseRationalMatrix& m);
std::size_t sparse_fraction_free_rank(const SparseRationalMatrix& m);

// "# rows cols nnz" header, then one "row col num/den" line per entry (0-based).
void write_triplets(std::ostream& os, const SparseRationalMatrix& m);
SparseRationalMatrix read_triplets(std::istream& is);

}  // namespace superhom
