#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "halphen/rational.hpp"

namespace halphen {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Dense fraction-free (Bareiss) elimination; every division is exact.
std::size_t rank_bareiss(IntegerMatrix matrix);
/// Clears denominators row by row, then runs the integer elimination.
std::size_t rank_bareiss(const RationalMatrix& matrix);

/// Nonzero entries of one row, strictly increasing column index.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Incremental row echelon form over Z for sparse rows. Each reduction step
/// is a fraction-free cross-multiplication followed by removal of the row
/// content, so entries remain integers of moderate size.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t n_cols) : pivots_(n_cols) {}

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseRow row);
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::vector<SparseRow> pivots_;  // indexed by leading column; empty if none
  std::size_t rank_ = 0;
};

std::size_t rank_sparse(std::vector<SparseRow> rows, std::size_t n_cols);

/// Rank of the rows reduced modulo `prime` (< 2^63). A lower bound for the
/// rational rank; equal to it unless the prime divides certain minors.
std::size_t rank_modular(std::span<const SparseRow> rows, std::size_t n_cols, std::uint64_t prime);

bool is_prime(std::uint64_t n);
/// Deterministic in `seed`; returns a prime in [2^61, 2^62).
std::uint64_t random_prime(std::uint64_t seed);

}  // namespace halphen
