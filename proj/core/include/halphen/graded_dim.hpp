#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/monomial.hpp"

namespace halphen {

enum class RankEngine {
  sparse_exact,  ///< fraction-free sparse elimination over Z (default)
  dense_bareiss, ///< dense Bareiss elimination over Z
  modular,       ///< rank modulo a random 62-bit prime; not authoritative
};

struct GradedDimOptions {
  RankEngine engine = RankEngine::sparse_exact;
  /// Prime used by RankEngine::modular; 0 picks one from `seed`.
  std::uint64_t modulus = 0;
  std::uint64_t seed = 0x5eed;
  /// Worker threads for tables; 0 reads HALPHEN_THREADS, else hardware.
  unsigned threads = 0;
};

/// Monomial basis of the degree-m piece R_m, descending degrevlex.
class GradedPieceBasis {
 public:
  GradedPieceBasis(std::size_t n_vars, std::uint64_t degree);

  std::uint64_t degree() const noexcept { return degree_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  std::size_t index_of(const Monomial& m) const { return index_.at(m); }

 private:
  std::uint64_t degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// dim_Q of I_m: the rank of the coefficient matrix of all products u*f_i
/// (u a monomial, deg(u*f_i) = m) written in the monomial basis of R_m.
std::size_t ideal_piece_dimension(const IdealSpec& ideal, std::uint64_t m,
                                  const GradedDimOptions& options = {});

/// H(m) = dim (R/I)_m = C(m+n-1, n-1) - dim I_m, for the generators as given
/// (no saturation is performed).
std::size_t hilbert_function(const IdealSpec& ideal, std::uint64_t m,
                             const GradedDimOptions& options = {});

struct HilbertFunctionTable {
  IdealSpec ideal;
  std::map<std::uint64_t, std::size_t> values;

  std::vector<std::size_t> as_vector() const;
};

/// H(0..m_max); degrees are evaluated concurrently and merged by degree.
HilbertFunctionTable hilbert_function_table(const IdealSpec& ideal, std::uint64_t m_max,
                                            const GradedDimOptions& options = {});

/// C(m+n-1, n-1), the number of monomials of degree m in n variables.
std::size_t monomial_count(std::size_t n_vars, std::uint64_t degree);

/// Worker count from HALPHEN_THREADS, falling back to the hardware count.
unsigned worker_count(unsigned requested = 0);

}  // namespace halphen
