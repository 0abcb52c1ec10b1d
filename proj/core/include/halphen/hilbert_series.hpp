#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "halphen/groebner.hpp"
#include "halphen/monomial.hpp"
#include "halphen/rational.hpp"

namespace halphen {

/// Monomial ideal kept by its minimal generators (none divides another),
/// sorted structurally.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool contains_one() const noexcept;
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_vars_;
  std::vector<Monomial> generators_;
};

/// Leading monomials of the basis elements, minimalized.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// N(t) with sum_m H(m) t^m = N(t) / (1 - t)^n_vars.
struct HilbertSeriesNumerator {
  std::vector<Integer> coeffs;  // ascending powers of t, trailing zeros trimmed
  std::size_t n_vars = 0;

  /// H(0..m_max) from the power-series expansion.
  std::vector<Integer> expand(std::uint64_t m_max) const;
  Integer coefficient(std::uint64_t m) const;

  friend bool operator==(const HilbertSeriesNumerator&, const HilbertSeriesNumerator&) = default;
};

/// Pivot recursion N(I) = N(I + <p>) + t^deg(p) N(I : p) with p a power of
/// the variable occurring in the most non-pure-power generators. Base
/// cases: no generators gives 1, the unit ideal gives 0, pairwise coprime
/// generators give the product of (1 - t^deg).
HilbertSeriesNumerator series_numerator(const MonomialIdeal& ideal);
HilbertSeriesNumerator series_numerator(const MonomialIdeal& ideal, std::size_t n_vars);

}  // namespace halphen
