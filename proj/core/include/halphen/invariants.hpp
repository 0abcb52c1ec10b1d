#pragma once

#include <cstdint>
#include <optional>

#include "halphen/hilbert_polynomial.hpp"

namespace halphen {

struct ProjectiveInvariants {
  unsigned dimension = 0;
  std::int64_t degree = 0;
  /// 1 - P(0); only present for dimension 1. Not asserted non-negative:
  /// reducible or non-reduced curves can have any constant term.
  std::optional<std::int64_t> genus;
  /// Degree for dimension >= 2 is dim! times the leading coefficient; this
  /// goes beyond the curve and point cases and is flagged as such.
  bool degree_is_extension = false;
};

/// Throws std::invalid_argument for P = 0 and MalformedHilbertPolynomial if
/// the relevant coefficients are not integers.
ProjectiveInvariants invariants_of(const HilbertPolynomial& p);

/// (d-1)(d-2)/2
std::int64_t plane_genus(std::int64_t d);

/// d*m - (d-1)(d-2)/2 + 1, i.e. C(m+2, 2) - C(m-d+2, 2) for m >= d - 1.
HilbertPolynomial plane_hilbert_polynomial(std::int64_t d);

}  // namespace halphen
