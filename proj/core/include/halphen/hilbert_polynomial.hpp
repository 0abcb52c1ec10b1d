#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halphen/hilbert_series.hpp"
#include "halphen/ideal.hpp"
#include "halphen/rational.hpp"

namespace halphen {

/// Univariate polynomial P(m) with rational coefficients.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  /// Ascending powers; trailing zeros trimmed.
  explicit HilbertPolynomial(std::vector<Rational> coeffs);

  /// The binomial polynomial (m + shift choose r) = prod_{i<r} (m + shift - i) / r!.
  static HilbertPolynomial binomial(std::int64_t shift, unsigned r);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  std::optional<unsigned> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator()(const Rational& m) const;
  Rational operator()(std::int64_t m) const { return (*this)(Rational(m)); }

  HilbertPolynomial& operator+=(const HilbertPolynomial& other);
  HilbertPolynomial scaled(const Rational& factor) const;
  friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b);

  /// "3*m + 1", "4*m", "1/2*m^2 + 3/2*m + 1", "0".
  std::string to_string(std::string_view variable = "m") const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct HilbertPolynomialResult {
  HilbertPolynomial polynomial;
  /// H(m) = P(m) for every m >= stabilization_from.
  std::uint64_t stabilization_from = 0;
  /// Krull dimension of R/I; the projective dimension is one less.
  std::size_t affine_dimension = 0;
  HilbertSeriesNumerator numerator;
};

/// Writes N(t) = (1 - t)^e q(t) with q(1) != 0 and sums q_k (m - k + D - 1
/// choose D - 1) over k, D = n - e. Exact for m >= max(0, deg q - D + 1).
HilbertPolynomialResult hilbert_polynomial_from_series(const HilbertSeriesNumerator& numerator);

/// Gröbner basis, initial ideal, series numerator, polynomial. Throws
/// EmptyProjectiveSet when the ideal contains a nonzero constant.
HilbertPolynomialResult hilbert_polynomial(const IdealSpec& ideal,
                                           MonomialOrder order = MonomialOrder::degrevlex);

/// Hilbert series of R/I through the Gröbner path.
HilbertSeriesNumerator hilbert_series(const IdealSpec& ideal,
                                      MonomialOrder order = MonomialOrder::degrevlex);

}  // namespace halphen
