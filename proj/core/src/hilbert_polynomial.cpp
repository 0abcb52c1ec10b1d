#include "halphen/hilbert_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "halphen/errors.hpp"

namespace halphen {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void HilbertPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HilbertPolynomial HilbertPolynomial::binomial(std::int64_t shift, unsigned r) {
  std::vector<Rational> p{1};
  Rational factorial = 1;
  for (unsigned i = 0; i < r; ++i) {
    // p <- p * (m + shift - i)
    const Rational c(shift - static_cast<std::int64_t>(i));
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] += p[k] * c;
    }
    p = std::move(next);
    factorial *= i + 1;
  }
  for (auto& c : p) c /= factorial;
  return HilbertPolynomial(std::move(p));
}

Rational HilbertPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

std::optional<unsigned> HilbertPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational HilbertPolynomial::operator()(const Rational& m) const {
  Rational value = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) value = value * m + coeffs_[k];
  return value;
}

HilbertPolynomial& HilbertPolynomial::operator+=(const HilbertPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

HilbertPolynomial HilbertPolynomial::scaled(const Rational& factor) const {
  HilbertPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= factor;
  r.trim();
  return r;
}

HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  HilbertPolynomial r = a;
  r += b.scaled(-1);
  return r;
}

std::string HilbertPolynomial::to_string(std::string_view variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (k == 0) {
      out += halphen::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += halphen::to_string(magnitude) + '*';
    out += variable;
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

HilbertPolynomialResult hilbert_polynomial_from_series(const HilbertSeriesNumerator& numerator) {
  if (numerator.coeffs.empty())
    throw EmptyProjectiveSet("the Hilbert series is zero: the ideal is the unit ideal");
  std::vector<Integer> q = numerator.coeffs;
  std::size_t e = 0;
  for (;;) {
    Integer at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) break;
    // q <- q / (1 - t): partial sums.
    std::vector<Integer> next(q.size() - 1);
    Integer running = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      running += q[k];
      next[k] = running;
    }
    q = std::move(next);
    ++e;
  }
  if (e > numerator.n_vars) throw std::logic_error("series numerator divisible beyond n_vars");
  const std::size_t dim = numerator.n_vars - e;

  HilbertPolynomial p;
  if (dim > 0) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] == 0) continue;
      const auto shift = static_cast<std::int64_t>(dim) - 1 - static_cast<std::int64_t>(k);
      p += HilbertPolynomial::binomial(shift, static_cast<unsigned>(dim - 1)).scaled(Rational(q[k]));
    }
  }
  const auto deg_q = static_cast<std::int64_t>(q.size()) - 1;
  const std::int64_t threshold = deg_q - static_cast<std::int64_t>(dim) + 1;
  return {std::move(p), static_cast<std::uint64_t>(std::max<std::int64_t>(0, threshold)), dim,
          numerator};
}

HilbertSeriesNumerator hilbert_series(const IdealSpec& ideal, MonomialOrder order) {
  if (ideal.generators().empty()) return {{1}, ideal.n_vars()};
  return series_numerator(initial_ideal(buchberger(ideal, order)));
}

HilbertPolynomialResult hilbert_polynomial(const IdealSpec& ideal, MonomialOrder order) {
  if (ideal.has_constant_generator())
    throw EmptyProjectiveSet("the ideal contains a nonzero constant; its zero set is empty");
  return hilbert_polynomial_from_series(hilbert_series(ideal, order));
}

}  // namespace halphen
