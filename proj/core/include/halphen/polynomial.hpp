#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halphen/monomial.hpp"
#include "halphen/rational.hpp"

namespace halphen {

/// Ordered list of variable names. Variable i corresponds to exponent slot i.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  std::size_t size() const noexcept { return variables_.size(); }
  const std::string& name(std::size_t i) const { return variables_.at(i); }
  std::span<const std::string> variables() const noexcept { return variables_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.variables_ == b.variables_; }

 private:
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in canonical form: no zero coefficients, terms
/// strictly descending in degrevlex. Equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& coefficient = 1);
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Empty for the zero polynomial.
  std::optional<std::uint64_t> total_degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term(MonomialOrder order) const;

  Rational evaluate(std::span<const Rational> point) const;
  Polynomial partial_derivative(std::size_t var_index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_monomial(const Monomial& m) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> canonical_terms);
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

}  // namespace halphen
