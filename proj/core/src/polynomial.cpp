#include "halphen/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "halphen/errors.hpp"

namespace halphen {

namespace {

constexpr MonomialGreater canonical_order{MonomialOrder::degrevlex};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Merges two canonical term lists, a + sign * b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_order(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_order(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> canonical_terms)
    : ring_(std::move(ring)), terms_(std::move(canonical_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  return monomial(ring, Monomial(ring->size()), value);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  return monomial(ring, Monomial::variable(ring->size(), index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& coefficient) {
  if (m.size() != ring->size()) throw std::invalid_argument("monomial size does not match ring");
  Polynomial p(std::move(ring));
  if (coefficient != 0) p.terms_.push_back({std::move(m), coefficient});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring->size())
      throw std::invalid_argument("monomial size does not match ring");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_order(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  Polynomial p(std::move(ring));
  p.terms_ = std::move(out);
  return p;
}

std::optional<std::uint64_t> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Degree-compatible canonical order: the first term has maximal degree.
  return terms_.front().monomial.total_degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().monomial.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.total_degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return canonical_order(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::invalid_argument("the zero polynomial has no leading term");
  if (order == MonomialOrder::degrevlex) return terms_.front();
  const MonomialGreater greater{order};
  return *std::min_element(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return greater(a.monomial, b.monomial);
  });
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size())
    throw std::invalid_argument("evaluate: expected " + std::to_string(ring_->size()) +
                                " coordinates, got " + std::to_string(point.size()));
  Rational total = 0;
  Rational power;
  for (const auto& t : terms_) {
    Rational value = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      value *= power;
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::partial_derivative(std::size_t var_index) const {
  if (var_index >= ring_->size()) throw std::out_of_range("partial_derivative: index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[var_index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var_index, e - 1);
    out.push_back({std::move(m), t.coefficient * e});
  }
  // Distinct inputs stay distinct, but the order can change, so re-canonicalize.
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= factor;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coefficient});
  return Polynomial(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

}  // namespace halphen
