#include "halphen/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace halphen {

namespace {

std::uint64_t sum(const std::vector<Monomial::exponent_type>& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

void check_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials from rings of different size");
}

}  // namespace

Monomial::Monomial(std::vector<exponent_type> exponents)
    : exponents_(std::move(exponents)), degree_(sum(exponents_)) {}

Monomial::Monomial(std::initializer_list<exponent_type> exponents)
    : exponents_(exponents), degree_(sum(exponents_)) {}

Monomial Monomial::variable(std::size_t n_vars, std::size_t index, exponent_type power) {
  Monomial m(n_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, exponent_type e) {
  degree_ -= exponents_.at(i);
  exponents_[i] = e;
  degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  check_size(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_size(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] -= divisor.exponents_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::colon(const Monomial& other) const {
  check_size(*this, other);
  std::vector<exponent_type> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = exponents_[i] > other.exponents_[i] ? exponents_[i] - other.exponents_[i] : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_size(*this, other);
  std::vector<exponent_type> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  check_size(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::degrevlex: return "degrevlex";
    case MonomialOrder::deglex: return "deglex";
    case MonomialOrder::lex: return "lex";
  }
  return "unknown";
}

std::optional<MonomialOrder> parse_monomial_order(std::string_view name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::degrevlex;
  if (name == "deglex" || name == "grlex") return MonomialOrder::deglex;
  if (name == "lex") return MonomialOrder::lex;
  return std::nullopt;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  check_size(a, b);
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  switch (order) {
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] <=> eb[i];
      return std::strong_ordering::equal;
    case MonomialOrder::deglex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] <=> eb[i];
      return std::strong_ordering::equal;
    case MonomialOrder::degrevlex:
      if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
      // Smaller exponent in the last differing variable wins.
      for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i]) return eb[i] <=> ea[i];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> enumerate_monomials(std::size_t n_vars, std::uint64_t degree,
                                          MonomialOrder order) {
  if (n_vars == 0) throw std::invalid_argument("enumerate_monomials: need at least one variable");
  std::vector<Monomial> out;
  std::vector<Monomial::exponent_type> e(n_vars, 0);
  // Compositions of `degree` into n_vars parts; slot 0 gets the remainder.
  auto recurse = [&](auto&& self, std::size_t slot, std::uint64_t remaining) -> void {
    if (slot == 0) {
      e[0] = static_cast<Monomial::exponent_type>(remaining);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = 0; k <= remaining; ++k) {
      e[slot] = static_cast<Monomial::exponent_type>(k);
      self(self, slot - 1, remaining - k);
    }
    e[slot] = 0;
  };
  recurse(recurse, n_vars - 1, degree);
  std::sort(out.begin(), out.end(), MonomialGreater{order});
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents()) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace halphen
