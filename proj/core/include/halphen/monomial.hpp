#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace halphen {

/// Exponent vector of a monomial; one slot per ring variable.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : exponents_(n_vars, 0) {}
  explicit Monomial(std::vector<exponent_type> exponents);
  Monomial(std::initializer_list<exponent_type> exponents);

  static Monomial variable(std::size_t n_vars, std::size_t index, exponent_type power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  exponent_type operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const exponent_type> exponents() const noexcept { return exponents_; }
  std::uint64_t total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, exponent_type e);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  /// Generator of the colon ideal <this> : <other>, i.e. max(a - b, 0) slotwise.
  Monomial colon(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Pure power of one variable (x_i^k, k >= 1): the variable index.
  std::optional<std::size_t> pure_power_variable() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  /// Structural (exponent-wise lexicographic) order, used only for containers.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<exponent_type> exponents_;
  std::uint64_t degree_ = 0;
};

enum class MonomialOrder { degrevlex, deglex, lex };

std::string_view to_string(MonomialOrder order);
std::optional<MonomialOrder> parse_monomial_order(std::string_view name);

/// Three-way comparison under a term order; `greater` means earlier in the
/// descending term sequence. Variables rank x_0 > x_1 > ... > x_{n-1}.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialGreater {
  MonomialOrder order = MonomialOrder::degrevlex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order) == std::strong_ordering::greater;
  }
};

/// All monomials of the given total degree, sorted descending under `order`.
std::vector<Monomial> enumerate_monomials(std::size_t n_vars, std::uint64_t degree,
                                          MonomialOrder order = MonomialOrder::degrevlex);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace halphen
