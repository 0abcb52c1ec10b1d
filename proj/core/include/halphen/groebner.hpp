#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/monomial.hpp"
#include "halphen/polynomial.hpp"

namespace halphen {

/// Reduced Gröbner basis: monic elements sorted by descending leading
/// monomial, no leading monomial dividing any term of another element.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::degrevlex;
  std::vector<Polynomial> elements;
};

struct BuchbergerOptions {
  /// Upper bound on S-polynomial reductions before giving up.
  std::size_t max_reductions = 1'000'000;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and both of Buchberger's criteria. An empty generator list yields
/// the empty basis of the zero ideal.
GroebnerBasis buchberger(const IdealSpec& ideal, MonomialOrder order = MonomialOrder::degrevlex,
                         const BuchbergerOptions& options = {});

/// Fully reduced remainder of f on division by `divisors`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Every S-polynomial of the set reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, MonomialOrder order);

/// Leading monomials pairwise non-dividing and no basis term reducible by
/// another element; elements monic.
bool is_reduced(const GroebnerBasis& basis);

}  // namespace halphen
