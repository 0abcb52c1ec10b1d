#include "halphen/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace halphen {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

IntPoly shift(const IntPoly& p, std::uint64_t k) {
  if (p.empty()) return p;
  IntPoly out(k, Integer(0));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

// p * (1 - t^k)
IntPoly times_one_minus(const IntPoly& p, std::uint64_t k) {
  IntPoly out = p;
  out.resize(p.size() + k);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + k] -= p[i];
  trim(out);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    // Sorted by degree, so only earlier generators can divide g.
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) return false;
  return true;
}

IntPoly numerator(const std::vector<Monomial>& gens, std::size_t n_vars) {
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens.front().is_one()) return {};
  if (pairwise_coprime(gens)) {
    IntPoly out{1};
    for (const auto& g : gens) out = times_one_minus(out, g.total_degree());
    return out;
  }

  // Pivot variable: most frequent among generators that are not pure powers.
  std::vector<std::size_t> freq(n_vars, 0);
  for (const auto& g : gens) {
    if (g.pure_power_variable()) continue;
    for (std::size_t v = 0; v < n_vars; ++v)
      if (g[v]) ++freq[v];
  }
  const std::size_t var =
      static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  Monomial::exponent_type power = 0;
  for (const auto& g : gens) {
    if (g.pure_power_variable() || g[var] == 0) continue;
    if (power == 0 || g[var] < power) power = g[var];
  }
  // Minimality puts any pure power of `var` strictly above `power`, so the
  // pivot is new to the ideal and both branches shrink the total degree.
  const Monomial pivot = Monomial::variable(n_vars, var, power);

  std::vector<Monomial> sum{pivot};
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) {
    if (!pivot.divides(g)) sum.push_back(g);
    quotient.push_back(g.colon(pivot));
  }
  return add(numerator(minimalize(std::move(sum)), n_vars),
             shift(numerator(minimalize(std::move(quotient)), n_vars), power));
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n_vars, std::vector<Monomial> generators)
    : n_vars_(n_vars) {
  for (const auto& g : generators)
    if (g.size() != n_vars) throw std::invalid_argument("MonomialIdeal: generator size mismatch");
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains_one() const noexcept {
  return generators_.size() == 1 && generators_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> leads;
  for (const auto& p : basis.elements) leads.push_back(p.leading_term(basis.order).monomial);
  return MonomialIdeal(basis.ring->size(), std::move(leads));
}

std::vector<Integer> HilbertSeriesNumerator::expand(std::uint64_t m_max) const {
  std::vector<Integer> out;
  out.reserve(m_max + 1);
  for (std::uint64_t m = 0; m <= m_max; ++m) out.push_back(coefficient(m));
  return out;
}

Integer HilbertSeriesNumerator::coefficient(std::uint64_t m) const {
  Integer h = 0;
  const auto n = static_cast<std::int64_t>(n_vars);
  for (std::size_t k = 0; k < coeffs.size() && k <= m; ++k)
    h += coeffs[k] * binomial(static_cast<std::int64_t>(m - k) + n - 1, n - 1);
  return h;
}

HilbertSeriesNumerator series_numerator(const MonomialIdeal& ideal) {
  return {numerator(ideal.generators(), ideal.n_vars()), ideal.n_vars()};
}

HilbertSeriesNumerator series_numerator(const MonomialIdeal& ideal, std::size_t n_vars) {
  if (n_vars != ideal.n_vars()) throw std::invalid_argument("series_numerator: n_vars mismatch");
  return series_numerator(ideal);
}

}  // namespace halphen
