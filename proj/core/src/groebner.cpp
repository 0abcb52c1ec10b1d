#include "halphen/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "halphen/errors.hpp"

namespace halphen {

namespace {

// Terms ascending under the active order, so the leading term is back().
struct OrderedPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Term& lead() const { return terms.back(); }
};

class Engine {
 public:
  Engine(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  OrderedPoly convert(const Polynomial& p) const {
    OrderedPoly out{{p.terms().begin(), p.terms().end()}};
    std::sort(out.terms.begin(), out.terms.end(),
              [this](const Term& a, const Term& b) { return less(a.monomial, b.monomial); });
    return out;
  }

  Polynomial back(OrderedPoly p) const { return Polynomial::from_terms(ring_, std::move(p.terms)); }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order_) == std::strong_ordering::less;
  }

  static void make_monic(OrderedPoly& p) {
    if (p.empty()) return;
    const Rational inv = 1 / p.lead().coefficient;
    for (auto& t : p.terms) t.coefficient *= inv;
  }

  // f - factor * shift * g, both ascending.
  OrderedPoly sub_mul(const OrderedPoly& f, const Rational& factor, const Monomial& shift,
                      const OrderedPoly& g) const {
    OrderedPoly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
      if (j == g.terms.size()) {
        out.terms.push_back(f.terms[i++]);
        continue;
      }
      Monomial shifted = g.terms[j].monomial * shift;
      if (i == f.terms.size() || less(shifted, f.terms[i].monomial)) {
        out.terms.push_back({std::move(shifted), Rational(-factor * g.terms[j].coefficient)});
        ++j;
      } else if (less(f.terms[i].monomial, shifted)) {
        out.terms.push_back(f.terms[i++]);
      } else {
        Rational c = f.terms[i].coefficient - factor * g.terms[j].coefficient;
        if (c != 0) out.terms.push_back({std::move(shifted), std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction. Remainder terms are produced in descending order.
  OrderedPoly reduce(OrderedPoly f, const std::vector<OrderedPoly>& divisors,
                     std::size_t skip = static_cast<std::size_t>(-1)) const {
    std::vector<Term> remainder;
    while (!f.empty()) {
      const Term& lt = f.lead();
      const OrderedPoly* divisor = nullptr;
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        if (k == skip || divisors[k].empty()) continue;
        if (divisors[k].lead().monomial.divides(lt.monomial)) {
          divisor = &divisors[k];
          break;
        }
      }
      if (!divisor) {
        remainder.push_back(lt);
        f.terms.pop_back();
        continue;
      }
      const Rational factor = lt.coefficient / divisor->lead().coefficient;
      const Monomial shift = lt.monomial / divisor->lead().monomial;
      f = sub_mul(f, factor, shift, *divisor);
    }
    std::reverse(remainder.begin(), remainder.end());
    return OrderedPoly{std::move(remainder)};
  }

  OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g) const {
    const Monomial l = f.lead().monomial.lcm(g.lead().monomial);
    // l/LM(f) * f / LC(f) - l/LM(g) * g / LC(g)
    OrderedPoly scaled_f;
    const Monomial uf = l / f.lead().monomial;
    const Rational cf = 1 / f.lead().coefficient;
    scaled_f.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) scaled_f.terms.push_back({t.monomial * uf, t.coefficient * cf});
    return sub_mul(scaled_f, Rational(1 / g.lead().coefficient), l / g.lead().monomial, g);
  }

  MonomialOrder order() const { return order_; }

 private:
  RingPtr ring_;
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const IdealSpec& ideal, MonomialOrder order,
                         const BuchbergerOptions& options) {
  const Engine engine(ideal.ring_ptr(), order);
  std::vector<OrderedPoly> basis;
  for (const auto& g : ideal.generators()) {
    OrderedPoly p = engine.convert(g);
    Engine::make_monic(p);
    basis.push_back(std::move(p));
  }

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back({i, j, basis[i].lead().monomial.lcm(basis[j].lead().monomial)});
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::size_t reductions = 0;
  while (!queue.empty()) {
    // Normal strategy: the pair with the smallest lcm; ties by index.
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      const auto c = compare(a.lcm, b.lcm, order);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    queue.erase(best);
    pending.erase({pair.i, pair.j});

    const Monomial& li = basis[pair.i].lead().monomial;
    const Monomial& lj = basis[pair.j].lead().monomial;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].lead().monomial.divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) continue;

    if (++reductions > options.max_reductions)
      throw GroebnerBudgetExceeded("Buchberger exceeded " + std::to_string(options.max_reductions) +
                                   " S-polynomial reductions");
    OrderedPoly r = engine.reduce(engine.spoly(basis[pair.i], basis[pair.j]), basis);
    if (r.empty()) continue;
    Engine::make_monic(r);
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].lead().monomial;
      const Monomial& lm = basis[i].lead().monomial;
      redundant = lk.divides(lm) && (lk != lm || k < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce; leading terms are untouched, so this is order-independent.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    OrderedPoly tail = minimal[i];
    const Term lead = tail.lead();
    tail.terms.pop_back();
    OrderedPoly reduced = engine.reduce(std::move(tail), minimal, i);
    reduced.terms.push_back(lead);
    minimal[i] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return engine.less(b.lead().monomial, a.lead().monomial);
  });

  GroebnerBasis out{ideal.ring_ptr(), order, {}};
  for (auto& p : minimal) out.elements.push_back(engine.back(std::move(p)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       MonomialOrder order) {
  const Engine engine(f.ring_ptr(), order);
  std::vector<OrderedPoly> ds;
  for (const auto& d : divisors) {
    if (!same_ring(d.ring_ptr(), f.ring_ptr())) throw RingMismatch("normal_form: ring mismatch");
    ds.push_back(engine.convert(d));
  }
  return engine.back(engine.reduce(engine.convert(f), ds));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
  const Engine engine(f.ring_ptr(), order);
  return engine.back(engine.spoly(engine.convert(f), engine.convert(g)));
}

bool is_groebner_basis(std::span<const Polynomial> basis, MonomialOrder order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero())
        return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Term& lead = gb.elements[i].leading_term(gb.order);
    if (lead.coefficient != 1) return false;
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
      if (k == i) continue;
      const Monomial& lk = gb.elements[k].leading_term(gb.order).monomial;
      for (const auto& t : gb.elements[i].terms())
        if (lk.divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace halphen
