#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/parser.hpp"
#include "halphen/polynomial.hpp"

namespace halphen::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(HALPHEN_FIXTURE_DIR) + "/" + name;
}

inline IdealSpec load_fixture(const std::string& name) { return load_ideal_file(fixture_path(name)); }

/// Every shipped ideal fixture.
inline std::vector<std::string> all_fixture_names() {
  return {"E.ideal",         "twisted_cubic.ideal", "C0.ideal",          "Ct_0.ideal",
          "Ct_1.ideal",      "Ct_1_2.ideal",        "Ct_m2.ideal",       "L.ideal",
          "quadric_ci.ideal", "zero.ideal",         "plane_line.ideal",  "plane_conic.ideal",
          "plane_cubic.ideal", "plane_quartic.ideal", "plane_quintic.ideal"};
}

inline RingPtr ring_xyzw() { return make_ring({"x", "y", "z", "w"}); }
inline RingPtr ring_xyz() { return make_ring({"x", "y", "z"}); }

/// Small random rationals: numerators in [-range, range], denominators in [1, 3].
class RandomAlgebra {
 public:
  explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int range = 5, bool nonzero = false) {
    for (;;) {
      Rational r(integer(-range, range), integer(1, 3));
      r.canonicalize();
      if (!nonzero || r != 0) return r;
    }
  }

  Monomial monomial(std::size_t n_vars, unsigned degree) {
    Monomial m(n_vars);
    for (unsigned k = 0; k < degree; ++k) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<int>(n_vars) - 1));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  /// Random nonzero homogeneous polynomial of the given degree with up to max_terms terms.
  Polynomial homogeneous(const RingPtr& ring, unsigned degree, int max_terms = 5) {
    for (;;) {
      std::vector<Term> terms;
      const int n = integer(1, max_terms);
      for (int k = 0; k < n; ++k) terms.push_back({monomial(ring->size(), degree), rational(5, true)});
      Polynomial f = Polynomial::from_terms(ring, std::move(terms));
      if (!f.is_zero()) return f;
    }
  }

  /// Random polynomial of mixed degrees <= max_degree.
  Polynomial polynomial(const RingPtr& ring, unsigned max_degree = 3, int max_terms = 6) {
    std::vector<Term> terms;
    const int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k)
      terms.push_back({monomial(ring->size(), static_cast<unsigned>(integer(0, static_cast<int>(max_degree)))),
                       rational(7)});
    return Polynomial::from_terms(ring, std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace halphen::testing
