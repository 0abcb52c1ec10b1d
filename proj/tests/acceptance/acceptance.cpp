// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "halphen/classifier.hpp"
#include "halphen/errors.hpp"
#include "halphen/geometry.hpp"
#include "halphen/graded_dim.hpp"
#include "halphen/hilbert_polynomial.hpp"
#include "halphen/invariants.hpp"
#include "halphen/parser.hpp"
#include "test_support.hpp"

namespace {

using namespace halphen;
using halphen::testing::fixture_path;
using halphen::testing::load_fixture;
using halphen::testing::RandomAlgebra;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

HilbertPolynomial linear(std::int64_t a, std::int64_t b) { return HilbertPolynomial({Rational(b), Rational(a)}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string ac1() {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    IdealSpec ideal;
    std::string name;
    std::int64_t a, b;
  };
  std::vector<Case> cases;
  cases.push_back({load_fixture("E.ideal"), "E", 3, 0});
  cases.push_back({load_fixture("twisted_cubic.ideal"), "C", 3, 1});
  const std::string tmpl = read_file(fixture_path("Ct.ideal.in"));
  for (const char* t : {"0", "1", "1/2", "-2"})
    cases.push_back({parse_ideal_file(substitute_parameter(tmpl, "t", t)), std::string("C_t t=") + t, 4, 0});
  for (const char* f : {"Ct_0.ideal", "Ct_1.ideal", "Ct_1_2.ideal", "Ct_m2.ideal"}) cases.push_back({load_fixture(f), f, 4, 0});
  for (const auto& c : cases) {
    const auto p = hilbert_polynomial(c.ideal).polynomial;
    require(p == linear(c.a, c.b), c.name + " gave P(m) = " + p.to_string());
    const auto inv = invariants_of(p);
    require(inv.dimension == 1 && inv.degree == c.a && inv.genus == 1 - c.b, c.name + " invariants");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 5.0, "pipeline took " + std::to_string(secs) + " s");
  std::ostringstream msg;
  msg << cases.size() << " pipelines exact, " << secs << " s";
  return msg.str();
}

std::string ac2() {
  const IdealSpec c0 = load_fixture("C0.ideal");
  const IdealSpec cubic = load_fixture("twisted_cubic.ideal");
  const IdealSpec line = load_fixture("L.ideal");
  const auto p = hilbert_polynomial(c0).polynomial;
  require(p == linear(4, 0), "P_C0 = " + p.to_string());
  const auto inv = invariants_of(p);
  require(inv.degree == 4 && inv.genus == 1, "C0 degree/genus");
  RandomAlgebra gen(2002);
  int checked = 0;
  for (int k = 0; k < 20; ++k) {
    Rational s = gen.rational(9), t = gen.rational(9);
    if (s == 0 && t == 0) s = 1;
    const ProjectivePoint on_c({s * s * s, s * s * t, s * t * t, t * t * t});
    const ProjectivePoint on_l({s, 0, 0, t});
    require(on_variety(cubic, on_c) && on_variety(c0, on_c), "sampled point of C not on C0");
    require(on_variety(line, on_l) && on_variety(c0, on_l), "sampled point of L not on C0");
    checked += 2;
  }
  const ProjectivePoint origin({1, 0, 0, 0});
  require(jacobian_rank_at(c0, origin) == 1 && !is_smooth_at(c0, origin, 2), "[1:0:0:0] not singular on C0");
  require(jacobian_rank_at(cubic, origin) == 2 && is_smooth_at(cubic, origin, 2), "[1:0:0:0] not smooth on C");
  return std::to_string(checked) + " sampled points contained; singular on C0 (rank 1), smooth on C (rank 2)";
}

std::string ac3() {
  const RingPtr r = halphen::testing::ring_xyz();
  RandomAlgebra gen(2003);
  int values = 0;
  for (unsigned d = 1; d <= 10; ++d) {
    std::vector<Term> terms;
    for (const auto& u : enumerate_monomials(3, d)) terms.push_back({u, gen.rational(9, true)});
    const IdealSpec ideal(r, {Polynomial::from_terms(r, std::move(terms))});
    const auto d64 = static_cast<std::int64_t>(d);
    for (std::int64_t m = 0; m <= d64 + 3; ++m) {
      const Integer expected = binomial(m + 2, 2) - binomial(m - d64 + 2, 2);
      require(hilbert_function(ideal, static_cast<std::uint64_t>(m)) == expected.get_ui(),
              "H(" + std::to_string(m) + ") for d = " + std::to_string(d));
      ++values;
    }
    const auto inv = invariants_of(hilbert_polynomial(ideal).polynomial);
    require(inv.genus == (d64 - 1) * (d64 - 2) / 2 && inv.degree == d64, "genus for d = " + std::to_string(d));
  }
  return std::to_string(values) + " Hilbert values and 10 genera exact";
}

std::string ac4() {
  int values = 0;
  for (const auto& name : halphen::testing::all_fixture_names()) {
    const IdealSpec ideal = load_fixture(name);
    const auto result = hilbert_polynomial(ideal);
    const std::uint64_t top = std::max<std::uint64_t>(12, result.stabilization_from + 5);
    const auto table = hilbert_function_table(ideal, top);
    const auto series = result.numerator.expand(top);
    for (std::uint64_t m = 0; m <= 12; ++m) {
      require(series[m] == table.values.at(m), name + " series vs rank at m = " + std::to_string(m));
      ++values;
    }
    for (std::uint64_t m = result.stabilization_from; m <= result.stabilization_from + 5; ++m) {
      require(result.polynomial(static_cast<std::int64_t>(m)) == table.values.at(m),
              name + " H != P at m = " + std::to_string(m));
      ++values;
    }
  }
  return std::to_string(values) + " comparisons over " + std::to_string(halphen::testing::all_fixture_names().size()) +
         " fixtures";
}

std::string ac5() {
  for (std::int64_t d = 2; d <= 50; ++d) {
    const auto gs = quadric_genera(d);
    require(!gs.empty() && *std::max_element(gs.begin(), gs.end()) == castelnuovo_bound(d),
            "max quadric genus at d = " + std::to_string(d));
  }
  std::string violations;
  for (std::int64_t d = 3; d <= 50; ++d) {
    require(castelnuovo_bound(d) <= plane_bound(d), "Castelnuovo > plane at d = " + std::to_string(d));
    const Rational gp = gruson_peskine_bound(d);
    if (gp > Rational(castelnuovo_bound(d)))
      violations += (violations.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + " (" + to_string(gp) +
                    " > " + std::to_string(castelnuovo_bound(d)) + ")";
  }
  require(violations.empty(), "gruson_peskine_bound > castelnuovo_bound at " + violations);
  return "d = 2..50 quadric maximum, d = 3..50 nesting";
}

std::string ac6() {
  for (auto [d, g] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {5, 4}, {5, 5}})
    require(!classify(d, g).exists_any, "(" + std::to_string(d) + "," + std::to_string(g) + ") should not exist");
  for (auto [d, g] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {4, 1}, {4, 3}, {5, 6}, {7, 5}})
    require(classify(d, g).exists_any, "(" + std::to_string(d) + "," + std::to_string(g) + ") should exist");
  return "4 gaps, 6 realized pairs";
}

// Sum_i x_i * df/dx_i == deg(f) * f as polynomials.
bool euler_holds(const Polynomial& f) {
  const RingPtr& r = f.ring_ptr();
  Polynomial sum(r);
  for (std::size_t i = 0; i < r->size(); ++i) sum += Polynomial::variable(r, i) * f.partial_derivative(i);
  return sum == f.scaled(Rational(static_cast<long>(*f.total_degree())));
}

std::string ac7() {
  constexpr int cases = 200;
  RandomAlgebra gen(2007);
  const RingPtr r3 = halphen::testing::ring_xyz();
  const RingPtr r4 = halphen::testing::ring_xyzw();

  for (int k = 0; k < cases; ++k) {
    const RingPtr& r = k % 2 ? r3 : r4;
    const Polynomial f = gen.homogeneous(r, static_cast<unsigned>(gen.integer(1, 6)), 6);
    if (f.is_zero()) continue;
    require(euler_holds(f), "Euler relation, case " + std::to_string(k));
  }

  int smooth = 0;
  for (int k = 0; k < cases; ++k) {
    std::vector<Rational> c{gen.rational(4), gen.rational(4), gen.rational(4)};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) c[1] = 1;
    const ProjectivePoint p(c);
    const ProjectivePoint q = p.scaled(gen.rational(6, true));
    const unsigned d = static_cast<unsigned>(gen.integer(1, 4));
    Polynomial f = gen.homogeneous(r3, d, 5);
    std::size_t i = 0;
    while (c[i] == 0) ++i;
    Monomial xi(3);
    xi.set(i, d);
    Rational xid = 1;
    for (unsigned e = 0; e < d; ++e) xid *= c[i];
    f -= Polynomial::monomial(r3, xi, f.evaluate(p.coords()) / xid);
    if (f.is_zero()) continue;
    const IdealSpec curve(r3, {f});
    require(p == q, "point equality under scaling");
    require(on_variety(curve, p) && on_variety(curve, q), "on_variety under scaling");
    require(jacobian_rank_at(curve, p) == jacobian_rank_at(curve, q), "Jacobian rank under scaling");
    if (is_smooth_at(curve, p, 1)) {
      require(is_smooth_at(curve, q, 1) && tangent_line(f, p) == tangent_line(f, q), "tangent line under scaling");
      ++smooth;
    } else {
      require(!is_smooth_at(curve, q, 1), "smoothness under scaling");
    }
  }

  const auto names = halphen::testing::all_fixture_names();
  for (int k = 0; k < cases; ++k) {
    const IdealSpec base = load_fixture(names[static_cast<std::size_t>(k) % names.size()]);
    std::vector<Polynomial> gens = base.generators();
    if (k % 4 == 1 && !gens.empty()) gens.push_back(gen.homogeneous(base.ring_ptr(), 2, 3));
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
    const IdealSpec a(base.ring_ptr(), gens), b(base.ring_ptr(), shuffled);
    const bool unit = a.has_constant_generator();
    if (unit) continue;
    std::optional<HilbertPolynomial> pa, pb;
    try {
      pa = hilbert_polynomial(a).polynomial;
    } catch (const EmptyProjectiveSet&) {
    }
    try {
      pb = hilbert_polynomial(b).polynomial;
    } catch (const EmptyProjectiveSet&) {
    }
    require(pa == pb, "Hilbert polynomial depends on generator order, case " + std::to_string(k));
  }

  const RingPtr odd = make_ring({"a1", "a", "b_2"});
  for (int k = 0; k < cases; ++k) {
    const RingPtr& r = k % 3 == 0 ? r3 : (k % 3 == 1 ? r4 : odd);
    const Polynomial f = gen.polynomial(r, 4, 7);
    const std::string text = format_polynomial(f);
    require(parse_polynomial(text, r) == f, "parser round trip of " + text);
  }
  return "4 suites x " + std::to_string(cases) + " cases (" + std::to_string(smooth) + " smooth tangent checks)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"AC1 golden Hilbert polynomials", ac1}, {"AC2 degeneration of C_t", ac2},
      {"AC3 plane closed form", ac3},          {"AC4 rank vs series oracle", ac4},
      {"AC5 bound consistency", ac5},          {"AC6 gap examples", ac6},
      {"AC7 property suites", ac7}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    try {
      const std::string detail = run();
      std::cout << "PASS " << name << ": " << detail << '\n';
    } catch (const Failure& f) {
      ++failed;
      std::cout << "FAIL " << name << ": " << f.what << '\n';
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << name << ": exception: " << e.what() << '\n';
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
