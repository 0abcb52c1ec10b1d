#include <gtest/gtest.h>

#include <algorithm>

#include "halphen/errors.hpp"
#include "halphen/graded_dim.hpp"
#include "halphen/groebner.hpp"
#include "halphen/hilbert_polynomial.hpp"
#include "halphen/hilbert_series.hpp"
#include "test_support.hpp"

namespace halphen {
namespace {

using testing::load_fixture;
using testing::RandomAlgebra;

std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

Monomial mono(std::initializer_list<std::uint32_t> exps) { return Monomial(std::vector<std::uint32_t>(exps)); }

HilbertPolynomial linear(std::int64_t a, std::int64_t b) {
  return HilbertPolynomial({Rational(b), Rational(a)});
}

// Independent count of degree-m monomials outside a monomial ideal.
std::size_t standard_monomials(const MonomialIdeal& mi, std::uint64_t m) {
  std::size_t count = 0;
  for (const auto& u : enumerate_monomials(mi.n_vars(), m))
    if (!mi.contains(u)) ++count;
  return count;
}

TEST(Buchberger, TwistedCubicReducedBasis) {
  const IdealSpec c = load_fixture("twisted_cubic.ideal");
  const GroebnerBasis gb = buchberger(c);
  EXPECT_EQ(gb.elements, polys(c.ring_ptr(), {"y^2 - x*z", "y*z - x*w", "z^2 - y*w"}));
  EXPECT_TRUE(is_reduced(gb));
  EXPECT_TRUE(is_groebner_basis(gb.elements, gb.order));
  for (const auto& g : c.generators()) EXPECT_TRUE(normal_form(g, gb.elements, gb.order).is_zero());
}

TEST(Buchberger, SmallExamples) {
  const auto r = testing::ring_xyz();
  const IdealSpec principal(r, polys(r, {"2*x^2 + y^2 - z^2"}));
  EXPECT_EQ(buchberger(principal).elements, polys(r, {"x^2 + 1/2*y^2 - 1/2*z^2"}));
  const IdealSpec xy(r, polys(r, {"x", "y"}));
  EXPECT_EQ(buchberger(xy).elements, polys(r, {"x", "y"}));
  // Oracle: sympy groebner(..., order='grevlex').
  const IdealSpec c1 = load_fixture("Ct_1.ideal");
  EXPECT_EQ(buchberger(c1).elements, polys(c1.ring_ptr(), {"x^2 + y*w - z^2", "y^2 - x*z"}));
}

TEST(Buchberger, OtherOrdersProduceGroebnerBases) {
  for (const auto order : {MonomialOrder::deglex, MonomialOrder::lex}) {
    for (const char* name : {"twisted_cubic.ideal", "C0.ideal", "quadric_ci.ideal"}) {
      const IdealSpec ideal = load_fixture(name);
      const GroebnerBasis gb = buchberger(ideal, order);
      EXPECT_TRUE(is_reduced(gb)) << name;
      EXPECT_TRUE(is_groebner_basis(gb.elements, order)) << name;
      for (const auto& g : ideal.generators()) EXPECT_TRUE(normal_form(g, gb.elements, order).is_zero());
    }
  }
}

TEST(Buchberger, BudgetGuard) {
  BuchbergerOptions tight;
  tight.max_reductions = 0;
  EXPECT_THROW(buchberger(load_fixture("twisted_cubic.ideal"), MonomialOrder::degrevlex, tight),
               GroebnerBudgetExceeded);
  // Coprime leading monomials need no reduction at all.
  EXPECT_NO_THROW(buchberger(load_fixture("C0.ideal"), MonomialOrder::degrevlex, tight));
}

TEST(SPolynomial, CancelsLeadingTerms) {
  const auto r = testing::ring_xyzw();
  const auto f = parse_polynomial("y^2 - x*z", r);
  const auto g = parse_polynomial("y*z - x*w", r);
  EXPECT_EQ(s_polynomial(f, g, MonomialOrder::degrevlex), parse_polynomial("-x*z^2 + x*y*w", r));
}

TEST(InitialIdeal, Examples) {
  const auto r = testing::ring_xyz();
  const IdealSpec xy(r, polys(r, {"x", "y"}));
  EXPECT_EQ(initial_ideal(buchberger(xy)), MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 1, 0})}));
  const IdealSpec cubic(r, polys(r, {"x^3 + y*z^2"}));
  EXPECT_EQ(initial_ideal(buchberger(cubic)), MonomialIdeal(3, {mono({3, 0, 0})}));
  EXPECT_EQ(initial_ideal(buchberger(load_fixture("twisted_cubic.ideal"))),
            MonomialIdeal(4, {mono({0, 2, 0, 0}), mono({0, 1, 1, 0}), mono({0, 0, 2, 0})}));
  const MonomialIdeal redundant(3, {mono({1, 0, 0}), mono({2, 1, 0}), mono({1, 0, 0})});
  EXPECT_EQ(redundant.generators().size(), 1u);
}

TEST(SeriesNumerator, Examples) {
  const HilbertSeriesNumerator empty = series_numerator(MonomialIdeal(3, {}));
  EXPECT_EQ(empty.coeffs, std::vector<Integer>{1});
  EXPECT_EQ(empty.expand(3), (std::vector<Integer>{1, 3, 6, 10}));

  const HilbertSeriesNumerator cube = series_numerator(MonomialIdeal(3, {mono({3, 0, 0})}));
  EXPECT_EQ(cube.coeffs, (std::vector<Integer>{1, 0, 0, -1}));
  for (std::int64_t m = 0; m <= 8; ++m)
    EXPECT_EQ(cube.coefficient(static_cast<std::uint64_t>(m)), binomial(m + 2, 2) - binomial(m - 1, 2));

  const HilbertSeriesNumerator line = series_numerator(MonomialIdeal(3, {mono({1, 0, 0}), mono({0, 1, 0})}));
  EXPECT_EQ(line.coeffs, (std::vector<Integer>{1, -2, 1}));
  EXPECT_EQ(line.expand(4), (std::vector<Integer>{1, 1, 1, 1, 1}));

  EXPECT_TRUE(series_numerator(MonomialIdeal(3, {mono({0, 0, 0})})).coeffs.empty());
}

TEST(SeriesNumerator, PropertyMatchesStandardMonomialCount) {
  RandomAlgebra gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    std::vector<Monomial> gens;
    const int k = gen.integer(0, 5);
    for (int i = 0; i < k; ++i) gens.push_back(gen.monomial(n, static_cast<unsigned>(gen.integer(1, 4))));
    const MonomialIdeal mi(n, gens);
    const auto series = series_numerator(mi).expand(7);
    for (std::uint64_t m = 0; m <= 7; ++m) ASSERT_EQ(series[m], standard_monomials(mi, m)) << "trial " << trial;
  }
}

TEST(HilbertPolynomial, Basics) {
  EXPECT_EQ(HilbertPolynomial::binomial(2, 2).to_string(), "1/2*m^2 + 3/2*m + 1");
  EXPECT_EQ(linear(3, 1).to_string(), "3*m + 1");
  EXPECT_EQ(linear(4, 0).to_string(), "4*m");
  EXPECT_EQ(linear(4, -2).to_string(), "4*m - 2");
  EXPECT_EQ(HilbertPolynomial().to_string(), "0");
  EXPECT_FALSE(HilbertPolynomial().degree().has_value());
  EXPECT_EQ(linear(3, 1)(std::int64_t{5}), 16);
}

TEST(HilbertPolynomial, CurveExamples) {
  EXPECT_EQ(hilbert_polynomial(load_fixture("E.ideal")).polynomial, linear(3, 0));
  EXPECT_EQ(hilbert_polynomial(load_fixture("twisted_cubic.ideal")).polynomial, linear(3, 1));
  for (const char* name : {"C0.ideal", "Ct_0.ideal", "Ct_1.ideal", "Ct_1_2.ideal", "Ct_m2.ideal", "quadric_ci.ideal"})
    EXPECT_EQ(hilbert_polynomial(load_fixture(name)).polynomial, linear(4, 0)) << name;
  EXPECT_EQ(hilbert_polynomial(load_fixture("L.ideal")).polynomial, linear(1, 1));
}

TEST(HilbertPolynomial, DimensionsAndDegenerateIdeals) {
  const auto zero = hilbert_polynomial(load_fixture("zero.ideal"));
  EXPECT_EQ(zero.affine_dimension, 4u);
  EXPECT_EQ(zero.polynomial, HilbertPolynomial::binomial(3, 3));

  const auto r = testing::ring_xyzw();
  const auto point = hilbert_polynomial(IdealSpec(r, polys(r, {"y", "z", "w"})));
  EXPECT_EQ(point.polynomial, HilbertPolynomial({Rational(1)}));
  EXPECT_EQ(point.affine_dimension, 1u);

  const auto fat = hilbert_polynomial(IdealSpec(r, polys(r, {"y^2", "z", "w"})));
  EXPECT_EQ(fat.polynomial, HilbertPolynomial({Rational(2)}));
  EXPECT_EQ(fat.stabilization_from, 1u);

  // The irrelevant ideal has no projective points but a nonzero quotient.
  const auto irrelevant = hilbert_polynomial(IdealSpec(r, polys(r, {"x", "y", "z", "w"})));
  EXPECT_TRUE(irrelevant.polynomial.is_zero());

  EXPECT_THROW(hilbert_polynomial(IdealSpec(r, polys(r, {"3"}))), EmptyProjectiveSet);
  EXPECT_THROW(hilbert_polynomial(IdealSpec(r, polys(r, {"x^2 - y^2", "x - y", "1"}))), EmptyProjectiveSet);
}

TEST(HilbertPolynomial, PrincipalPlaneCurves) {
  const auto r = testing::ring_xyz();
  RandomAlgebra gen(41);
  for (unsigned d = 1; d <= 6; ++d) {
    const IdealSpec ideal(r, {gen.homogeneous(r, d, 5)});
    const auto d64 = static_cast<std::int64_t>(d);
    EXPECT_EQ(hilbert_polynomial(ideal).polynomial, linear(d64, 1 - (d64 - 1) * (d64 - 2) / 2)) << "d=" << d;
  }
}

TEST(HilbertPolynomial, AgreesWithRankPathOnFixtures) {
  for (const auto& name : testing::all_fixture_names()) {
    const IdealSpec ideal = load_fixture(name);
    const auto result = hilbert_polynomial(ideal);
    const auto expanded = result.numerator.expand(12);
    const auto table = hilbert_function_table(ideal, std::max<std::uint64_t>(12, result.stabilization_from + 5));
    for (std::uint64_t m = 0; m <= 12; ++m) EXPECT_EQ(expanded[m], table.values.at(m)) << name << " m=" << m;
    for (std::uint64_t m = result.stabilization_from; m <= result.stabilization_from + 5; ++m)
      EXPECT_EQ(result.polynomial(static_cast<std::int64_t>(m)), table.values.at(m)) << name << " m=" << m;
  }
}

TEST(HilbertPolynomial, ThresholdIsSharpForPlaneCurves) {
  // H(m) = C(m+2,2) for m < d while P(m) differs at m = d - 2 once d >= 3.
  const auto result = hilbert_polynomial(load_fixture("plane_quintic.ideal"));
  EXPECT_EQ(result.stabilization_from, 3u);
  EXPECT_NE(result.polynomial(std::int64_t{2}), result.numerator.coefficient(2));
}

TEST(HilbertPolynomial, PropertyGeneratorReorderInvariance) {
  RandomAlgebra gen(51);
  const std::vector<std::string> names = testing::all_fixture_names();
  for (int trial = 0; trial < 200; ++trial) {
    const IdealSpec base = load_fixture(names[static_cast<std::size_t>(trial) % names.size()]);
    const RingPtr r = base.ring_ptr();
    std::vector<Polynomial> gens = base.generators();
    if (trial % 3 == 0) gens.push_back(gen.homogeneous(r, static_cast<unsigned>(gen.integer(2, 3)), 3));
    const IdealSpec ideal(r, gens);
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
    for (auto& g : shuffled) g = g.scaled(gen.rational(4, true));
    const IdealSpec reordered(r, shuffled);
    const auto a = hilbert_polynomial(ideal);
    const auto b = hilbert_polynomial(reordered);
    ASSERT_EQ(a.polynomial, b.polynomial) << "trial " << trial;
    ASSERT_EQ(a.numerator, b.numerator) << "trial " << trial;
  }
}

}  // namespace
}  // namespace halphen
