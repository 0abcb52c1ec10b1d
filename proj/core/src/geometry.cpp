#include "halphen/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "halphen/errors.hpp"
#include "halphen/exact_rank.hpp"
#include "halphen/parser.hpp"

namespace halphen {

namespace {

void check_dimension(const IdealSpec& ideal, const ProjectivePoint& p) {
  if (p.size() != ideal.n_vars())
    throw std::invalid_argument("point has " + std::to_string(p.size()) +
                                " coordinates but the ring has " +
                                std::to_string(ideal.n_vars()) + " variables");
}

std::vector<Rational> normalize_first_nonzero(std::span<const Rational> v) {
  std::vector<Rational> out(v.begin(), v.end());
  auto it = std::find_if(out.begin(), out.end(), [](const Rational& c) { return c != 0; });
  if (it == out.end()) return out;
  const Rational inv = 1 / *it;
  for (auto& c : out) c *= inv;
  return out;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; }))
    throw std::invalid_argument("a projective point needs a nonzero coordinate");
}

std::vector<Rational> ProjectivePoint::canonical() const { return normalize_first_nonzero(coords_); }

ProjectivePoint ProjectivePoint::scaled(const Rational& factor) const {
  if (factor == 0) throw std::invalid_argument("cannot scale a projective point by zero");
  std::vector<Rational> out = coords_;
  for (auto& c : out) c *= factor;
  return ProjectivePoint(std::move(out));
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.size() == b.size() && a.canonical() == b.canonical();
}

Rational TangentLine::evaluate(std::span<const Rational> point) const {
  if (point.size() != coefficients.size()) throw std::invalid_argument("tangent line: size mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < point.size(); ++i) sum += coefficients[i] * point[i];
  return sum;
}

std::string TangentLine::to_string(const Ring& ring) const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += halphen::to_string(magnitude) + '*';
    out += ring.name(i);
  }
  return out + " = 0";
}

bool on_variety(const IdealSpec& ideal, const ProjectivePoint& p) {
  check_dimension(ideal, p);
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& f) { return f.evaluate(p.coords()) == 0; });
}

RationalMatrix jacobian_at(const IdealSpec& ideal, const ProjectivePoint& p) {
  check_dimension(ideal, p);
  RationalMatrix jac;
  for (const auto& f : ideal.generators()) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < ideal.n_vars(); ++j)
      row.push_back(f.partial_derivative(j).evaluate(p.coords()));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::size_t jacobian_rank_at(const IdealSpec& ideal, const ProjectivePoint& p) {
  if (!on_variety(ideal, p))
    throw NotOnVariety("point " + format_point(p.coords()) + " is not on the variety");
  return rank_bareiss(jacobian_at(ideal, p));
}

bool is_smooth_at(const IdealSpec& ideal, const ProjectivePoint& p, std::size_t curve_codim) {
  return jacobian_rank_at(ideal, p) == curve_codim;
}

TangentLine tangent_line(const Polynomial& f, const ProjectivePoint& p) {
  const std::size_t n = f.ring().size();
  if (n < 2) throw std::invalid_argument("tangent_line needs at least two variables");
  if (!f.is_homogeneous() || f.is_zero())
    throw std::invalid_argument("tangent_line expects a nonzero homogeneous polynomial");
  if (p.size() != n) throw std::invalid_argument("point dimension does not match the ring");
  if (f.evaluate(p.coords()) != 0)
    throw NotOnVariety("point " + format_point(p.coords()) + " is not on the curve");
  std::vector<Rational> gradient;
  for (std::size_t j = 0; j < n; ++j) gradient.push_back(f.partial_derivative(j).evaluate(p.coords()));
  if (std::all_of(gradient.begin(), gradient.end(), [](const Rational& c) { return c == 0; }))
    throw SingularPoint("gradient vanishes at " + format_point(p.coords()) +
                        "; the tangent line is undefined");
  return TangentLine{normalize_first_nonzero(gradient)};
}

}  // namespace halphen
