#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "halphen/exact_rank.hpp"
#include "halphen/ideal.hpp"
#include "halphen/rational.hpp"

namespace halphen {

/// Homogeneous coordinates. The representative given is kept as-is;
/// equality is up to a nonzero scalar.
class ProjectivePoint {
 public:
  /// Throws std::invalid_argument if every coordinate is zero.
  explicit ProjectivePoint(std::vector<Rational> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Rational> coords() const noexcept { return coords_; }
  /// First nonzero coordinate scaled to 1.
  std::vector<Rational> canonical() const;
  ProjectivePoint scaled(const Rational& factor) const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<Rational> coords_;
};

/// Coefficients of a linear form; the first nonzero coefficient is 1.
struct TangentLine {
  std::vector<Rational> coefficients;

  Rational evaluate(std::span<const Rational> point) const;
  /// E.g. "x - z = 0".
  std::string to_string(const Ring& ring) const;

  friend bool operator==(const TangentLine&, const TangentLine&) = default;
};

bool on_variety(const IdealSpec& ideal, const ProjectivePoint& p);

/// The k x n matrix of partial derivatives of the generators at p.
RationalMatrix jacobian_at(const IdealSpec& ideal, const ProjectivePoint& p);

/// Throws NotOnVariety unless every generator vanishes at p.
std::size_t jacobian_rank_at(const IdealSpec& ideal, const ProjectivePoint& p);

/// Jacobian criterion with the caller's codimension (n - 1 - dim); only
/// this point is checked, never the whole variety.
bool is_smooth_at(const IdealSpec& ideal, const ProjectivePoint& p, std::size_t curve_codim);

/// Tangent line of a plane curve V(f) at p; with more variables, the tangent
/// hyperplane of the hypersurface. For homogeneous f the Euler
/// relation sum x_i df/dx_i = d*f makes the affine offsets vanish, so the
/// line is the gradient form itself. Throws SingularPoint if the gradient
/// vanishes and NotOnVariety if f(p) != 0.
TangentLine tangent_line(const Polynomial& f, const ProjectivePoint& p);

}  // namespace halphen
