#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "halphen/rational.hpp"

namespace halphen {

/// Genus bounds for smooth curves of degree d in P^3.
struct GenusBounds {
  std::int64_t plane_bound = 0;        ///< (d-1)(d-2)/2, every curve
  std::int64_t castelnuovo_bound = 0;  ///< curves not in a plane
  Rational gruson_peskine_bound;       ///< d^2/6 - d/2 + 1, curves on no quadric
};

enum class RegionCategory { gp_region, quadric, plane_only, nonexistent };

std::string_view to_string(RegionCategory category);

/// Whether a smooth curve of degree d and genus g exists in P^3, split by
/// regime: in a plane, on a smooth quadric, on no quadric.
struct Verdict {
  std::int64_t d = 0;
  std::int64_t g = 0;
  bool exists_plane = false;
  bool exists_on_quadric = false;
  bool exists_off_quadric = false;
  bool exists_any = false;
  GenusBounds bounds;

  /// First matching regime in the order GP region, quadric, plane.
  RegionCategory category() const;
};

std::int64_t plane_bound(std::int64_t d);
/// d^2/4 - d + 1 for even d, (d^2 - 1)/4 - d + 1 for odd d.
std::int64_t castelnuovo_bound(std::int64_t d);
Rational gruson_peskine_bound(std::int64_t d);
/// {(a-1)(b-1) : a + b = d, 1 <= a <= b}, ascending, no duplicates. Empty
/// for d = 1, which lies on no smooth quadric as a bidegree class.
std::vector<std::int64_t> quadric_genera(std::int64_t d);

/// Requires d >= 1 and g >= 0 (std::invalid_argument otherwise).
Verdict classify(std::int64_t d, std::int64_t g);

/// m*d - g + 1 >= r(r+2) + (m-r)*d + 1 with d = 2r + 1, m >= r.
bool castelnuovo_inequality_check(std::int64_t d, std::int64_t g, std::int64_t m);

struct RegionRow {
  std::int64_t d = 0;
  std::int64_t g = 0;
  Verdict verdict;
  RegionCategory category = RegionCategory::nonexistent;
};

/// One row for every 1 <= d <= d_max and 0 <= g <= plane_bound(d), ordered
/// by (d, g).
std::vector<RegionRow> region_table(std::int64_t d_max);

/// CSV with header d,g,exists_plane,exists_on_quadric,exists_off_quadric,exists_any,category.
std::string region_csv(const std::vector<RegionRow>& rows);

/// Static scatter chart of the rows with the plane, Castelnuovo and
/// Gruson-Peskine parabolas overlaid.
std::string region_svg(const std::vector<RegionRow>& rows);

}  // namespace halphen
