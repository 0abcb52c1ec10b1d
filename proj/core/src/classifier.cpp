#include "halphen/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace halphen {

namespace {

void require_degree(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
}

}  // namespace

std::string_view to_string(RegionCategory category) {
  switch (category) {
    case RegionCategory::gp_region: return "gp-region";
    case RegionCategory::quadric: return "quadric";
    case RegionCategory::plane_only: return "plane-only";
    case RegionCategory::nonexistent: return "nonexistent";
  }
  return "unknown";
}

RegionCategory Verdict::category() const {
  if (exists_off_quadric) return RegionCategory::gp_region;
  if (exists_on_quadric) return RegionCategory::quadric;
  if (exists_plane) return RegionCategory::plane_only;
  return RegionCategory::nonexistent;
}

std::int64_t plane_bound(std::int64_t d) {
  require_degree(d);
  return (d - 1) * (d - 2) / 2;
}

std::int64_t castelnuovo_bound(std::int64_t d) {
  require_degree(d);
  if (d % 2 == 0) return d * d / 4 - d + 1;
  return (d * d - 1) / 4 - d + 1;
}

Rational gruson_peskine_bound(std::int64_t d) {
  require_degree(d);
  Rational b = Rational(Integer(d * d), Integer(6)) - Rational(Integer(d), Integer(2)) + 1;
  b.canonicalize();
  return b;
}

std::vector<std::int64_t> quadric_genera(std::int64_t d) {
  require_degree(d);
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; 2 * a <= d; ++a) out.push_back((a - 1) * (d - a - 1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict classify(std::int64_t d, std::int64_t g) {
  require_degree(d);
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  Verdict v;
  v.d = d;
  v.g = g;
  v.bounds = {plane_bound(d), castelnuovo_bound(d), gruson_peskine_bound(d)};
  v.exists_plane = g == v.bounds.plane_bound;
  const auto genera = quadric_genera(d);
  v.exists_on_quadric = std::binary_search(genera.begin(), genera.end(), g);
  // Exact comparison; flooring the bound would give the same answer.
  v.exists_off_quadric = Rational(g) <= v.bounds.gruson_peskine_bound;
  v.exists_any = v.exists_plane || v.exists_on_quadric || v.exists_off_quadric;
  return v;
}

bool castelnuovo_inequality_check(std::int64_t d, std::int64_t g, std::int64_t m) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("castelnuovo_inequality_check: d must be odd and at least 3");
  const std::int64_t r = (d - 1) / 2;
  if (m < r) throw std::invalid_argument("castelnuovo_inequality_check: m must be at least r");
  return m * d - g + 1 >= r * (r + 2) + (m - r) * d + 1;
}

std::vector<RegionRow> region_table(std::int64_t d_max) {
  require_degree(d_max);
  std::vector<RegionRow> rows;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    for (std::int64_t g = 0; g <= plane_bound(d); ++g) {
      Verdict v = classify(d, g);
      const RegionCategory c = v.category();
      rows.push_back({d, g, std::move(v), c});
    }
  }
  return rows;
}

}  // namespace halphen
