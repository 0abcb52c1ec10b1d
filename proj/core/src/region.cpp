#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>

#include "halphen/classifier.hpp"

namespace halphen {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* color(RegionCategory c) {
  switch (c) {
    case RegionCategory::gp_region: return "#1f77b4";
    case RegionCategory::quadric: return "#2ca02c";
    case RegionCategory::plane_only: return "#d62728";
    case RegionCategory::nonexistent: return "#c7c7c7";
  }
  return "#000000";
}

}  // namespace

std::string region_csv(const std::vector<RegionRow>& rows) {
  std::string out = "d,g,exists_plane,exists_on_quadric,exists_off_quadric,exists_any,category\n";
  for (const auto& r : rows) {
    out += std::to_string(r.d) + ',' + std::to_string(r.g) + ',' + bool_str(r.verdict.exists_plane) +
           ',' + bool_str(r.verdict.exists_on_quadric) + ',' +
           bool_str(r.verdict.exists_off_quadric) + ',' + bool_str(r.verdict.exists_any) + ',' +
           std::string(to_string(r.category)) + '\n';
  }
  return out;
}

std::string region_svg(const std::vector<RegionRow>& rows) {
  constexpr double width = 720, height = 540;
  constexpr double left = 60, right = 170, top = 30, bottom = 50;
  std::int64_t d_max = 1, g_max = 1;
  for (const auto& r : rows) {
    d_max = std::max(d_max, r.d);
    g_max = std::max(g_max, r.g);
  }
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  auto sx = [&](double d) { return left + d / static_cast<double>(d_max + 1) * plot_w; };
  auto sy = [&](double g) { return top + plot_h - g / static_cast<double>(g_max + 1) * plot_h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + ' ' + fixed(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<title>Smooth curves of degree d and genus g in P3</title>\n";

  // Axes.
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + fixed(left) + "\" y1=\"" + fixed(top + plot_h) + "\" x2=\"" +
         fixed(left + plot_w) + "\" y2=\"" + fixed(top + plot_h) + "\"/>\n";
  out += "<line x1=\"" + fixed(left) + "\" y1=\"" + fixed(top) + "\" x2=\"" + fixed(left) +
         "\" y2=\"" + fixed(top + plot_h) + "\"/>\n";
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  const std::int64_t d_step = std::max<std::int64_t>(1, d_max / 10);
  for (std::int64_t d = 0; d <= d_max; d += d_step)
    out += "<text x=\"" + fixed(sx(static_cast<double>(d))) + "\" y=\"" +
           fixed(top + plot_h + 16) + "\">" + std::to_string(d) + "</text>\n";
  const std::int64_t g_step = std::max<std::int64_t>(1, g_max / 10);
  for (std::int64_t g = 0; g <= g_max; g += g_step)
    out += "<text x=\"" + fixed(left - 14) + "\" y=\"" + fixed(sy(static_cast<double>(g)) + 4) +
           "\">" + std::to_string(g) + "</text>\n";
  out += "<text x=\"" + fixed(left + plot_w / 2) + "\" y=\"" + fixed(height - 12) +
         "\">degree d</text>\n";
  out += "<text x=\"16\" y=\"" + fixed(top + plot_h / 2) + "\" transform=\"rotate(-90 16 " +
         fixed(top + plot_h / 2) + ")\">genus g</text>\n";
  out += "</g>\n";

  // Boundary parabolas, sampled on [1, d_max].
  struct Curve {
    const char* name;
    const char* stroke;
    std::function<double(double)> g_of_d;
  };
  const Curve curves[] = {
      {"plane (d-1)(d-2)/2", "#d62728", [](double d) { return (d - 1) * (d - 2) / 2; }},
      {"Castelnuovo", "#2ca02c", [](double d) { return d * d / 4 - d + 1; }},
      {"Gruson-Peskine", "#1f77b4", [](double d) { return d * d / 6 - d / 2 + 1; }},
  };
  for (const auto& c : curves) {
    out += "<polyline fill=\"none\" stroke=\"" + std::string(c.stroke) +
           "\" stroke-width=\"1.5\" points=\"";
    const int samples = static_cast<int>(d_max - 1) * 10;
    for (int k = 0; k <= samples; ++k) {
      const double d = 1 + k / 10.0;
      if (k) out += ' ';
      out += fixed(sx(d)) + ',' + fixed(sy(std::max(0.0, c.g_of_d(d))));
    }
    out += "\"/>\n";
  }

  out += "<g stroke=\"none\">\n";
  for (const auto& r : rows)
    out += "<circle cx=\"" + fixed(sx(static_cast<double>(r.d))) + "\" cy=\"" +
           fixed(sy(static_cast<double>(r.g))) + "\" r=\"3\" fill=\"" + color(r.category) +
           "\"><title>(" + std::to_string(r.d) + ", " + std::to_string(r.g) + ") " +
           std::string(to_string(r.category)) + "</title></circle>\n";
  out += "</g>\n";

  // Legend.
  const RegionCategory legend[] = {RegionCategory::gp_region, RegionCategory::quadric,
                                   RegionCategory::plane_only, RegionCategory::nonexistent};
  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  double y = top + 10;
  const double lx = left + plot_w + 20;
  for (auto c : legend) {
    out += "<circle cx=\"" + fixed(lx) + "\" cy=\"" + fixed(y) + "\" r=\"4\" fill=\"" + color(c) +
           "\"/>\n";
    out += "<text x=\"" + fixed(lx + 10) + "\" y=\"" + fixed(y + 4) + "\">" +
           std::string(to_string(c)) + "</text>\n";
    y += 18;
  }
  for (const auto& c : curves) {
    out += "<line x1=\"" + fixed(lx - 6) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(lx + 4) +
           "\" y2=\"" + fixed(y) + "\" stroke=\"" + c.stroke + "\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + fixed(lx + 10) + "\" y=\"" + fixed(y + 4) + "\">" + c.name +
           "</text>\n";
    y += 18;
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace halphen
