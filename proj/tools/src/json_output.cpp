#include "json_output.hpp"

#include "halphen/cli.hpp"
#include "halphen/parser.hpp"

namespace halphen::cli {

Json document(std::string_view command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json to_json(const IdealSpec& ideal) {
  Json j;
  j["label"] = ideal.label() ? Json(*ideal.label()) : Json(nullptr);
  j["ring"] = Json::array();
  for (const auto& v : ideal.ring().variables()) j["ring"].push_back(v);
  j["generators"] = Json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(format_polynomial(g));
  return j;
}

Json rational_array(std::span<const Rational> values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

Json to_json(const HilbertPolynomial& p) {
  Json j;
  j["text"] = p.to_string("m");
  j["coefficients"] = rational_array(p.coefficients());
  return j;
}

Json to_json(const HilbertSeriesNumerator& n) {
  Json a = Json::array();
  for (const auto& c : n.coeffs) {
    if (c.fits_slong_p())
      a.push_back(c.get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}

Json to_json(const ProjectiveInvariants& inv) {
  Json j;
  j["dimension"] = inv.dimension;
  j["degree"] = inv.degree;
  j["genus"] = inv.genus ? Json(*inv.genus) : Json(nullptr);
  j["degree_is_extension"] = inv.degree_is_extension;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["d"] = v.d;
  j["g"] = v.g;
  j["exists_plane"] = v.exists_plane;
  j["exists_on_quadric"] = v.exists_on_quadric;
  j["exists_off_quadric"] = v.exists_off_quadric;
  j["exists_any"] = v.exists_any;
  j["category"] = to_string(v.category());
  j["bounds"] = {{"plane", v.bounds.plane_bound},
                 {"castelnuovo", v.bounds.castelnuovo_bound},
                 {"gruson_peskine", to_string(v.bounds.gruson_peskine_bound)}};
  j["quadric_genera"] = quadric_genera(v.d);
  return j;
}

}  // namespace halphen::cli
