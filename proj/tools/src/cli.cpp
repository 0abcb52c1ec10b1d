#include "halphen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "halphen/classifier.hpp"
#include "halphen/errors.hpp"
#include "halphen/geometry.hpp"
#include "halphen/graded_dim.hpp"
#include "halphen/hilbert_polynomial.hpp"
#include "halphen/invariants.hpp"
#include "halphen/parser.hpp"
#include "json_output.hpp"

namespace halphen::cli {
namespace {

struct IdealInput {
  std::string path;
  std::vector<std::string> params;  // NAME=VALUE
};

void add_ideal_options(CLI::App& cmd, IdealInput& in) {
  cmd.add_option("--ideal", in.path, "ideal file")->required();
  cmd.add_option("--param", in.params, "substitute NAME=VALUE in the file before parsing")->take_all();
}

IdealSpec load(const IdealInput& in) {
  if (in.params.empty()) return load_ideal_file(in.path);
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw Error("cannot open " + in.path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  std::string text = buffer.str();
  for (const auto& param : in.params) {
    const auto eq = param.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == param.size())
      throw CLI::ValidationError("--param", "expected NAME=VALUE, got '" + param + "'");
    text = substitute_parameter(text, param.substr(0, eq), param.substr(eq + 1));
  }
  try {
    return parse_ideal_file(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), in.path);
  }
}

void write(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::optional<HilbertPolynomialResult> try_polynomial(const IdealSpec& ideal) {
  try {
    return hilbert_polynomial(ideal);
  } catch (const EmptyProjectiveSet&) {
    return std::nullopt;
  }
}

struct HilbertArgs {
  IdealInput input;
  std::optional<std::uint64_t> max_degree;
  std::string format = "csv";
  std::string engine = "sparse";
  unsigned threads = 0;
};

void run_hilbert(const HilbertArgs& a, std::ostream& out) {
  const IdealSpec ideal = load(a.input);
  const auto poly = try_polynomial(ideal);
  std::uint64_t m_max = 6;
  if (a.max_degree)
    m_max = *a.max_degree;
  else if (poly)
    m_max = std::max<std::uint64_t>(6, poly->stabilization_from + 2);

  GradedDimOptions opts;
  opts.threads = a.threads;
  opts.engine = a.engine == "dense" ? RankEngine::dense_bareiss
                : a.engine == "modular" ? RankEngine::modular
                                        : RankEngine::sparse_exact;
  const HilbertFunctionTable table = hilbert_function_table(ideal, m_max, opts);

  if (a.format == "csv") {
    out << "m,h\n";
    for (const auto& [m, h] : table.values) out << m << ',' << h << '\n';
    return;
  }
  Json j = document("hilbert");
  j["ideal"] = to_json(ideal);
  j["engine"] = a.engine;
  j["max_degree"] = m_max;
  j["values"] = table.as_vector();
  j["hilbert_polynomial"] = poly ? to_json(poly->polynomial) : Json(nullptr);
  j["stabilization_from"] = poly ? Json(poly->stabilization_from) : Json(nullptr);
  write(out, j);
}

void run_invariants(const IdealInput& input, std::ostream& out) {
  const IdealSpec ideal = load(input);
  const HilbertPolynomialResult result = hilbert_polynomial(ideal);
  const ProjectiveInvariants inv = invariants_of(result.polynomial);
  Json j = document("invariants");
  j["ideal"] = to_json(ideal);
  j["hilbert_polynomial"] = to_json(result.polynomial);
  j["stabilization_from"] = result.stabilization_from;
  j["series_numerator"] = to_json(result.numerator);
  j.update(to_json(inv));
  write(out, j);
}

struct ClassifyArgs {
  std::int64_t d = 0;
  std::int64_t g = 0;
  bool json = false;
  bool text = false;
};

void run_classify(const ClassifyArgs& a, std::ostream& out) {
  const Verdict v = classify(a.d, a.g);
  if (a.text) {
    out << "(d, g) = (" << v.d << ", " << v.g << "): " << (v.exists_any ? "exists" : "does not exist") << " ["
        << to_string(v.category()) << "]\n";
    return;
  }
  Json j = document("classify");
  j.update(to_json(v));
  write(out, j);
}

struct RegionArgs {
  std::int64_t d_max = 0;
  std::string format = "csv";
};

void run_region(const RegionArgs& a, std::ostream& out) {
  const auto rows = region_table(a.d_max);
  out << (a.format == "svg" ? region_svg(rows) : region_csv(rows));
}

struct SmoothArgs {
  IdealInput input;
  std::string point;
  std::optional<std::size_t> codim;
};

void run_smooth_at(const SmoothArgs& a, std::ostream& out) {
  const IdealSpec ideal = load(a.input);
  const ProjectivePoint p(parse_point(a.point));
  if (p.size() != ideal.n_vars())
    throw std::invalid_argument("point " + a.point + " has " + std::to_string(p.size()) + " coordinates, ring has " +
                                std::to_string(ideal.n_vars()));
  std::size_t codim = 0;
  if (a.codim) {
    codim = *a.codim;
  } else {
    const ProjectiveInvariants inv = invariants_of(hilbert_polynomial(ideal).polynomial);
    codim = ideal.n_vars() - 1 - inv.dimension;
  }
  const std::size_t rank = jacobian_rank_at(ideal, p);
  Json j = document("smooth-at");
  j["ideal"] = to_json(ideal);
  j["point"] = format_point(p.coords());
  j["on_variety"] = true;
  j["codim"] = codim;
  j["jacobian_rank"] = rank;
  j["smooth"] = rank == codim;
  write(out, j);
}

struct TangentArgs {
  std::string poly;
  std::string point;
  std::vector<std::string> ring;
};

void run_tangent(const TangentArgs& a, std::ostream& out) {
  const std::vector<Rational> coords = parse_point(a.point);
  std::vector<std::string> names = a.ring;
  if (names.empty()) {
    if (coords.size() == 3)
      names = {"x", "y", "z"};
    else if (coords.size() == 4)
      names = {"x", "y", "z", "w"};
    else
      for (std::size_t i = 0; i < coords.size(); ++i) names.push_back("x" + std::to_string(i));
  }
  const RingPtr ring = make_ring(names);
  const Polynomial f = parse_polynomial(a.poly, ring);
  const ProjectivePoint p(coords);
  const TangentLine line = tangent_line(f, p);
  Json j = document("tangent");
  j["ring"] = names;
  j["polynomial"] = format_polynomial(f);
  j["point"] = format_point(p.coords());
  j["coefficients"] = rational_array(line.coefficients);
  j["line"] = line.to_string(*ring);
  write(out, j);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert functions, curve invariants and the (d, g) classification in P^3", "halphen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "halphen 0.1.0");

  HilbertArgs hilbert;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function H(0..M) by graded ranks");
  add_ideal_options(*hilbert_cmd, hilbert.input);
  hilbert_cmd->add_option("--max-degree", hilbert.max_degree, "largest m (default max(6, m0 + 2))");
  hilbert_cmd->add_option("--format", hilbert.format)->check(CLI::IsMember({"csv", "json"}));
  hilbert_cmd->add_option("--engine", hilbert.engine)->check(CLI::IsMember({"sparse", "dense", "modular"}));
  hilbert_cmd->add_option("--threads", hilbert.threads, "worker threads (default HALPHEN_THREADS or hardware)");

  IdealInput invariants;
  auto* invariants_cmd = app.add_subcommand("invariants", "Hilbert polynomial, threshold, dimension, degree, genus");
  add_ideal_options(*invariants_cmd, invariants);

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "existence of a smooth curve of degree D and genus G in P^3");
  classify_cmd->add_option("D", cls.d)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}));
  classify_cmd->add_option("G", cls.g)->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{1'000'000'000'000}));
  auto* json_flag = classify_cmd->add_flag("--json", cls.json, "JSON verdict (default)");
  classify_cmd->add_flag("--text", cls.text, "one-line summary")->excludes(json_flag);

  RegionArgs region;
  auto* region_cmd = app.add_subcommand("region", "classification table for 1 <= d <= N");
  region_cmd->add_option("--dmax", region.d_max)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{200}));
  region_cmd->add_option("--format", region.format)->check(CLI::IsMember({"csv", "svg"}));

  SmoothArgs smooth;
  auto* smooth_cmd = app.add_subcommand("smooth-at", "Jacobian criterion at one point");
  add_ideal_options(*smooth_cmd, smooth.input);
  smooth_cmd->add_option("--point", smooth.point, "homogeneous coordinates, e.g. 1:0:0:0")->required();
  smooth_cmd->add_option("--codim", smooth.codim, "codimension (default from the Hilbert polynomial)");

  TangentArgs tangent;
  auto* tangent_cmd = app.add_subcommand("tangent", "tangent line of a plane curve at a smooth point");
  tangent_cmd->add_option("--poly", tangent.poly, "homogeneous polynomial")->required();
  tangent_cmd->add_option("--point", tangent.point, "point on the curve, e.g. 0:1:0")->required();
  tangent_cmd->add_option("--ring", tangent.ring, "variable names (default x y z, or x y z w)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "halphen 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "halphen: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*hilbert_cmd)
      run_hilbert(hilbert, out);
    else if (*invariants_cmd)
      run_invariants(invariants, out);
    else if (*classify_cmd)
      run_classify(cls, out);
    else if (*region_cmd)
      run_region(region, out);
    else if (*smooth_cmd)
      run_smooth_at(smooth, out);
    else if (*tangent_cmd)
      run_tangent(tangent, out);
  } catch (const CLI::ValidationError& e) {
    err << "halphen: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "halphen: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "halphen: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace halphen::cli
