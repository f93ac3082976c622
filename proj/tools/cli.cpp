#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyunion/constructions.hpp"
#include "polyunion/errors.hpp"
#include "polyunion/io.hpp"
#include "polyunion/verify.hpp"

namespace polyunion::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<std::size_t> dims;
  std::size_t trials = 20;
  std::uint64_t seed = 7;
  unsigned sigma_degree = 2;
  std::string delta = "1/2";
  std::string epsilon = "1/5";
  std::string rho = "5";
  std::string fP;
  std::string fQ;
  std::string workspace = ".";
  std::string csv;
  std::string format = "json";
  std::string input;
  std::string out_path;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file_atomic(path, text);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

Integer parse_count(const std::string& text, const std::string& name) {
  const std::optional<Rat> r = parse_rat(text);
  require(r && r->get_den() == 1 && sgn(*r) > 0, "--" + name + " must be a positive integer");
  return r->get_num();
}

// ---- build -------------------------------------------------------------------

struct Built {
  PolyFile file;
  std::size_t dim = 0;
  std::size_t vertices = 0;
  std::size_t facets = 0;
};

Built built_from(const Polytope& p, PolyFile file) {
  return {std::move(file), p.ambient_dim(), p.num_vertices(), p.num_facets()};
}

PerturbedPolar perturbed_for(std::size_t d, const Polytope& D, const ColoredHRep& colored) {
  return perturbed_polar(D, colored, centered_simplex_in_subspace(lemma4_subspace(D, d / 2)));
}

Built build_target(const std::string& target, const Options& o) {
  if (target == "cyclic") {
    require(o.d >= 1 && o.k >= o.d + 1 && o.k <= 64, "cyclic: need d >= 1 and d + 1 <= k <= 64");
    const Polytope p = cyclic_polytope(o.d, o.k);
    return built_from(p, to_polyfile(p.v));
  }
  if (target == "polar") {
    require(o.d >= 2 && o.k >= o.d + 1 && o.k <= 64, "polar: need d >= 2 and d + 1 <= k <= 64");
    const Polytope p = polar_cyclic(o.d, o.k);
    if (o.d % 2 == 0 && o.k == o.d * o.d) return built_from(p, to_polyfile(color_facets(p.h)));
    return built_from(p, to_polyfile(p.h));
  }
  if (target == "perturbed") {
    require(o.d == 2 || o.d == 4, "perturbed: d must be 2 or 4");
    const Polytope D = polar_cyclic(o.d, o.d * o.d);
    const ColoredHRep colored = color_facets(D.h);
    const PerturbedPolar pq = perturbed_for(o.d, D, colored);
    ColoredHRep qc = colored;
    qc.h = pq.Q.h;
    PolyFile f = to_polyfile(qc);
    attach_perturbation(f, pq.pert);
    return built_from(pq.Q, std::move(f));
  }
  if (target == "cayley") {
    require(o.d == 2 || o.d == 4, "cayley: d must be 2 or 4");
    const Polytope D = polar_cyclic(o.d, o.d * o.d);
    const PerturbedPolar pq = perturbed_for(o.d, D, color_facets(D.h));
    const VRep pts = cayley_points(D.v, pq.Q.v);
    PolyFile f = to_polyfile(pts);
    if (o.d == 2) {
      const Polytope c = cayley_embedding(D.v, pq.Q.v);
      return built_from(c, std::move(f));
    }
    // The d = 4 embedding is not hulled here; facets are reported as 0.
    return {std::move(f), o.d + 1, pts.points.size(), 0};
  }
  if (target == "cross") {
    require(o.d >= 1 && o.d <= 12, "cross: need 1 <= d <= 12");
    const CrossPolytopeFamily fam = cross_polytope_family(o.d);
    return built_from(fam.Q, to_polyfile(fam.Q.h));
  }
  if (target == "liftproject") {
    require(o.d == 3 || o.d == 5, "liftproject: d must be 3 or 5");
    const LiftProjectInstance inst = lift_project_instance(o.d);
    return built_from(inst.P, to_polyfile(inst.P.h));
  }
  throw InputError("unknown build target '" + target + "'");
}

int cmd_build(const std::string& target, const Options& o, std::ostream& out) {
  require(!o.out_path.empty(), "build: -o/--output is required");
  const Built b = build_target(target, o);
  write_file_atomic(o.out_path, format_polyfile(b.file));
  out << target << ": dim " << b.dim << ", " << b.vertices << " vertices, " << b.facets << " facets -> "
      << o.out_path << "\n";
  return kPass;
}

// ---- verify ------------------------------------------------------------------

CheckReport verify_suite(const std::string& suite, const Options& o) {
  if (suite == "balas") {
    std::vector<std::size_t> dims = o.dims;
    if (o.d != 0) dims = {o.d};
    if (dims.empty()) dims = {1, 2, 3};
    for (std::size_t d : dims) require(d >= 1 && d <= 4, "balas: dimensions must lie in 1..4");
    require(o.trials >= 1 && o.trials <= 1000, "balas: trials must lie in 1..1000");
    return balas_report(dims, o.trials, o.seed);
  }
  if (suite == "bigm") {
    const Rat rho = parse_rat_or_throw(o.rho);
    require(rho >= 1, "bigm: rho must be >= 1");
    return bigm_report(rho);
  }
  if (suite == "construction") {
    require(o.d == 2 || o.d == 4 || o.d == 6, "construction: d must be 2, 4 or 6");
    require(o.sigma_degree >= 1, "construction: sigma-degree must be positive");
    return construction_report(o.d, o.sigma_degree);
  }
  if (suite == "approx") {
    require(o.d >= 1 && o.d <= 12, "approx: need 1 <= d <= 12");
    return approx_report(o.d, parse_rat_or_throw(o.delta), parse_rat_or_throw(o.epsilon));
  }
  if (suite == "liftproject") {
    require(o.d == 3 || o.d == 5, "liftproject: d must be 3 or 5");
    require(o.sigma_degree >= 1, "liftproject: sigma-degree must be positive");
    return lift_project_report(o.d, o.sigma_degree);
  }
  if (suite == "census") return census_report();
  throw InputError("unknown verify suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, const Options& o, std::ostream& out) {
  const CheckReport rep = verify_suite(suite, o);
  emit(rep.to_json().dump(2) + "\n", o.out_path, out);
  return rep.pass ? kPass : kFailure;
}

// ---- report ------------------------------------------------------------------

nlohmann::json workspace_summary(const fs::path& dir, std::vector<nlohmann::json>* construction_rows) {
  require(fs::is_directory(dir), "summary: '" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  nlohmann::json items = nlohmann::json::array();
  for (const fs::path& f : files) {
    const std::string ext = f.extension().string();
    if (ext == ".poly") {
      nlohmann::json item = {{"file", f.filename().string()}};
      try {
        const PolyFile pf = parse_polyfile(read_file(f));
        item["kind"] = std::string(1, pf.kind);
        item["dim"] = pf.dim;
        item["rows"] = pf.rows.size();
      } catch (const InputError& e) {
        item["error"] = e.what();
      }
      items.push_back(std::move(item));
    } else if (ext == ".json") {
      nlohmann::json item = {{"file", f.filename().string()}};
      const nlohmann::json j = nlohmann::json::parse(read_file(f), nullptr, false);
      if (!j.is_discarded() && validate_report(j).empty()) {
        item["check"] = j["check"];
        item["pass"] = j["pass"];
        if (construction_rows && j["check"] == "construction") construction_rows->push_back(j);
      } else if (!j.is_discarded() && j.contains("kind")) {
        item["kind"] = j["kind"];
      } else {
        item["error"] = "not a report or polytope";
      }
      items.push_back(std::move(item));
    }
  }
  return items;
}

std::string construction_csv(const std::vector<nlohmann::json>& reports) {
  std::string csv = "d,colorful_tuples,colorful_facets,facets_P0,facets_P1\n";
  auto field = [](const nlohmann::json& c, const char* key) {
    return c.contains(key) ? c[key].dump() : std::string();
  };
  for (const nlohmann::json& r : reports) {
    const nlohmann::json& c = r["counts"];
    csv += r["params"]["d"].dump() + "," + field(c, "colorful_tuples") + "," + field(c, "colorful_facets") + "," +
           field(c, "facets_P0") + "," + field(c, "facets_P1") + "\n";
  }
  return csv;
}

int cmd_report(const std::string& kind, const Options& o, std::ostream& out) {
  if (kind == "bound") {
    require(!o.fP.empty() && !o.fQ.empty(), "bound: --fP and --fQ are required");
    const BoundReport b = min_additional_vars_bound(parse_count(o.fP, "fP"), parse_count(o.fQ, "fQ"));
    const nlohmann::json j = {
        {"fP", b.fP.get_str()}, {"fQ", b.fQ.get_str()}, {"min_m", b.min_m}, {"detail", b.detail}};
    emit(j.dump(2) + "\n", o.out_path, out);
    return kPass;
  }
  if (kind == "summary") {
    std::vector<nlohmann::json> rows;
    const nlohmann::json items = workspace_summary(o.workspace, &rows);
    emit(items.dump(2) + "\n", o.out_path, out);
    if (!o.csv.empty()) write_file_atomic(o.csv, construction_csv(rows));
    return kPass;
  }
  throw InputError("unknown report kind '" + kind + "'");
}

// ---- convert -----------------------------------------------------------------

int cmd_convert(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  PolyFile file;
  if (first != std::string::npos && text[first] == '{') {
    const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), "convert: malformed JSON in " + o.input);
    file = polyfile_from_json(j);
  } else {
    file = parse_polyfile(text);
  }
  if (o.format == "json") emit(polyfile_to_json(file).dump(2) + "\n", o.out_path, out);
  else emit(format_polyfile(file), o.out_path, out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact polyhedral constructions and checks for unions of polytopes", "polyunion"};
  app.require_subcommand(1);

  std::string target;
  auto* build = app.add_subcommand("build", "Build a polytope and write it in the text format");
  build->add_option("target", target, "cyclic | polar | perturbed | cayley | cross | liftproject")->required();
  build->add_option("--d", o.d, "Dimension");
  build->add_option("--k", o.k, "Number of points (cyclic, polar)");
  build->add_option("-o,--output", o.out_path, "Output file");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  verify->add_option("suite", suite, "balas | bigm | construction | approx | liftproject | census")->required();
  verify->add_option("--d", o.d, "Dimension");
  verify->add_option("--dims", o.dims, "Dimensions for balas, comma separated")->delimiter(',');
  verify->add_option("--trials", o.trials, "Random pairs (balas)");
  verify->add_option("--seed", o.seed, "Random seed (balas)");
  verify->add_option("--sigma-degree", o.sigma_degree, "Exponent in fQ = (facets)^k");
  verify->add_option("--delta", o.delta, "delta (approx)");
  verify->add_option("--epsilon", o.epsilon, "epsilon (approx)");
  verify->add_option("--rho", o.rho, "big-M factor (bigm)");
  verify->add_option("-o,--output", o.out_path, "Write the report here instead of stdout");

  std::string kind;
  auto* report = app.add_subcommand("report", "Counting bound or workspace summary");
  report->add_option("kind", kind, "bound | summary")->required();
  report->add_option("--fP", o.fP, "Facets of the target");
  report->add_option("--fQ", o.fQ, "Facets of the extension");
  report->add_option("--workspace", o.workspace, "Directory to summarize");
  report->add_option("--csv", o.csv, "Also write a CSV of construction reports");
  report->add_option("-o,--output", o.out_path, "Output file");

  auto* convert = app.add_subcommand("convert", "Convert between the text and JSON polytope formats");
  convert->add_option("input", o.input, "Input file (text or JSON)")->required();
  convert->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  convert->add_option("-o,--output", o.out_path, "Output file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (build->parsed()) return cmd_build(target, o, out);
    if (verify->parsed()) return cmd_verify(suite, o, out);
    if (report->parsed()) return cmd_report(kind, o, out);
    return cmd_convert(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    nlohmann::json failure = {{"failure", e.what()}};
    out << failure.dump() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace polyunion::cli
