// Command-line front end: point-set ingestion, radius/core solves, inequality
// checks, classification, simplex extraction, family generation, and the
// acceptance suite. Reports are JSON (or key,value CSV) with a fixed field
// order so identical inputs produce byte-identical output.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpx/certify.hpp"
#include "lpx/chebyshev.hpp"
#include "lpx/extremal.hpp"
#include "lpx/gallery.hpp"
#include "lpx/io.hpp"
#include "lpx/oracle.hpp"
#include "lpx/space.hpp"
#include "lpx/williams_wells.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOut {
  std::string out_path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, CommonOut& out) {
  cmd->add_option("--out", out.out_path, "write the report to this file instead of stdout");
  cmd->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

struct SolverFlags {
  lpx::SolverConfig cfg;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& s) {
  cmd->add_option("--tolerance", s.cfg.tolerance, "target accuracy on the radius");
  cmd->add_option("--active-tol", s.cfg.active_tol, "active-set membership slack");
  cmd->add_option("--max-iters", s.cfg.max_iters, "subgradient iteration budget");
  cmd->add_option("--step", s.cfg.step, "initial step constant");
  cmd->add_option("--seed", s.cfg.seed, "seed for randomized restarts");
  cmd->add_option("--restarts", s.cfg.restarts, "extra randomized starts");
}

std::string csv_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string to_csv(const ordered_json& rep) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : rep.items()) {
    out += key;
    out += ',';
    if (value.is_array()) {
      bool first = true;
      for (const auto& el : value) {
        if (!first) out += ';';
        first = false;
        out += csv_scalar(el);
      }
    } else {
      out += csv_scalar(value);
    }
    out += '\n';
  }
  return out;
}

void emit(const ordered_json& rep, const CommonOut& out) {
  const std::string text = out.format == "csv" ? to_csv(rep) : rep.dump(2) + "\n";
  if (out.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out.out_path);
    f << text;
  }
}

ordered_json solution_json(const lpx::ChebyshevSolution& sol) {
  ordered_json j;
  j["radius"] = sol.radius;
  j["center"] = sol.center.coeffs;
  if (sol.weights) j["weights"] = sol.weights->values();
  j["iterations"] = sol.iterations;
  j["gap_estimate"] = sol.gap_estimate;
  j["converged"] = sol.converged;
  return j;
}

// Shared ingestion flags: JSON files are self-describing; CSV needs --p and
// takes --cells as an explicit measure list (default: all ones).
struct InputFlags {
  std::string file;
  std::optional<double> p;
  std::string cells_text;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("file", in.file, "point-set file (.json or .csv)")->required();
  auto* popt = cmd->add_option("--p", in.p, "norm exponent (CSV input only)");
  cmd->add_option("--cells", in.cells_text, "comma-separated cell measures (CSV input only)")
      ->needs(popt);
}

lpx::PointSet load_set(const InputFlags& in) {
  std::vector<double> cells;
  if (!in.cells_text.empty()) cells = lpx::io::parse_measure_list(in.cells_text);
  return lpx::io::read_point_set(in.file, in.p, cells);
}

int run(int argc, char** argv) {
  CLI::App app{"extremal-set computations in finite weighted L_p spaces"};
  app.require_subcommand(1);

  // radius
  auto* radius_cmd = app.add_subcommand("radius", "relative (or ambient) Chebyshev radius");
  InputFlags radius_in;
  SolverFlags radius_solver;
  CommonOut radius_out;
  bool ambient = false;
  add_input_flags(radius_cmd, radius_in);
  add_solver_flags(radius_cmd, radius_solver);
  add_output_flags(radius_cmd, radius_out);
  radius_cmd->add_flag("--ambient", ambient, "minimize over the whole space, not conv(A)");

  // core
  auto* core_cmd = app.add_subcommand("core", "equidistant core reduction");
  InputFlags core_in;
  SolverFlags core_solver;
  CommonOut core_out;
  add_input_flags(core_cmd, core_in);
  add_solver_flags(core_cmd, core_solver);
  add_output_flags(core_cmd, core_out);

  // ww-check
  auto* ww_cmd = app.add_subcommand("ww-check", "evaluate both sides of the power-mean inequality");
  InputFlags ww_in;
  CommonOut ww_out;
  std::string ww_weights_path;
  add_input_flags(ww_cmd, ww_in);
  ww_cmd->add_option("--weights", ww_weights_path, "weights file (CSV row or JSON array); default uniform");
  add_output_flags(ww_cmd, ww_out);

  // jung
  auto* jung_cmd = app.add_subcommand("jung", "Jung constant of L_p");
  double jung_p = 2.0;
  CommonOut jung_out;
  jung_cmd->add_option("--p", jung_p, "norm exponent")->required();
  add_output_flags(jung_cmd, jung_out);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "self-extremality classification");
  InputFlags classify_in;
  SolverFlags classify_solver;
  CommonOut classify_out;
  add_input_flags(classify_cmd, classify_in);
  add_solver_flags(classify_cmd, classify_solver);
  classify_cmd->add_option("--class-tol", classify_solver.cfg.class_tol,
                           "band around the Jung constant counted as self-extremal");
  add_output_flags(classify_cmd, classify_out);

  // simplex
  auto* simplex_cmd = app.add_subcommand("simplex", "greedy near-equilateral simplex extraction");
  InputFlags simplex_in;
  CommonOut simplex_out;
  int simplex_m = 1;
  double simplex_eps = 0.0;
  add_input_flags(simplex_cmd, simplex_in);
  simplex_cmd->add_option("--m", simplex_m, "simplex dimension (m+1 vertices)")->required();
  simplex_cmd->add_option("--epsilon", simplex_eps, "edge slack below the diameter")->required();
  add_output_flags(simplex_cmd, simplex_out);

  // separated
  auto* sep_cmd = app.add_subcommand("separated", "greedy maximal delta-separated subset");
  InputFlags sep_in;
  CommonOut sep_out;
  double sep_delta = 0.0;
  add_input_flags(sep_cmd, sep_in);
  sep_cmd->add_option("--delta", sep_delta, "required pairwise separation")->required();
  add_output_flags(sep_cmd, sep_out);

  // gallery
  auto* gallery_cmd = app.add_subcommand("gallery", "generate a built-in point-set family");
  std::string family;
  int gal_n = 0, gal_k = 0, gal_cells = 4;
  double gal_p = 0.0;
  std::uint64_t gal_seed = 0;
  CommonOut gallery_out;
  gallery_cmd->add_option("--family", family, "indicator | rademacher | random")
      ->required()
      ->check(CLI::IsMember({"indicator", "rademacher", "random"}));
  gallery_cmd->add_option("--n", gal_n, "number of points")->required();
  gallery_cmd->add_option("--p", gal_p, "norm exponent")->required();
  gallery_cmd->add_option("--k", gal_k, "dyadic depth (rademacher; default max(n, 6))");
  gallery_cmd->add_option("--cells", gal_cells, "cell count (random family)");
  gallery_cmd->add_option("--seed", gal_seed, "generator seed (random family)");
  add_output_flags(gallery_cmd, gallery_out);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "run the full acceptance suite");
  lpx::certify::AcceptanceOptions acc;
  CommonOut certify_out;
  certify_cmd->add_option("--threads", acc.threads, "parallelism cap (also capped by LP_EXTREMAL_THREADS)");
  certify_cmd->add_option("--seed", acc.seed, "base seed for the randomized criteria");
  certify_cmd->add_option("--only", acc.only, "run only these criterion ids");
  add_output_flags(certify_cmd, certify_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? 0 : 2;
  }

  if (radius_cmd->parsed()) {
    lpx::PointSet set = load_set(radius_in);
    lpx::ChebyshevSolution sol = ambient ? lpx::ambient_radius(set, radius_solver.cfg)
                                         : lpx::relative_radius(set, radius_solver.cfg);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "radius";
    rep["mode"] = ambient ? "ambient" : "relative";
    rep["p"] = set.space().p();
    rep["alpha"] = set.space().alpha();
    rep["n"] = set.size();
    rep.update(solution_json(sol));
    rep["diameter"] = lpx::diameter(set);
    rep["seed"] = radius_solver.cfg.seed;
    emit(rep, radius_out);
    return 0;
  }

  if (core_cmd->parsed()) {
    lpx::PointSet set = load_set(core_in);
    lpx::EquidistantCore core = lpx::equidistant_core(set, core_solver.cfg);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "core";
    rep["p"] = set.space().p();
    rep["alpha"] = set.space().alpha();
    rep["n"] = set.size();
    rep["core_indices"] = core.indices;
    rep["rounds"] = core.rounds;
    rep["cycled"] = core.cycled;
    rep.update(solution_json(core.solution));
    rep["seed"] = core_solver.cfg.seed;
    emit(rep, core_out);
    return 0;
  }

  if (ww_cmd->parsed()) {
    lpx::PointSet set = load_set(ww_in);
    lpx::SimplexWeights w = ww_weights_path.empty()
                                ? lpx::SimplexWeights::uniform(set.size())
                                : lpx::io::read_weights(ww_weights_path, set.size());
    auto [lhs, rhs] = lpx::ww::ww_sides(set, w);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "ww-check";
    rep["p"] = set.space().p();
    rep["alpha"] = set.space().alpha();
    rep["n"] = set.size();
    rep["weights_source"] = ww_weights_path.empty() ? "uniform" : ww_weights_path;
    rep["lhs"] = lhs;
    rep["rhs"] = rhs;
    rep["gap"] = rhs - lhs;
    emit(rep, ww_out);
    return 0;
  }

  if (jung_cmd->parsed()) {
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "jung";
    rep["p"] = jung_p;
    rep["jung"] = lpx::jung_constant(jung_p);
    emit(rep, jung_out);
    return 0;
  }

  if (classify_cmd->parsed()) {
    lpx::PointSet set = load_set(classify_in);
    lpx::ExtremalityReport er = lpx::extremality_ratio(set, classify_solver.cfg);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "classify";
    rep["p"] = set.space().p();
    rep["alpha"] = set.space().alpha();
    rep["n"] = set.size();
    rep["radius"] = er.radius;
    rep["diameter"] = er.diameter;
    rep["ratio"] = er.ratio;
    rep["jung"] = er.jung;
    rep["margin"] = er.margin;
    rep["class_tol"] = er.tol;
    rep["classification"] = er.cls == lpx::Extremality::kSelfExtremalWithinTol
                                ? "self-extremal-within-tol"
                                : "subextremal";
    rep["seed"] = classify_solver.cfg.seed;
    emit(rep, classify_out);
    return 0;
  }

  if (simplex_cmd->parsed()) {
    lpx::PointSet set = load_set(simplex_in);
    auto wit = lpx::extract_simplex(set, simplex_m, simplex_eps);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "simplex";
    rep["p"] = set.space().p();
    rep["n"] = set.size();
    rep["m"] = simplex_m;
    rep["epsilon"] = simplex_eps;
    rep["diameter"] = lpx::diameter(set);
    rep["feasible"] = wit.has_value();
    if (wit) {
      rep["witness_indices"] = wit->vertices;
      rep["min_edge"] = wit->min_edge;
    }
    emit(rep, simplex_out);
    return 0;
  }

  if (sep_cmd->parsed()) {
    lpx::PointSet set = load_set(sep_in);
    std::vector<std::size_t> idx = lpx::separated_subset(set, sep_delta);
    ordered_json rep;
    rep["schema"] = "1";
    rep["command"] = "separated";
    rep["p"] = set.space().p();
    rep["n"] = set.size();
    rep["delta"] = sep_delta;
    rep["count"] = idx.size();
    rep["indices"] = idx;
    emit(rep, sep_out);
    return 0;
  }

  if (gallery_cmd->parsed()) {
    lpx::PointSet set = [&]() {
      if (family == "indicator") return lpx::gallery::indicator_family(gal_n, gal_p);
      if (family == "rademacher") {
        const int k = gal_k > 0 ? gal_k : lpx::gallery::rademacher_default_depth(gal_n);
        return lpx::gallery::rademacher_family(gal_n, gal_p, k);
      }
      return lpx::gallery::random_family(gal_seed, gal_n, gal_cells, gal_p);
    }();
    const std::string text = lpx::io::point_set_to_json(set);
    if (gallery_out.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(gallery_out.out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file: " + gallery_out.out_path);
      f << text;
    }
    return 0;
  }

  // certify
  std::vector<lpx::certify::CriterionResult> results = lpx::certify::run_acceptance(acc);
  bool all_passed = true;
  ordered_json rows = ordered_json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::fprintf(stderr, "criterion %2d (%s): %s  [%.2fs]\n    %s\n", r.id, r.name.c_str(),
                 r.passed ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    ordered_json row;
    row["id"] = r.id;
    row["name"] = r.name;
    row["passed"] = r.passed;
    row["seconds"] = r.seconds;
    row["detail"] = r.detail;
    rows.push_back(row);
  }
  std::fprintf(stderr, "%zu/%zu criteria passed\n",
               static_cast<std::size_t>(
                   std::count_if(results.begin(), results.end(),
                                 [](const auto& r) { return r.passed; })),
               results.size());
  ordered_json rep;
  rep["schema"] = "1";
  rep["command"] = "certify";
  rep["seed"] = acc.seed;
  rep["threads"] = lpx::certify::thread_budget(acc.threads);
  rep["passed"] = all_passed;
  if (certify_out.format == "csv") {
    std::string text = "id,name,passed,seconds\n";
    for (const auto& r : results) {
      text += std::to_string(r.id) + "," + r.name + "," + (r.passed ? "true" : "false") + "," +
              std::to_string(r.seconds) + "\n";
    }
    if (certify_out.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(certify_out.out_path, std::ios::binary);
      f << text;
    }
  } else {
    rep["criteria"] = rows;
    emit(rep, certify_out);
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;  // unreachable: CLI11_PARSE handles these
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
