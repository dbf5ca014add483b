// Command-line front end: loads an experiment spec, runs the requested
// verification suite and emits a machine-readable JSON report.
//
// Exit codes: 0 all checks passed, 1 at least one check failed (witnesses in
// the report), 2 malformed spec or configuration, 3 unexpected error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cotrans/error.hpp"
#include "cotrans/gallery.hpp"
#include "cotrans/groupoid.hpp"
#include "cotrans/json_io.hpp"
#include "cotrans/rng.hpp"
#include "cotrans/skew.hpp"

namespace {

using cotrans::OrderedJson;
using nlohmann::json;

struct Options {
  std::string command;
  std::string spec_path;
  std::string out_path;
  long long seed_override = -1;
  double tol_override = -1.0;
  int radius_override = -1;
};

struct Settings {
  std::uint64_t seed = 0;
  int radius = 3;
  std::size_t testpoints = 32;
  double tol = 1e-9;
  std::size_t max_triples = 20000;
  int threads = 1;
};

Settings settings_from(const json& spec, const Options& opt) {
  Settings s;
  if (opt.seed_override >= 0) {
    s.seed = static_cast<std::uint64_t>(opt.seed_override);
  } else if (spec.contains("seed")) {
    s.seed = spec.at("seed").get<std::uint64_t>();
  } else {
    throw cotrans::ConfigError("spec needs a seed (or pass --seed)");
  }
  if (spec.contains("sampling")) {
    const auto& sj = spec.at("sampling");
    s.radius = sj.value("radius", s.radius);
    s.testpoints = sj.value("testpoints", s.testpoints);
    s.tol = sj.value("tol", s.tol);
    s.max_triples = sj.value("max_triples", s.max_triples);
  }
  if (opt.tol_override > 0.0) s.tol = opt.tol_override;
  if (opt.radius_override >= 0) s.radius = opt.radius_override;
  if (const char* env = std::getenv("COTRANS_THREADS")) {
    s.threads = std::max(1, std::atoi(env));
  }
  return s;
}

std::vector<cotrans::Point> points_for(const cotrans::Space& space,
                                       const Settings& s) {
  return cotrans::default_testpoints(space, s.testpoints, s.seed * 2 + 1);
}

cotrans::Report run_command(const std::string& command, const json& spec,
                            const Settings& s, OrderedJson& payload) {
  using namespace cotrans;

  if (command == "verify-groupoid") {
    const auto P = presentation_from_json(spec.at("presentation"));
    AxiomCheckConfig cfg;
    cfg.max_triples = s.max_triples;
    cfg.seed = s.seed;
    return verify_groupoid_axioms(P, groupoid_sample(P, s.radius),
                                  GroupoidOps::standard(), cfg);
  }

  if (command == "verify-cotranslation" || command == "gallery") {
    const Cotranslation Z = cotranslation_from_json(spec.at("cotranslation"));
    return verify_cotranslation(
        Z, default_triples(Z.presentation(), s.radius, s.max_triples, s.seed),
        points_for(Z.space(), s), s.tol);
  }

  if (command == "check-relations") {
    const Cotranslation Z = cotranslation_from_json(spec.at("cotranslation"));
    const auto& P = Z.presentation();
    const auto bases = P.is_finite() && P.order() <= 64
                           ? P.elements()
                           : ball(P, s.radius);
    return check_relation_preservation(Z.generator_maps(), bases,
                                       points_for(Z.space(), s), s.tol);
  }

  if (command == "skew-verify") {
    const Cotranslation Z = cotranslation_from_json(spec.at("cotranslation"));
    const auto skew = hull_from_cotranslation(Z);
    const auto pts = points_for(Z.space(), s);
    Report report = verify_skew_axiom(
        skew.hull, skew.sigma,
        default_triples(Z.presentation(), s.radius, s.max_triples, s.seed),
        pts, s.tol);
    // Round trip back to a cotranslation and compare extensionally.
    const Cotranslation back = cotranslation_from_hull(skew.hull);
    auto& round = report.add("round_trip");
    for (const auto& g : ball(Z.presentation(), std::min(s.radius, 3))) {
      for (const auto& h : ball(Z.presentation(), std::min(s.radius, 3))) {
        const double r =
            max_image_distance(Z.evaluate(g, h), back.evaluate(g, h), pts);
        round.record(r, Z.space().discrete() ? r == 0.0 : r <= s.tol,
                     "round trip differs at g=" + to_string(g, Z.presentation()) +
                         ", h=" + to_string(h, Z.presentation()));
      }
    }
    return report;
  }

  if (command == "evaluate") {
    const Cotranslation Z = cotranslation_from_json(spec.at("cotranslation"));
    const auto& ej = spec.at("evaluate");
    const Word g = parse_word(ej.at("g").get<std::string>(), Z.presentation());
    const Word h = parse_word(ej.at("h").get<std::string>(), Z.presentation());
    const Transform t = Z.evaluate(g, h);
    payload["transform"] = transform_to_json(t);
    Report report;
    report.add("evaluate").record(0.0, true, "");
    return report;
  }

  if (command == "difference") {
    const auto& dj = spec.at("difference");
    const MatrixSequence S = sequence_from_json(dj.at("sequence"));
    std::vector<std::array<long, 3>> samples;
    if (dj.contains("checks")) {
      for (const auto& c : dj.at("checks")) {
        samples.push_back({c.at(0).get<long>(), c.at(1).get<long>(),
                           c.at(2).get<long>()});
      }
    } else {
      Rng rng(s.seed);
      const long count = dj.value("count", 200);
      const long span = dj.value("max_shift", 50);
      for (long i = 0; i < count; ++i) {
        samples.push_back({rng.integer(-span, span), rng.integer(-span, span),
                           rng.integer(-span, span)});
      }
    }
    return verify_cocycle(S, samples, std::max(s.tol, 1e-8));
  }

  if (command == "evolve" || command == "derivative-identities") {
    const auto& ej = spec.at("evolution");
    const GeneratorFunction A = generator_from_json(ej.at("generator"));
    const double step = ej.value("step", 1e-3);
    const double h = ej.value("fd_h", 1e-4);
    const int grid = ej.value("grid", 5);
    const double box = ej.value("box", 1.0);
    EvolutionOperator op(A, step);

    if (command == "derivative-identities") {
      const RealCotranslation Z = cotranslation_of_evolution(op.as_evolution());
      std::vector<std::pair<double, double>> samples;
      for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
          const double r = -box + 2 * box * i / std::max(1, grid - 1);
          const double t = -box + 2 * box * j / std::max(1, grid - 1);
          samples.emplace_back(r, t);
        }
      }
      return verify_derivative_identities(Z, samples,
                                          h, std::max(s.tol, 1e-4));
    }

    std::vector<std::array<double, 3>> samples;
    Rng rng(s.seed);
    for (int i = 0; i < grid * grid; ++i) {
      samples.push_back({rng.uniform(-box, box), rng.uniform(-box, box),
                         rng.uniform(-box, box)});
    }
    OrderedJson psi_samples = OrderedJson::array();
    for (int i = 0; i < std::min(grid, 5); ++i) {
      const double u = -box + 2 * box * i / std::max(1, grid - 1);
      OrderedJson row;
      row["u"] = u;
      row["v"] = 0.0;
      OrderedJson mat = OrderedJson::array();
      const Eigen::MatrixXd m = op.psi(u, 0.0);
      for (long r = 0; r < m.rows(); ++r) {
        OrderedJson mr = OrderedJson::array();
        for (long c = 0; c < m.cols(); ++c) mr.push_back(m(r, c));
        mat.push_back(mr);
      }
      row["psi"] = mat;
      psi_samples.push_back(row);
    }
    payload["psi_samples"] = psi_samples;
    return verify_evolution_properties(op.as_evolution(), A, samples, h,
                                       std::max(s.tol, 1e-6));
  }

  if (command == "partial-verify" || command == "complete" ||
      command == "factorize") {
    const PartialCotranslation W = partial_from_json(spec.at("partial"));
    if (command == "partial-verify") {
      Report report = verify_partial_law(
          W, default_triples(W.presentation(), s.radius, s.max_triples, s.seed),
          std::max(s.tol, 1e-8));
      const int rank = rank_of(W, s.radius);
      payload["rank"] = rank;
      auto& units = report.add("units_idempotent");
      MatrixProjector P = units_projector(W);
      for (const auto& g : sample_words(W.presentation(), s.radius)) {
        const Eigen::MatrixXd p = P.at(g);  // idempotency checked inside
        units.record((p * p - p).norm(), true, "");
      }
      return report;
    }
    if (command == "complete") {
      Completion c = complete(W, s.radius, std::max(s.tol, 1e-8));
      payload["rank"] = rank_of(W, s.radius);
      payload["total_rank"] = rank_of(c.total, s.radius);
      return c.report;
    }
    Factorization f = factorize(W, s.radius, std::max(s.tol, 1e-8));
    return f.report;
  }

  throw cotrans::ConfigError("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cotranslation verification suites"};
  Options opt;
  app.add_option("command", opt.command,
                 "one of: verify-groupoid verify-cotranslation "
                 "check-relations skew-verify evaluate difference evolve "
                 "derivative-identities partial-verify complete factorize "
                 "gallery")
      ->required();
  app.add_option("--spec", opt.spec_path, "experiment spec (JSON)");
  app.add_option("--out", opt.out_path, "report output path (JSON)");
  app.add_option("--seed", opt.seed_override, "override the spec seed");
  app.add_option("--tol", opt.tol_override, "override the spec tolerance");
  app.add_option("--radius", opt.radius_override, "override the ball radius");
  CLI11_PARSE(app, argc, argv);

  // `gallery` with no spec lists the gallery.
  if (opt.command == "gallery" && opt.spec_path.empty()) {
    for (const auto& name : cotrans::example_names()) {
      std::cout << name << "\n";
    }
    return 0;
  }

  json spec;
  try {
    if (opt.spec_path.empty()) {
      throw cotrans::ConfigError("--spec is required");
    }
    std::ifstream in(opt.spec_path);
    if (!in) throw cotrans::ConfigError("cannot open " + opt.spec_path);
    in >> spec;
  } catch (const std::exception& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  }

  OrderedJson out;
  int exit_code = 0;
  try {
    const Settings s = settings_from(spec, opt);
    out["command"] = opt.command;
    out["seed"] = s.seed;
    OrderedJson config;
    config["radius"] = s.radius;
    config["testpoints"] = s.testpoints;
    config["tol"] = s.tol;
    config["threads"] = s.threads;
    out["config"] = config;

    OrderedJson payload = OrderedJson::object();
    const cotrans::Report report = run_command(opt.command, spec, s, payload);
    for (auto& [k, v] : payload.items()) out[k] = v;
    const OrderedJson rep = cotrans::report_to_json(report);
    out["passed"] = rep["passed"];
    out["checks"] = rep["checks"];
    if (!report.all_passed()) exit_code = 1;
    std::cout << cotrans::render(report);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const cotrans::ConfigError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const cotrans::MalformedWordError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const cotrans::UnsupportedOperationError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const cotrans::Error& e) {
    // Construction-time rejections and inconsistencies are check failures.
    out["passed"] = false;
    out["error"] = e.what();
    std::cout << "check failed: " << e.what() << "\n";
    exit_code = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  if (!opt.out_path.empty()) {
    std::ofstream outfile(opt.out_path);
    if (!outfile) {
      std::cerr << "cannot write " << opt.out_path << "\n";
      return 3;
    }
    outfile << out.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return exit_code;
}
