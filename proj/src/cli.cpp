#include "mwgap/cli.hpp"

#include "mwgap/acceptance.hpp"
#include "mwgap/brute_force.hpp"
#include "mwgap/dual.hpp"
#include "mwgap/io.hpp"
#include "mwgap/lp_search.hpp"
#include "mwgap/projection.hpp"
#include "mwgap/rounding.hpp"
#include "mwgap/svg.hpp"
#include "mwgap/weights.hpp"

#include <CLI11.hpp>

#include <optional>
#include <stdexcept>

namespace mwgap {

namespace {

std::string join(const std::vector<std::string>& args) {
  std::string s = "mwgap";
  for (const auto& a : args) s += " " + a;
  return s;
}

Json meta(const std::vector<std::string>& args, const std::optional<WeightFunction>& instance,
          const std::vector<std::uint64_t>& seeds = {}) {
  Json m = {{"command", join(args)}, {"version", kVersion}, {"seeds", seeds}};
  m["instance_digest"] = instance ? Json(instance_digest(*instance)) : Json(nullptr);
  return m;
}

void emit(std::ostream& out, Json result, Json m) {
  result["meta"] = std::move(m);
  out << result.dump(2) << '\n';
}

Json d_profile_json(const DProfile& d) {
  Json pairs = Json::array();
  for (const auto& [pair, labels] : d.per_pair) {
    pairs.push_back({{"i", pair.first}, {"j", pair.second}, {"labels", std::vector<int>(labels.begin(), labels.end())}});
  }
  return {{"pairs", std::move(pairs)}, {"mean", to_string(d.mean)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiway cut integrality gap instances on simplex grids", "mwgap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  // build
  std::string weights_name;
  int k = 3;
  int n = 0;
  std::string out_path;
  auto* build = app.add_subcommand("build", "construct a weight function");
  build->add_option("--weights", weights_name, "w3 | fk | what | wprime | wtilde")
      ->required()
      ->check(CLI::IsMember({"w3", "fk", "what", "wprime", "wtilde"}));
  build->add_option("--k", k, "number of terminals");
  build->add_option("--n", n, "grid resolution");
  build->add_option("--out", out_path, "output file (stdout if omitted)");

  std::string instance_path;
  auto* lpc_cmd = app.add_subcommand("lpc", "canonical LP value of an instance");
  lpc_cmd->add_option("instance", instance_path)->required();

  std::string family_name_arg = "nonopposite";
  std::string target_text = "1";
  auto* certify_cmd = app.add_subcommand("certify", "exact lower-bound certificate on Δ_{3,n}");
  certify_cmd->add_option("instance", instance_path)->required();
  certify_cmd->add_option("--family", family_name_arg)->check(CLI::IsMember({"nonopposite", "threeway"}));
  certify_cmd->add_option("--target", target_text, "rational p/q");

  auto* brute = app.add_subcommand("brute", "exhaustive minimum cut for n <= 4");
  brute->add_option("instance", instance_path)->required();
  brute->add_option("--family", family_name_arg)->check(CLI::IsMember({"nonopposite", "threeway"}));

  std::string cut_path;
  auto* project = app.add_subcommand("project", "face restrictions, D(P) and cost inequalities of a cut");
  project->add_option("instance", instance_path)->required();
  project->add_option("--cut", cut_path)->required();

  std::uint64_t samples = 1000000;
  std::string p_corner_text = "1/5";
  std::uint64_t seed = 0;
  auto* round = app.add_subcommand("round", "Monte-Carlo density of the random cut distribution");
  round->add_option("--n", n)->required();
  round->add_option("--samples", samples);
  round->add_option("--p-corner", p_corner_text, "rational p/q");
  round->add_option("--seed", seed)->required();

  double tol = 1e-9;
  int max_iter = 1000;
  auto* lpsearch = app.add_subcommand("lpsearch", "cutting-plane search for certified weights on Δ_{3,n}");
  lpsearch->add_option("--n", n)->required();
  lpsearch->add_option("--tol", tol);
  lpsearch->add_option("--max-iter", max_iter);
  lpsearch->add_option("--out", out_path, "instance file for the rescaled weights");

  int potential_index = 0;
  auto* svg = app.add_subcommand("svg", "weight diagram of a Δ_{3,n} instance");
  svg->add_option("instance", instance_path)->required();
  svg->add_option("--cut", cut_path);
  svg->add_option("--potential", potential_index, "label faces with Φ_i")->check(CLI::Range(1, 3));
  svg->add_option("--out", out_path);

  std::vector<int> criteria;
  auto* ledger = app.add_subcommand("ledger", "run the acceptance suite");
  ledger->add_option("--out", out_path, "JSON report");
  ledger->add_option("--criteria", criteria, "subset of criteria")->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> argv_store{"mwgap"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      if (weights_name == "fk") {
        k = 3;
        n = 2;
      } else if (n == 0) {
        throw std::invalid_argument("--n is required for " + weights_name);
      }
      const Json j = instance_to_json(build_named(weights_name, k, n));
      if (out_path.empty()) {
        out << j.dump() << '\n';
      } else {
        write_text_file(out_path, j.dump() + "\n");
      }
      return 0;
    }

    if (lpc_cmd->parsed()) {
      const WeightFunction w = instance_from_json(read_json_file(instance_path));
      emit(out, {{"lpc", to_string(lpc(w))}}, meta(args, w));
      return 0;
    }

    if (certify_cmd->parsed()) {
      const WeightFunction w = instance_from_json(read_json_file(instance_path));
      const Certificate c = certify(w.n(), w, parse_family(family_name_arg), parse_rational(target_text));
      emit(out, certificate_to_json(c), meta(args, w));
      return c.pass ? 0 : 1;
    }

    if (brute->parsed()) {
      const WeightFunction w = instance_from_json(read_json_file(instance_path));
      const BruteForceResult r = brute_force_min_cut(w.n(), w, parse_family(family_name_arg));
      emit(out, {{"min", to_string(r.minimum)}, {"cut", cut_to_json(r.argmin)}}, meta(args, w));
      return 0;
    }

    if (project->parsed()) {
      const WeightFunction w = instance_from_json(read_json_file(instance_path));
      const Cut cut = cut_from_json(read_json_file(cut_path));
      if (cut.k() != w.k() || cut.n() != w.n()) throw std::invalid_argument("cut and instance grids differ");
      Json result = {{"cost", to_string(cost(cut, w))}, {"d_profile", d_profile_json(d_profile(cut))}};
      bool ok = true;
      if (cut.k() >= 3 && cut.family() == CutFamily::kway) {
        const ProjectionReport p = check_projection_bounds(cut, 20000, 1);
        result["projection"] = {{"triples", p.triples},
                                {"non_opposite", p.non_opposite},
                                {"exhaustive", p.exhaustive},
                                {"fraction", to_string(p.fraction)},
                                {"refined_bound", to_string(p.refined_bound)},
                                {"coarse_bound", to_string(p.coarse_bound)},
                                {"ci3sigma", p.ci3sigma},
                                {"ok", p.ok}};
        ok = ok && p.ok;
        if (cut.n() % 3 == 0) {
          const CostLemmaReport c = check_cost_lemmas(cut, cut.n());
          result["cost_lemmas"] = {{"d_mean", to_string(c.d_mean)},
                                   {"cost_hat", to_string(c.cost_hat)},
                                   {"cost_prime", to_string(c.cost_prime)},
                                   {"cost_tilde", to_string(c.cost_tilde)},
                                   {"hat_bound", to_string(c.hat_bound)},
                                   {"prime_bound", to_string(c.prime_bound)},
                                   {"ok", c.ok()},
                                   {"violations", c.violations}};
          ok = ok && c.ok();
        }
      }
      emit(out, result, meta(args, w));
      return ok ? 0 : 1;
    }

    if (round->parsed()) {
      const Rational p = parse_rational(p_corner_text);
      const DensityEstimate est = estimate_density(n, samples, p, seed, threads);
      const Edge& worst = est.edges[est.worst_edge];
      const auto coords = [](const GridPoint& x) { return std::vector<int>(x.coords().begin(), x.coords().end()); };
      const Json result = {
          {"n", n},
          {"samples", samples},
          {"p_corner", to_string(p)},
          {"tau_hat", est.tau_hat},
          {"worst_pair",
           {{"u", coords(worst.u())},
            {"v", coords(worst.v())},
            {"separations", est.separations[est.worst_edge]},
            {"sigma", est.sigma[est.worst_edge]}}},
          {"ci3sigma", est.ci3sigma},
          {"corner_fraction", est.corner_fraction},
          {"resampled", est.resampled}};
      emit(out, result, meta(args, std::nullopt, {seed}));
      return 0;
    }

    if (lpsearch->parsed()) {
      const SearchState st = search(n, tol, max_iter);
      Json inst = instance_to_json(st.exact);
      inst["lpc_exact"] = to_string(st.lpc_exact);
      inst["iterations"] = st.iterations;
      inst["certified"] = st.certified;
      if (!out_path.empty()) write_text_file(out_path, inst.dump() + "\n");
      Json log = Json::array();
      for (const auto& r : st.log) {
        log.push_back({{"iteration", r.iteration}, {"objective", r.objective}, {"ball", r.ball}, {"corner", r.corner},
                       {"added", r.added}});
      }
      const Json result = {{"lpc_exact", to_string(st.lpc_exact)},
                           {"iterations", st.iterations},
                           {"converged", st.converged},
                           {"certified", st.certified},
                           {"constraints", st.constraints.size()},
                           {"certificate", certificate_to_json(st.certificate)},
                           {"log", std::move(log)}};
      emit(out, result, meta(args, st.exact));
      return st.certified ? 0 : 1;
    }

    if (svg->parsed()) {
      const WeightFunction w = instance_from_json(read_json_file(instance_path));
      SvgOptions options;
      if (!cut_path.empty()) options.cut = cut_from_json(read_json_file(cut_path));
      if (potential_index != 0) options.potential = potential_index;
      const std::string text = emit_svg(w, options);
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
      }
      return 0;
    }

    if (ledger->parsed()) {
      if (criteria.empty()) {
        for (int id = 1; id <= kCriterionCount; ++id) criteria.push_back(id);
      }
      bool all = true;
      Json report = Json::array();
      for (int id : criteria) {
        const CriterionResult r = run_criterion(id, threads);
        out << format_result(r) << '\n';
        for (const auto& d : r.details) out << "        " << d << '\n';
        out.flush();
        all = all && r.pass;
        report.push_back(result_to_json(r));
      }
      if (!out_path.empty()) {
        const Json doc = {{"criteria", std::move(report)}, {"pass", all}, {"meta", meta(args, std::nullopt)}};
        write_text_file(out_path, doc.dump(2) + "\n");
      }
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "mwgap: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "mwgap: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "mwgap: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace mwgap
