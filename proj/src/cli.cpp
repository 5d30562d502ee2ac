#include "subdisc/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "subdisc/errors.hpp"
#include "subdisc/io.hpp"
#include "subdisc/regions.hpp"
#include "subdisc/simulate.hpp"

namespace subdisc {

namespace {

// shortest round-trip decimal representation
std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot open output file " + out_path);
  file << j.dump(2) << "\n";
}

void emit_csv(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot open output file " + out_path);
  file << text;
}

Json trial_stats_to_json(const TrialStats& stats) {
  Json j;
  j["trials"] = stats.trials;
  j["identify1"] = stats.identify1;
  j["identify2"] = stats.identify2;
  j["failures"] = stats.failures;
  j["misidentifications"] = stats.misidentifications;
  j["empirical_failure_rate"] = stats.empirical_failure_rate;
  j["expected_failure_rate"] = stats.expected_failure_rate;
  j["z_score"] = stats.z_score;
  return j;
}

Json key_sharing_to_json(const KeySharingReport& report) {
  Json j;
  j["rounds"] = report.rounds;
  j["valid_bits"] = report.valid_bits;
  j["bit_values"] = report.bit_values;
  j["alice_success_rate"] = report.alice_success_rate;
  j["bob_success_rate"] = report.bob_success_rate;
  j["valid_rate"] = report.valid_rate;
  j["eve_enabled"] = report.eve_enabled;
  j["disturbance_detected"] = report.disturbance_detected;
  return j;
}

Json black_box_to_json(const BlackBoxReport& report) {
  Json j;
  j["trials"] = report.trials;
  j["box1_trials"] = report.box1_trials;
  j["box2_trials"] = report.box2_trials;
  j["successes"] = report.successes;
  j["failures"] = report.failures;
  j["misidentifications"] = report.misidentifications;
  j["success_rate"] = report.success_rate;
  j["expected_success_rate"] = report.expected_success_rate;
  j["max_analytic_deviation"] = report.max_analytic_deviation;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"optimal unambiguous discrimination of two subspaces"};
  app.require_subcommand(1);

  std::string problem_path, out_path;
  double eta = 0.5;
  double cos2_theta1 = 0.0, cos2_theta2 = 0.0, alpha = 0.0, beta = 0.0;
  std::size_t grid = 0;
  std::uint64_t trials = 0, rounds = 0, seed = 0;
  bool eve = false;

  CLI::App* solve = app.add_subcommand("solve", "solve a problem at a given prior");
  solve->add_option("--problem", problem_path, "problem file (JSON)")->required();
  solve->add_option("--eta", eta, "prior probability of the first state")->required();
  solve->add_option("--out", out_path, "write the solution here instead of stdout");

  CLI::App* intervals = app.add_subcommand("intervals", "per-sector priors admitting a POVM");
  intervals->add_option("--problem", problem_path, "problem file (JSON)")->required();

  CLI::App* regions = app.add_subcommand("regions", "classify a k=2 weight point");
  regions->add_option("--cos2theta1", cos2_theta1, "larger squared overlap")->required();
  regions->add_option("--cos2theta2", cos2_theta2, "smaller squared overlap")->required();
  regions->add_option("--alpha", alpha, "first-sector weight of the first state")->required();
  regions->add_option("--beta", beta, "first-sector weight of the second state")->required();

  CLI::App* curves = app.add_subcommand("divider-curves", "region divider data on an alpha grid");
  curves->add_option("--cos2theta1", cos2_theta1, "larger squared overlap")->required();
  curves->add_option("--cos2theta2", cos2_theta2, "smaller squared overlap")->required();
  curves->add_option("--grid", grid, "number of interior grid points")->required();
  curves->add_option("--out", out_path, "write CSV here instead of stdout");

  CLI::App* census_cmd = app.add_subcommand("census", "the 25-case classification for a k=2 angle pair");
  census_cmd->add_option("--cos2theta1", cos2_theta1, "larger squared overlap")->required();
  census_cmd->add_option("--cos2theta2", cos2_theta2, "smaller squared overlap")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "Born-rule trials against the optimal POVM");
  simulate->add_option("--problem", problem_path, "problem file (JSON)")->required();
  simulate->add_option("--eta", eta, "prior probability of the first state")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", seed, "RNG seed")->required();

  CLI::App* scenario = app.add_subcommand("scenario", "application scenarios");
  scenario->require_subcommand(1);
  CLI::App* key_sharing = scenario->add_subcommand("key-sharing", "three-party bit sharing");
  key_sharing->add_option("--rounds", rounds, "number of rounds")->required();
  key_sharing->add_option("--seed", seed, "RNG seed")->required();
  key_sharing->add_flag("--eve", eve, "enable the intercept-resend eavesdropper");
  CLI::App* black_box = scenario->add_subcommand("black-box", "operator discrimination");
  black_box->add_option("--trials", trials, "number of trials")->required();
  black_box->add_option("--seed", seed, "RNG seed")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (*solve) {
      const DiscriminationProblem problem = load_problem_file(problem_path);
      const SolutionFile file = problem.has_frames()
                                    ? make_solution_file(build_povm(problem, eta), problem)
                                    : make_solution_file(problem, eta);
      emit(solution_to_json(file), out_path, out);
    } else if (*intervals) {
      const DiscriminationProblem problem = load_problem_file(problem_path);
      const auto ivs = sector_intervals(problem);
      const auto sat = saturation_interval(problem);
      Json j;
      Json rows = Json::array();
      for (std::size_t i = 0; i < ivs.size(); ++i) {
        Json row;
        row["index"] = i;
        row["c"] = ivs[i].c;
        row["d"] = ivs[i].d;
        rows.push_back(std::move(row));
      }
      j["sectors"] = std::move(rows);
      j["saturation_interval"] =
          sat ? Json(Json::array({sat->c, sat->d})) : Json(nullptr);
      emit(j, "", out);
    } else if (*regions) {
      const RegionClassification rc = classify(cos2_theta1, cos2_theta2, alpha, beta);
      Json j;
      j["region"] = to_string(rc.region);
      j["dividers"] = Json::array(
          {rc.dividers.beta1, rc.dividers.beta2, rc.dividers.beta3, rc.dividers.beta4});
      j["intersection"] = rc.intersection
                              ? Json(Json::array({rc.intersection->c, rc.intersection->d}))
                              : Json(nullptr);
      emit(j, "", out);
    } else if (*curves) {
      const auto rows = divider_curves(cos2_theta1, cos2_theta2, grid);
      std::string csv = "alpha,beta1,beta2,beta3,beta4\n";
      for (const DividerCurveRow& r : rows) {
        csv += format_double(r.alpha) + "," + format_double(r.beta1) + "," +
               format_double(r.beta2) + "," + format_double(r.beta3) + "," +
               format_double(r.beta4) + "\n";
      }
      emit_csv(csv, out_path, out);
    } else if (*census_cmd) {
      const CaseCensus result = census(cos2_theta1, cos2_theta2);
      Json j;
      Json cases = Json::array();
      for (const CensusCase& c : result.cases) {
        Json row;
        row["region"] = to_string(c.region);
        row["alpha"] = c.alpha;
        row["beta"] = c.beta;
        row["eta_slot"] = c.eta_slot;
        row["eta"] = c.eta;
        row["regime1"] = to_string(c.regime1);
        row["regime2"] = to_string(c.regime2);
        row["saturates"] = c.saturates;
        row["kind"] = to_string(c.kind);
        cases.push_back(std::move(row));
      }
      j["cases"] = std::move(cases);
      j["counts"] = Json{{"total", result.cases.size()},
                         {"saturating", result.saturating},
                         {"projective", result.projective},
                         {"povm", result.povm},
                         {"mixed", result.mixed}};
      emit(j, "", out);
    } else if (*simulate) {
      const DiscriminationProblem problem = load_problem_file(problem_path);
      emit(trial_stats_to_json(run_trials(problem, eta, trials, seed)), "", out);
    } else if (*key_sharing) {
      emit(key_sharing_to_json(scenario_key_sharing(rounds, seed, eve)), "", out);
    } else if (*black_box) {
      emit(black_box_to_json(scenario_black_box(trials, seed)), "", out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace subdisc
