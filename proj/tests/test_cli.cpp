#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "subdisc/cli.hpp"
#include "subdisc/errors.hpp"
#include "subdisc/io.hpp"
#include "subdisc/simulate.hpp"
#include "testutil.hpp"

using namespace subdisc;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

// writes a problem file and removes it on scope exit
struct TempProblemFile {
  std::string path;

  explicit TempProblemFile(const std::string& name, const std::string& body) : path(name) {
    std::ofstream f(path);
    f << body;
  }
  ~TempProblemFile() { std::remove(path.c_str()); }
};

const char* kFourDimProblem = R"({
  "ambient_dim": 4,
  "s1_basis": [
    [[1, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [1, 0], [0, 0], [0, 0]]
  ],
  "s2_basis": [
    [[0.7071067811865476, 0], [0, 0], [0.7071067811865476, 0], [0, 0]],
    [[0, 0], [0.7071067811865476, 0], [0, 0], [0.7071067811865476, 0]]
  ]
})";

}  // namespace

TEST_CASE("solve reports the closed-form failure probability") {
  TempProblemFile file("cli_problem_solve.json", kFourDimProblem);
  const CliRun r = run({"solve", "--problem", file.path, "--eta", "0.5"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::abs(j["q_total"].get<double>() - 0.7071067811865476) < 1e-12);
  CHECK(j["saturates"].get<bool>());
  CHECK(j["fidelity"].get<double>() == doctest::Approx(0.7071067811865476).epsilon(1e-13));
  CHECK(j.contains("pi0"));
  CHECK(j["sectors"].size() == 2);
  CHECK(j["sectors"][0]["regime"] == "interior");
}

TEST_CASE("solve writes to a file when asked") {
  TempProblemFile file("cli_problem_out.json", kFourDimProblem);
  const std::string out_path = "cli_solution_out.json";
  const CliRun r =
      run({"solve", "--problem", file.path, "--eta", "0.5", "--out", out_path});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  REQUIRE(in.good());
  Json j;
  in >> j;
  CHECK(std::abs(j["q_total"].get<double>() - 0.7071067811865476) < 1e-12);
  std::remove(out_path.c_str());
}

TEST_CASE("solutions round-trip losslessly") {
  const auto problem = testutil::four_dim_example();
  const SolutionFile file = make_solution_file(build_povm(problem, 0.37), problem);
  const Json j = solution_to_json(file);
  const SolutionFile back = solution_from_json(j);
  CHECK(back.eta == file.eta);
  CHECK(back.q_total == file.q_total);
  CHECK(back.fidelity == file.fidelity);
  CHECK(back.fidelity_bound == file.fidelity_bound);
  CHECK(back.saturates == file.saturates);
  REQUIRE(back.sectors.size() == file.sectors.size());
  for (std::size_t i = 0; i < file.sectors.size(); ++i) {
    CHECK(back.sectors[i].q1_bar == file.sectors[i].q1_bar);
    CHECK(back.sectors[i].q2_bar == file.sectors[i].q2_bar);
    CHECK(back.sectors[i].lambda == file.sectors[i].lambda);
    CHECK(back.sectors[i].interval.c == file.sectors[i].interval.c);
    CHECK(back.sectors[i].interval.d == file.sectors[i].interval.d);
  }
  REQUIRE(back.pi0.has_value());
  CHECK(*back.pi0 == *file.pi0);
  CHECK(*back.pi1 == *file.pi1);
  CHECK(*back.pi2 == *file.pi2);
  // serializing the parsed copy is byte-identical
  CHECK(solution_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("problems round-trip through their JSON form") {
  const auto problem = testutil::four_dim_example();
  const auto back = problem_from_json(problem_to_json(problem));
  CHECK(back.k == problem.k);
  for (std::size_t i = 0; i < problem.k; ++i)
    CHECK(std::abs(back.cos_angles[i] - problem.cos_angles[i]) < 1e-12);

  const auto angles_only = make_problem({0.6, 0.4}, {0.3, 0.7}, {0.2, 0.8});
  const auto back2 = problem_from_json(problem_to_json(angles_only));
  CHECK(back2.cos_angles == angles_only.cos_angles);
  CHECK(back2.alpha == angles_only.alpha);
  CHECK_FALSE(back2.has_frames());
}

TEST_CASE("an angle-only problem solves without matrices") {
  TempProblemFile file("cli_problem_angles.json",
                       R"({"cos_angles": [0.7071067811865476, 0.7071067811865476]})");
  const CliRun r = run({"solve", "--problem", file.path, "--eta", "0.5"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["q_total"].get<double>() == doctest::Approx(0.7071067811865476).epsilon(1e-13));
  CHECK_FALSE(j.contains("pi0"));
}

TEST_CASE("intervals prints the admissible windows") {
  TempProblemFile file("cli_problem_intervals.json", kFourDimProblem);
  const CliRun r = run({"intervals", "--problem", file.path});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["sectors"].size() == 2);
  CHECK(j["sectors"][0]["c"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(j["sectors"][0]["d"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(j["saturation_interval"][0].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("regions classifies a weight point") {
  const CliRun r = run({"regions", "--cos2theta1", "0.75", "--cos2theta2", "0.25", "--alpha",
                        "0.5", "--beta", "0.5"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["region"] == "III");
  CHECK(j["dividers"][1].get<double>() == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(j["intersection"][0].get<double>() == doctest::Approx(3.0 / 7.0).epsilon(1e-13));
}

TEST_CASE("divider-curves emits the documented CSV header") {
  const CliRun r = run({"divider-curves", "--cos2theta1", "0.75", "--cos2theta2", "0.25",
                        "--grid", "3"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("alpha,beta1,beta2,beta3,beta4\n", 0) == 0);
  CHECK(r.out.find("0.25,") != std::string::npos);
  // header plus three grid rows
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("census reports the 25-case tally") {
  const CliRun r = run({"census", "--cos2theta1", "0.75", "--cos2theta2", "0.25"});
  REQUIRE(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["cases"].size() == 25);
  CHECK(j["counts"]["total"].get<int>() == 25);
  CHECK(j["counts"]["saturating"].get<int>() == 3);
  CHECK(j["counts"]["projective"].get<int>() == 12);
  CHECK(j["counts"]["mixed"].get<int>() == 10);
}

TEST_CASE("simulate matches the library call and is byte-stable") {
  TempProblemFile file("cli_problem_sim.json", kFourDimProblem);
  const std::vector<std::string> args = {"simulate", "--problem", file.path, "--eta",
                                         "0.5",      "--trials",  "2000",    "--seed", "77"};
  const CliRun first = run(args);
  const CliRun second = run(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const TrialStats direct = run_trials(testutil::four_dim_example(), 0.5, 2000, 77);
  const Json j = Json::parse(first.out);
  CHECK(j["failures"].get<std::uint64_t>() == direct.failures);
  CHECK(j["identify1"].get<std::uint64_t>() == direct.identify1);
  CHECK(j["misidentifications"].get<std::uint64_t>() == 0);
  CHECK(j["z_score"].get<double>() == direct.z_score);
}

TEST_CASE("scenario subcommands run end to end") {
  const CliRun ks = run({"scenario", "key-sharing", "--rounds", "2000", "--seed", "9"});
  REQUIRE(ks.exit_code == 0);
  const Json kj = Json::parse(ks.out);
  CHECK(kj["disturbance_detected"].get<int>() == 0);
  CHECK(kj["valid_bits"].get<std::size_t>() == kj["bit_values"].get<std::string>().size());

  const CliRun eve =
      run({"scenario", "key-sharing", "--rounds", "2000", "--seed", "9", "--eve"});
  REQUIRE(eve.exit_code == 0);
  CHECK(Json::parse(eve.out)["disturbance_detected"].get<int>() > 0);

  const CliRun bb = run({"scenario", "black-box", "--trials", "2000", "--seed", "9"});
  REQUIRE(bb.exit_code == 0);
  const Json bj = Json::parse(bb.out);
  CHECK(bj["misidentifications"].get<int>() == 0);
  CHECK(bj["max_analytic_deviation"].get<double>() <= 1e-10);
}

TEST_CASE("an out-of-range prior exits with a named diagnostic") {
  TempProblemFile file("cli_problem_prior.json", kFourDimProblem);
  const CliRun r = run({"solve", "--problem", file.path, "--eta", "1.5"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("InvalidPrior") != std::string::npos);
}

TEST_CASE("unknown flags exit with usage text") {
  const CliRun r = run({"solve", "--nonsense", "1"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);

  const CliRun none = run({});
  CHECK(none.exit_code == 2);
}

TEST_CASE("malformed problem files name the violated invariant") {
  TempProblemFile both("cli_problem_bad1.json",
                       R"({"cos_angles": [0.5], "s1_basis": [], "s2_basis": [], "ambient_dim": 2})");
  const CliRun r1 = run({"solve", "--problem", both.path, "--eta", "0.5"});
  CHECK(r1.exit_code == 2);
  CHECK(r1.err.find("exactly one") != std::string::npos);

  TempProblemFile badw("cli_problem_bad2.json",
                       R"({"cos_angles": [0.5, 0.4], "alpha": [0.5, 0.4], "beta": [0.5, 0.5]})");
  const CliRun r2 = run({"solve", "--problem", badw.path, "--eta", "0.5"});
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.find("InvalidWeights") != std::string::npos);

  TempProblemFile garbage("cli_problem_bad3.json", "this is not json");
  const CliRun r3 = run({"solve", "--problem", garbage.path, "--eta", "0.5"});
  CHECK(r3.exit_code == 2);
  CHECK(r3.err.find("ParseError") != std::string::npos);

  const CliRun missing = run({"solve", "--problem", "no_such_file.json", "--eta", "0.5"});
  CHECK(missing.exit_code == 2);
}

TEST_CASE("help is available and exits cleanly") {
  const CliRun r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("solve") != std::string::npos);
  CHECK(r.out.find("census") != std::string::npos);
}
