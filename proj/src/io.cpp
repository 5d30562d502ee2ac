#include "subdisc/io.hpp"

#include <cmath>
#include <fstream>

#include "subdisc/errors.hpp"

namespace subdisc {

namespace {

double number_from(const Json& j, const char* where) {
  if (!j.is_number()) throw ParseError(std::string(where) + " must be a number");
  return j.get<double>();
}

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex entries must be [re, im] pairs");
  return Complex(number_from(j[0], "re"), number_from(j[1], "im"));
}

std::vector<double> reals_from(const Json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string(name) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(number_from(x, name));
  return out;
}

Json interval_to_json(const SectorInterval& iv) { return Json::array({iv.c, iv.d}); }

SectorInterval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("an interval must be a [c, d] pair");
  return SectorInterval{number_from(j[0], "c"), number_from(j[1], "d")};
}

}  // namespace

Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (const Complex& x : v) out.push_back(Json::array({x.real(), x.imag()}));
  return out;
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a vector must be an array of [re, im] pairs");
  CVector out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(complex_from(x));
  return out;
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    out.push_back(std::move(row));
  }
  return out;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const CVector first = vector_from_json(j[0]);
  CMatrix m(rows, first.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const CVector row = vector_from_json(j[r]);
    if (row.size() != first.size()) throw ParseError("matrix rows have mixed lengths");
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
  }
  return m;
}

DiscriminationProblem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a problem file must be a JSON object");
  const bool subspace_form = j.contains("s1_basis") || j.contains("s2_basis") ||
                             j.contains("ambient_dim");
  const bool angle_form = j.contains("cos_angles");
  if (subspace_form == angle_form)
    throw ParseError("exactly one of the subspace form {ambient_dim, s1_basis, s2_basis} and "
                     "the angle form {cos_angles} must be present");

  std::vector<double> alpha, beta;
  if (j.contains("alpha")) alpha = reals_from(j["alpha"], "alpha");
  if (j.contains("beta")) beta = reals_from(j["beta"], "beta");

  if (angle_form)
    return make_problem(reals_from(j["cos_angles"], "cos_angles"), std::move(alpha),
                        std::move(beta));

  for (const char* key : {"ambient_dim", "s1_basis", "s2_basis"})
    if (!j.contains(key))
      throw ParseError(std::string("subspace form problem file is missing ") + key);
  if (!j["ambient_dim"].is_number_unsigned())
    throw ParseError("ambient_dim must be a positive integer");
  const auto ambient = j["ambient_dim"].get<std::size_t>();

  auto basis_from = [](const Json& arr, const char* name) {
    if (!arr.is_array() || arr.empty())
      throw ParseError(std::string(name) + " must be a non-empty array of vectors");
    std::vector<CVector> out;
    out.reserve(arr.size());
    for (const Json& v : arr) out.push_back(vector_from_json(v));
    return out;
  };
  const Subspace s1 = make_subspace(ambient, basis_from(j["s1_basis"], "s1_basis"));
  const Subspace s2 = make_subspace(ambient, basis_from(j["s2_basis"], "s2_basis"));
  return problem_from_subspaces(s1, s2, std::move(alpha), std::move(beta));
}

Json problem_to_json(const DiscriminationProblem& problem) {
  Json j;
  if (problem.has_frames()) {
    const JordanDecomposition& jd = *problem.jordan;
    j["ambient_dim"] = jd.ambient_dim();
    Json b1 = Json::array(), b2 = Json::array();
    for (std::size_t i = 0; i < jd.k; ++i) {
      b1.push_back(vector_to_json(jd.basis1[i]));
      b2.push_back(vector_to_json(jd.basis2[i]));
    }
    j["s1_basis"] = std::move(b1);
    j["s2_basis"] = std::move(b2);
  } else {
    j["cos_angles"] = problem.cos_angles;
  }
  j["alpha"] = problem.alpha;
  j["beta"] = problem.beta;
  return j;
}

DiscriminationProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("problem file " + path + " is not valid JSON: " + e.what());
  }
  return problem_from_json(j);
}

SolutionFile make_solution_file(const PovmSolution& solution,
                                const DiscriminationProblem& problem) {
  SolutionFile file = make_solution_file(problem, solution.eta);
  file.pi0 = solution.pi0;
  file.pi1 = solution.pi1;
  file.pi2 = solution.pi2;
  return file;
}

SolutionFile make_solution_file(const DiscriminationProblem& problem, double eta) {
  SolutionFile file;
  file.eta = eta;
  const auto profile = optimal_profile(problem, eta);
  const auto intervals = sector_intervals(problem);
  for (std::size_t i = 0; i < problem.k; ++i) {
    file.sectors.push_back(SolutionFile::Sector{i, to_string(profile[i].regime),
                                                profile[i].q1_bar, profile[i].q2_bar,
                                                profile[i].lambda, intervals[i]});
  }
  file.saturation = saturation_interval(problem);
  file.q_total = failure_probability(problem, eta);
  file.fidelity = fidelity(problem);
  file.fidelity_bound = 2.0 * std::sqrt(eta * (1.0 - eta)) * file.fidelity;
  file.saturates = file.saturation.has_value() && file.saturation->contains(eta);
  return file;
}

Json solution_to_json(const SolutionFile& solution) {
  Json j;
  j["eta"] = solution.eta;
  Json sectors = Json::array();
  for (const SolutionFile::Sector& s : solution.sectors) {
    Json row;
    row["index"] = s.index;
    row["regime"] = s.regime;
    row["q1_bar"] = s.q1_bar;
    row["q2_bar"] = s.q2_bar;
    row["lambda"] = s.lambda;
    row["interval"] = interval_to_json(s.interval);
    sectors.push_back(std::move(row));
  }
  j["sectors"] = std::move(sectors);
  j["saturation_interval"] =
      solution.saturation ? interval_to_json(*solution.saturation) : Json(nullptr);
  j["q_total"] = solution.q_total;
  j["fidelity"] = solution.fidelity;
  j["fidelity_bound"] = solution.fidelity_bound;
  j["saturates"] = solution.saturates;
  if (solution.pi0) {
    j["pi0"] = matrix_to_json(*solution.pi0);
    j["pi1"] = matrix_to_json(*solution.pi1);
    j["pi2"] = matrix_to_json(*solution.pi2);
  }
  return j;
}

SolutionFile solution_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a solution file must be a JSON object");
  SolutionFile out;
  try {
    out.eta = number_from(j.at("eta"), "eta");
    for (const Json& row : j.at("sectors")) {
      SolutionFile::Sector s;
      s.index = row.at("index").get<std::size_t>();
      s.regime = row.at("regime").get<std::string>();
      s.q1_bar = number_from(row.at("q1_bar"), "q1_bar");
      s.q2_bar = number_from(row.at("q2_bar"), "q2_bar");
      s.lambda = number_from(row.at("lambda"), "lambda");
      s.interval = interval_from_json(row.at("interval"));
      out.sectors.push_back(std::move(s));
    }
    if (!j.at("saturation_interval").is_null())
      out.saturation = interval_from_json(j.at("saturation_interval"));
    out.q_total = number_from(j.at("q_total"), "q_total");
    out.fidelity = number_from(j.at("fidelity"), "fidelity");
    out.fidelity_bound = number_from(j.at("fidelity_bound"), "fidelity_bound");
    out.saturates = j.at("saturates").get<bool>();
    if (j.contains("pi0")) {
      out.pi0 = matrix_from_json(j.at("pi0"));
      out.pi1 = matrix_from_json(j.at("pi1"));
      out.pi2 = matrix_from_json(j.at("pi2"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed solution file: ") + e.what());
  }
  return out;
}

}  // namespace subdisc
