#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subdisc/discriminate.hpp"

namespace subdisc {

// Insertion-ordered JSON keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

// Complex scalars travel as [re, im]; vectors as arrays of pairs; matrices as
// arrays of row vectors.
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Problem files come in two forms:
//   {"ambient_dim": n, "s1_basis": [...], "s2_basis": [...], "alpha"?, "beta"?}
//   {"cos_angles": [...], "alpha"?, "beta"?}
// Weights default to uniform when omitted. Exactly one form must be present;
// the loaded problem is validated like any other.
DiscriminationProblem problem_from_json(const Json& j);
Json problem_to_json(const DiscriminationProblem& problem);
DiscriminationProblem load_problem_file(const std::string& path);

// Serialized solve result. Matrices are present when the problem carried
// frames.
struct SolutionFile {
  double eta = 0.0;
  struct Sector {
    std::size_t index = 0;
    std::string regime;
    double q1_bar = 0.0;
    double q2_bar = 0.0;
    double lambda = 0.0;
    SectorInterval interval;
  };
  std::vector<Sector> sectors;
  std::optional<SectorInterval> saturation;
  double q_total = 0.0;
  double fidelity = 0.0;
  double fidelity_bound = 0.0;
  bool saturates = false;
  std::optional<CMatrix> pi0, pi1, pi2;
};

SolutionFile make_solution_file(const PovmSolution& solution,
                                const DiscriminationProblem& problem);
// Scalar pipeline variant: intervals and profile only, no matrices.
SolutionFile make_solution_file(const DiscriminationProblem& problem, double eta);

Json solution_to_json(const SolutionFile& solution);
SolutionFile solution_from_json(const Json& j);

}  // namespace subdisc
