#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subdisc/discriminate.hpp"

namespace subdisc {

// k = 2 parameter-plane analysis. Weight points are written (alpha, beta)
// with alpha the first-sector weight of the first state and beta the
// first-sector weight of the second; the convention cos^2(theta1) >=
// cos^2(theta2) is required throughout.

enum class Region { I, II, III, IV, V };
const char* to_string(Region region);

// The four hyperbolas separating the five overlap patterns of the two sector
// intervals, evaluated at a given alpha.
struct Dividers {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double beta4 = 0.0;
};

Dividers dividers(double cos2_theta1, double cos2_theta2, double alpha);

struct RegionClassification {
  Region region = Region::III;
  Dividers dividers;
  std::optional<SectorInterval> intersection;  // of the two sector intervals
};

// beta exactly on a divider goes to the lower-index region.
RegionClassification classify(double cos2_theta1, double cos2_theta2, double alpha, double beta);

enum class MeasurementKind { Projective, Povm, Mixed };
const char* to_string(MeasurementKind kind);

struct CensusCase {
  Region region = Region::III;
  double alpha = 0.0;  // representative weight point
  double beta = 0.0;
  int eta_slot = 0;  // 0..4, position among the sorted interval endpoints
  double eta = 0.0;  // subinterval midpoint actually probed
  Regime regime1 = Regime::Interior;
  Regime regime2 = Regime::Interior;
  bool saturates = false;
  MeasurementKind kind = MeasurementKind::Mixed;
};

struct CaseCensus {
  std::vector<CensusCase> cases;
  int saturating = 0;
  int projective = 0;
  int povm = 0;
  int mixed = 0;
};

// Probes one representative weight point per region and one prior per
// subinterval of the sorted interval endpoints: 25 qualitatively distinct
// cases for non-degenerate angles. Equal angles collapse the region
// structure and are rejected.
CaseCensus census(double cos2_theta1, double cos2_theta2);

struct DividerCurveRow {
  double alpha = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double beta4 = 0.0;
};

// Divider values on a uniform alpha grid over (0, 1) exclusive, for external
// plotting.
std::vector<DividerCurveRow> divider_curves(double cos2_theta1, double cos2_theta2,
                                            std::size_t grid_points);

}  // namespace subdisc
