#include "subdisc/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "subdisc/errors.hpp"

namespace subdisc {

namespace {

void check_angles(double c1, double c2, bool strict) {
  if (!(c2 > 0.0 && c1 < 1.0 && c2 <= c1))
    throw InvalidArgument("need 0 < cos^2(theta2) <= cos^2(theta1) < 1, got " +
                          std::to_string(c1) + ", " + std::to_string(c2));
  if (strict && c1 == c2)
    throw DegenerateAngles("equal angles collapse the region structure");
}

DiscriminationProblem k2_problem(double c1, double c2, double alpha, double beta) {
  return make_problem({std::sqrt(c1), std::sqrt(c2)}, {alpha, 1.0 - alpha}, {beta, 1.0 - beta});
}

MeasurementKind kind_of(Regime r1, Regime r2) {
  const bool proj1 = r1 != Regime::Interior;
  const bool proj2 = r2 != Regime::Interior;
  if (proj1 && proj2) return MeasurementKind::Projective;
  if (!proj1 && !proj2) return MeasurementKind::Povm;
  return MeasurementKind::Mixed;
}

}  // namespace

const char* to_string(Region region) {
  switch (region) {
    case Region::I:
      return "I";
    case Region::II:
      return "II";
    case Region::III:
      return "III";
    case Region::IV:
      return "IV";
    case Region::V:
      return "V";
  }
  return "?";
}

const char* to_string(MeasurementKind kind) {
  switch (kind) {
    case MeasurementKind::Projective:
      return "projective";
    case MeasurementKind::Povm:
      return "povm";
    case MeasurementKind::Mixed:
      return "mixed";
  }
  return "?";
}

Dividers dividers(double cos2_theta1, double cos2_theta2, double alpha) {
  check_angles(cos2_theta1, cos2_theta2, /*strict=*/false);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InvalidArgument("alpha must lie strictly inside (0, 1)");
  const double c1 = cos2_theta1;
  const double c2 = cos2_theta2;
  const double prod = c1 * c2;
  Dividers d;
  d.beta1 = alpha * prod / (1.0 - alpha * (1.0 - prod));
  d.beta2 = alpha * c2 / (c1 - alpha * (c1 - c2));
  d.beta3 = alpha * c1 / (c2 + alpha * (c1 - c2));
  d.beta4 = alpha / (prod + alpha * (1.0 - prod));
  return d;
}

RegionClassification classify(double cos2_theta1, double cos2_theta2, double alpha,
                              double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw InvalidArgument("beta must lie strictly inside (0, 1)");
  RegionClassification out;
  out.dividers = dividers(cos2_theta1, cos2_theta2, alpha);

  if (beta <= out.dividers.beta1)
    out.region = Region::I;
  else if (beta <= out.dividers.beta2)
    out.region = Region::II;
  else if (beta <= out.dividers.beta3)
    out.region = Region::III;
  else if (beta <= out.dividers.beta4)
    out.region = Region::IV;
  else
    out.region = Region::V;

  if (out.region != Region::I && out.region != Region::V) {
    const auto ivs = sector_intervals(k2_problem(cos2_theta1, cos2_theta2, alpha, beta));
    const double lo = std::max(ivs[0].c, ivs[1].c);
    const double hi = std::min(ivs[0].d, ivs[1].d);
    if (lo <= hi) out.intersection = SectorInterval{lo, hi};
  }
  return out;
}

CaseCensus census(double cos2_theta1, double cos2_theta2) {
  check_angles(cos2_theta1, cos2_theta2, /*strict=*/true);

  // probe alpha = 0.5 realizes all five regions for any non-degenerate angle
  // pair; the scan is a fallback for numerically squeezed dividers
  double probe = 0.5;
  Dividers div = dividers(cos2_theta1, cos2_theta2, probe);
  auto all_regions_open = [](const Dividers& d) {
    return d.beta1 > 0.0 && d.beta2 > d.beta1 && d.beta3 > d.beta2 && d.beta4 > d.beta3 &&
           d.beta4 < 1.0;
  };
  if (!all_regions_open(div)) {
    for (int step = 1; step <= 99; ++step) {
      probe = static_cast<double>(step) / 100.0;
      div = dividers(cos2_theta1, cos2_theta2, probe);
      if (all_regions_open(div)) break;
    }
    if (!all_regions_open(div))
      throw DegenerateAngles("no probe weight realizes all five regions");
  }

  const std::array<std::pair<Region, double>, 5> representatives = {{
      {Region::I, div.beta1 / 2.0},
      {Region::II, (div.beta1 + div.beta2) / 2.0},
      {Region::III, (div.beta2 + div.beta3) / 2.0},
      {Region::IV, (div.beta3 + div.beta4) / 2.0},
      {Region::V, (div.beta4 + 1.0) / 2.0},
  }};

  CaseCensus out;
  for (const auto& [region, beta] : representatives) {
    const DiscriminationProblem problem = k2_problem(cos2_theta1, cos2_theta2, probe, beta);
    const auto ivs = sector_intervals(problem);
    const std::optional<SectorInterval> sat = saturation_interval(problem);

    std::array<double, 6> edges = {0.0, ivs[0].c, ivs[0].d, ivs[1].c, ivs[1].d, 1.0};
    std::sort(edges.begin(), edges.end());
    for (int slot = 0; slot < 5; ++slot) {
      const double eta = (edges[slot] + edges[slot + 1]) / 2.0;
      const auto profile = optimal_profile(problem, eta);

      CensusCase c;
      c.region = region;
      c.alpha = probe;
      c.beta = beta;
      c.eta_slot = slot;
      c.eta = eta;
      c.regime1 = profile[0].regime;
      c.regime2 = profile[1].regime;
      c.saturates = sat.has_value() && sat->contains(eta);
      c.kind = kind_of(c.regime1, c.regime2);

      out.saturating += c.saturates ? 1 : 0;
      switch (c.kind) {
        case MeasurementKind::Projective:
          ++out.projective;
          break;
        case MeasurementKind::Povm:
          ++out.povm;
          break;
        case MeasurementKind::Mixed:
          ++out.mixed;
          break;
      }
      out.cases.push_back(c);
    }
  }
  return out;
}

std::vector<DividerCurveRow> divider_curves(double cos2_theta1, double cos2_theta2,
                                            std::size_t grid_points) {
  check_angles(cos2_theta1, cos2_theta2, /*strict=*/false);
  if (grid_points < 2) throw InvalidArgument("divider curves need at least 2 grid points");
  std::vector<DividerCurveRow> rows;
  rows.reserve(grid_points);
  for (std::size_t j = 1; j <= grid_points; ++j) {
    const double alpha = static_cast<double>(j) / static_cast<double>(grid_points + 1);
    const Dividers d = dividers(cos2_theta1, cos2_theta2, alpha);
    rows.push_back(DividerCurveRow{alpha, d.beta1, d.beta2, d.beta3, d.beta4});
  }
  return rows;
}

}  // namespace subdisc
