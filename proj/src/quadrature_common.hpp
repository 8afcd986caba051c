#pragma once

#include <cstdint>
#include <vector>

#include "sincpow/quadrature.hpp"

namespace sincpow::detail {

// Per-call plan shared by the parallel kernel and the serial reference.
struct PanelPlan {
  double exponent = 1.0;         // p
  std::int64_t panel_count = 0;  // K
  double panel_tol = 0.0;        // raw-units tolerance per panel
  TailEnclosure tail;
  GaussLegendreRule rule;
};

PanelPlan plan_panels(PValue p, const QuadratureConfig& cfg);

// Integrates panel [k pi, (k + 1) pi].
SegmentResult integrate_panel(PValue p, std::int64_t k, const PanelPlan& plan);

// Reduces per-panel results (in ascending k) into the final estimate.
IntegralEstimate assemble(const PanelPlan& plan, const std::vector<double>& values,
                          const std::vector<double>& residuals, std::int64_t leaves,
                          const QuadratureConfig& cfg);

}  // namespace sincpow::detail
