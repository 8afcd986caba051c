#include "quadrature_common.hpp"

namespace sincpow {

IntegralEstimate integral_numeric_serial(PValue p, const QuadratureConfig& cfg) {
  const detail::PanelPlan plan = detail::plan_panels(p, cfg);
  const auto count = static_cast<std::size_t>(plan.panel_count);
  std::vector<double> values(count);
  std::vector<double> residuals(count);
  std::int64_t leaves = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const SegmentResult seg = detail::integrate_panel(p, static_cast<std::int64_t>(k), plan);
    values[k] = seg.value;
    residuals[k] = seg.residual;
    leaves += seg.leaves;
  }
  return detail::assemble(plan, values, residuals, leaves, cfg);
}

}  // namespace sincpow
