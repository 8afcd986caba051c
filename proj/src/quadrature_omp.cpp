#include <exception>

#include <omp.h>

#include "quadrature_common.hpp"

namespace sincpow {

IntegralEstimate integral_numeric(PValue p, const QuadratureConfig& cfg) {
  const detail::PanelPlan plan = detail::plan_panels(p, cfg);
  const std::int64_t count = plan.panel_count;
  std::vector<double> values(static_cast<std::size_t>(count));
  std::vector<double> residuals(static_cast<std::size_t>(count));
  std::int64_t leaves = 0;
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : leaves)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      const SegmentResult seg = detail::integrate_panel(p, k, plan);
      values[static_cast<std::size_t>(k)] = seg.value;
      residuals[static_cast<std::size_t>(k)] = seg.residual;
      leaves += seg.leaves;
    } catch (...) {
#pragma omp critical(sincpow_quadrature_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  // Ascending-k pairwise reduction happens serially in assemble.
  return detail::assemble(plan, values, residuals, leaves, cfg);
}

}  // namespace sincpow
