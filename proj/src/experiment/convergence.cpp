#include "fraclaw/experiment/convergence.hpp"

#include <future>
#include <vector>

#include "fraclaw/errors.hpp"
#include "fraclaw/experiment/norms.hpp"
#include "fraclaw/experiment/presets.hpp"
#include "fraclaw/schemes/driver.hpp"

namespace fraclaw {

ErrorTable convergence_study(const RunConfig& base, std::span<const double> dx_list, double reference_dx) {
  RunConfig cfg = base;
  cfg.study_dx.assign(dx_list.begin(), dx_list.end());
  cfg.reference_dx = reference_dx;
  if (cfg.study_dx.empty()) throw ConfigError("study_dx", "empty list");
  validate(cfg);

  const SchemeConfig scheme = to_scheme_config(cfg);
  const InitialData u0 = make_preset(cfg.preset).data;
  auto solve = [&](double dx) { return run(scheme, u0, cfg.grid_with_dx(dx)).final_state(); };

  auto reference = std::async(std::launch::async, solve, reference_dx);
  std::vector<std::future<PolyState>> runs;
  for (double dx : cfg.study_dx) runs.push_back(std::async(std::launch::async, solve, dx));

  const PolyState ref = reference.get();
  const NormKind kinds[3] = {NormKind::l1, NormKind::l2, NormKind::linf};
  ErrorTable table;
  for (std::size_t m = 0; m < runs.size(); ++m) {
    const PolyState u = runs[m].get();
    ErrorRow row;
    row.dx = cfg.study_dx[m];
    for (std::size_t p = 0; p < 3; ++p) {
      row.error[p] = difference_norm(u, ref, kinds[p]);
      const double r = norm(ref, kinds[p]);
      row.relative[p] = r > 0.0 ? row.error[p] / r : 0.0;
    }
    table.rows.push_back(row);
  }
  table.compute_rates();
  return table;
}

ErrorTable convergence_study(const RunConfig& base) {
  return convergence_study(base, base.study_dx, base.reference_dx);
}

}  // namespace fraclaw
