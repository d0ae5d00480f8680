#include "compnet/edge_audit.hpp"

#include <cstdio>
#include <ostream>

#include "compnet/edge_budget.hpp"
#include "compnet/generators.hpp"
#include "compnet/plot_series.hpp"
#include "compnet/sweep.hpp"

namespace compnet {

bool EdgeAuditResult::ok() const {
  for (const auto& row : rows) {
    if (!row.matches()) return false;
  }
  return true;
}

std::vector<EdgeAuditRow> EdgeAuditResult::mismatches() const {
  std::vector<EdgeAuditRow> out;
  for (const auto& row : rows) {
    if (!row.matches()) out.push_back(row);
  }
  return out;
}

EdgeAuditResult audit_edge_identity(const SweepConfig& config) {
  EdgeAuditResult result;
  for (const ModelSpec& spec : build_design(config)) {
    RngStream rng(sample_seed(spec, config.base_seed, 0));
    const Graph g = generate(spec, rng);
    result.rows.push_back({spec, scale_free_edge_count(spec.n, spec.s), g.vertex_count(),
                           g.edge_count()});
  }
  return result;
}

void write_audit_table(std::ostream& out, const std::vector<EdgeAuditRow>& rows) {
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %8s %4s %12s %10s %10s\n", "series", "n", "S",
                "expected_m", "got_n", "got_m");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-28s %8llu %4llu %12llu %10llu %10llu\n",
                  series_key(r.spec).c_str(), static_cast<unsigned long long>(r.spec.n),
                  static_cast<unsigned long long>(r.spec.s),
                  static_cast<unsigned long long>(r.expected_m),
                  static_cast<unsigned long long>(r.vertices),
                  static_cast<unsigned long long>(r.edges));
    out << line;
  }
}

}  // namespace compnet
