#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "compnet/model_spec.hpp"
#include "compnet/sweep_config.hpp"

namespace compnet {

struct EdgeAuditRow {
  ModelSpec spec;
  std::uint64_t expected_m = 0;  // scale-free edge count for (n, S)
  std::uint64_t vertices = 0;    // as generated
  std::uint64_t edges = 0;       // as generated

  bool matches() const { return vertices == spec.n && edges == expected_m; }
};

struct EdgeAuditResult {
  std::vector<EdgeAuditRow> rows;  // one per design spec, design order

  bool ok() const;
  std::vector<EdgeAuditRow> mismatches() const;
};

// Generates sample 0 of every spec in the design and records its (n, m).
EdgeAuditResult audit_edge_identity(const SweepConfig& config);

// Fixed-width table: model, n, S, parameter, expected m, generated n, generated m.
void write_audit_table(std::ostream& out, const std::vector<EdgeAuditRow>& rows);

}  // namespace compnet
