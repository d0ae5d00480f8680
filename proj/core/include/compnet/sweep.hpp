#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "compnet/metrics.hpp"
#include "compnet/model_spec.hpp"
#include "compnet/rng.hpp"
#include "compnet/sweep_config.hpp"

namespace compnet {

// Mean and population standard deviation of one metric over a spec's samples.
struct Summary {
  double mean = 0.0;
  double sd = 0.0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct AggregateRecord {
  ModelSpec spec;
  std::uint64_t samples = 0;
  Summary mean_closeness;
  Summary mean_betweenness;
  Summary avg_shortest_path;
  Summary global_clustering;

  friend bool operator==(const AggregateRecord&, const AggregateRecord&) = default;
};

struct SweepResult {
  SweepConfig config;
  std::string artifact_version;
  std::vector<MetricRecord> records;        // sorted by spec then sample_index
  std::vector<AggregateRecord> aggregates;  // one per spec, same order
};

// A sample failed; the message names the spec and sample index.
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string artifact_version();

// Labels identifying one sample's stream: model, n, S, alpha-or-p, sample index.
std::vector<StreamLabel> sample_labels(const ModelSpec& spec, std::uint64_t sample_index);
std::uint64_t sample_seed(const ModelSpec& spec, std::uint64_t base_seed,
                          std::uint64_t sample_index);

MetricRecord run_sample(const ModelSpec& spec, std::uint64_t base_seed,
                        std::uint64_t sample_index);

// Throws std::logic_error when the records are empty or disagree on the spec.
AggregateRecord aggregate(std::span<const MetricRecord> records);

// Groups consecutive records by spec. Records must already be sorted.
std::vector<AggregateRecord> aggregate_all(std::span<const MetricRecord> records);

// Runs every (spec, sample) pair on `workers` threads (0 = hardware
// concurrency). The result does not depend on the worker count.
SweepResult execute_sweep(const SweepConfig& config, unsigned workers = 0);

}  // namespace compnet
