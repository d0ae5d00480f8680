#include "compnet/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "compnet/generators.hpp"

#ifndef COMPNET_VERSION_STRING
#define COMPNET_VERSION_STRING "0.0.0"
#endif

namespace compnet {

namespace {

// Shifted two-pass moments: identical inputs give exactly that value and sd 0.
template <typename Get>
Summary summarize(std::span<const MetricRecord> records, Get get) {
  const double pivot = get(records.front());
  double shift_sum = 0.0;
  for (const auto& r : records) shift_sum += get(r) - pivot;
  const auto count = static_cast<double>(records.size());
  const double mean = pivot + shift_sum / count;
  double squares = 0.0;
  for (const auto& r : records) {
    const double d = get(r) - mean;
    squares += d * d;
  }
  return {mean, std::sqrt(squares / count)};
}

}  // namespace

std::string artifact_version() { return COMPNET_VERSION_STRING; }

std::vector<StreamLabel> sample_labels(const ModelSpec& spec, std::uint64_t sample_index) {
  std::string parameter = "-";
  if (spec.alpha) parameter = "alpha=" + format_real(*spec.alpha);
  if (spec.p) parameter = "p=" + format_real(*spec.p);
  return {std::string(model_name(spec.model)), static_cast<std::int64_t>(spec.n),
          static_cast<std::int64_t>(spec.s), parameter, static_cast<std::int64_t>(sample_index)};
}

std::uint64_t sample_seed(const ModelSpec& spec, std::uint64_t base_seed,
                          std::uint64_t sample_index) {
  return derive_seed(base_seed, sample_labels(spec, sample_index));
}

MetricRecord run_sample(const ModelSpec& spec, std::uint64_t base_seed,
                        std::uint64_t sample_index) {
  const std::uint64_t seed = sample_seed(spec, base_seed, sample_index);
  RngStream rng(seed);
  const Graph g = generate(spec, rng);
  return metric_report(g, spec, seed, sample_index);
}

AggregateRecord aggregate(std::span<const MetricRecord> records) {
  if (records.empty()) throw std::logic_error("aggregate: no records");
  for (const auto& r : records) {
    if (!(r.spec == records.front().spec)) {
      throw std::logic_error("aggregate: records mix specs (" + records.front().spec.describe() +
                             " vs " + r.spec.describe() + ")");
    }
  }
  AggregateRecord out;
  out.spec = records.front().spec;
  out.samples = records.size();
  out.mean_closeness = summarize(records, [](const MetricRecord& r) { return r.metrics.mean_closeness; });
  out.mean_betweenness = summarize(records, [](const MetricRecord& r) { return r.metrics.mean_betweenness; });
  out.avg_shortest_path = summarize(records, [](const MetricRecord& r) { return r.metrics.avg_shortest_path; });
  out.global_clustering = summarize(records, [](const MetricRecord& r) { return r.metrics.global_clustering; });
  return out;
}

std::vector<AggregateRecord> aggregate_all(std::span<const MetricRecord> records) {
  std::vector<AggregateRecord> out;
  std::size_t start = 0;
  while (start < records.size()) {
    std::size_t end = start + 1;
    while (end < records.size() && records[end].spec == records[start].spec) ++end;
    out.push_back(aggregate(records.subspan(start, end - start)));
    start = end;
  }
  return out;
}

SweepResult execute_sweep(const SweepConfig& config, unsigned workers) {
  const std::vector<ModelSpec> design = build_design(config);
  const std::size_t samples = config.samples;
  const std::size_t tasks = design.size() * samples;

  std::vector<std::optional<MetricRecord>> slots(tasks);
  std::vector<std::string> failures(tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto work = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      const ModelSpec& spec = design[task / samples];
      const std::size_t sample = task % samples;
      try {
        slots[task] = run_sample(spec, config.base_seed, sample);
      } catch (const std::exception& e) {
        failures[task] = e.what();
        failed.store(true);
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t task = 0; task < tasks; ++task) {
    if (!failures[task].empty()) {
      throw SweepError("sample " + std::to_string(task % samples) + " of " +
                       design[task / samples].describe() + " failed: " + failures[task]);
    }
  }

  SweepResult result;
  result.config = config;
  result.artifact_version = artifact_version();
  result.records.reserve(tasks);
  for (auto& slot : slots) result.records.push_back(std::move(*slot));
  result.aggregates = aggregate_all(result.records);
  return result;
}

}  // namespace compnet
