#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "compnet/metrics.hpp"
#include "compnet/sweep.hpp"

namespace compnet {

inline constexpr std::string_view kRecordsHeader =
    "model,n,m,s,nei,alpha,p,sample_index,seed,"
    "mean_closeness,mean_betweenness,avg_shortest_path,global_clustering";

inline constexpr std::string_view kAggregatesHeader =
    "model,n,m,s,nei,alpha,p,samples,"
    "mean_closeness_mean,mean_closeness_sd,mean_betweenness_mean,mean_betweenness_sd,"
    "avg_shortest_path_mean,avg_shortest_path_sd,global_clustering_mean,global_clustering_sd";

// Records CSV. Inapplicable spec fields are empty; reals carry 12 significant
// digits. Readers throw VersionError on a header mismatch and ParseError (with
// the 1-based line number) on a malformed row.
void write_records(std::ostream& out, std::span<const MetricRecord> records);
std::vector<MetricRecord> read_records(std::istream& in);

void write_aggregates(std::ostream& out, std::span<const AggregateRecord> aggregates);
std::vector<AggregateRecord> read_aggregates(std::istream& in);

// key=value lines: the config echo, artifact_version, record_count, aggregate_count.
void write_manifest(std::ostream& out, const SweepResult& result);

void write_records(const SweepResult& result, const std::filesystem::path& path);
std::vector<MetricRecord> read_records(const std::filesystem::path& path);

// records.csv, aggregates.csv and manifest.txt under dir (created if missing).
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir);

// Canonical edge list: "u v" per line with u < v, lines ascending.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace compnet
