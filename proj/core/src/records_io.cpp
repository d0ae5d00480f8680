#include "compnet/records_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "compnet/errors.hpp"

namespace compnet {

namespace {

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

class RowReader {
 public:
  RowReader(std::string_view line, std::size_t line_no, std::size_t expected)
      : fields_(split_row(line)), line_no_(line_no) {
    if (fields_.size() != expected) {
      throw ParseError("expected " + std::to_string(expected) + " fields, found " +
                           std::to_string(fields_.size()),
                       line_no_);
    }
  }

  std::string_view text(std::size_t i) const { return fields_[i]; }

  std::uint64_t integer(std::size_t i) const {
    std::uint64_t value = 0;
    const auto f = fields_[i];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
      fail(i, "an unsigned integer");
    }
    return value;
  }

  double real(std::size_t i) const {
    double value = 0.0;
    const auto f = fields_[i];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size() || !std::isfinite(value)) {
      fail(i, "a finite real");
    }
    return value;
  }

  std::optional<std::uint64_t> optional_integer(std::size_t i) const {
    if (fields_[i].empty()) return std::nullopt;
    return integer(i);
  }

  std::optional<double> optional_real(std::size_t i) const {
    if (fields_[i].empty()) return std::nullopt;
    return real(i);
  }

  // Columns 0..6: model,n,m,s,nei,alpha,p.
  ModelSpec spec() const {
    ModelSpec spec;
    const auto model = parse_model(text(0));
    if (!model || text(0) != model_name(*model)) {
      throw ParseError("unknown model '" + std::string(text(0)) + "'", line_no_);
    }
    spec.model = *model;
    spec.n = integer(1);
    spec.m = integer(2);
    spec.s = integer(3);
    spec.nei = optional_integer(4);
    spec.alpha = optional_real(5);
    spec.p = optional_real(6);
    try {
      spec.validate();
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line_no_);
    }
    return spec;
  }

  [[noreturn]] void fail(std::size_t i, std::string_view what) const {
    throw ParseError("field " + std::to_string(i + 1) + " ('" + std::string(fields_[i]) +
                         "') is not " + std::string(what),
                     line_no_);
  }

 private:
  std::vector<std::string_view> fields_;
  std::size_t line_no_;
};

void check_header(std::istream& in, std::string_view expected, std::string_view kind) {
  std::string header;
  if (!std::getline(in, header)) throw VersionError(std::string(kind) + " file is empty");
  if (strip_cr(header) != expected) {
    throw VersionError(std::string(kind) + " header mismatch: expected '" + std::string(expected) +
                       "', found '" + std::string(strip_cr(header)) + "'");
  }
}

void write_spec_columns(std::ostream& out, const ModelSpec& spec) {
  out << model_name(spec.model) << ',' << spec.n << ',' << spec.m << ',' << spec.s << ',';
  if (spec.nei) out << *spec.nei;
  out << ',';
  if (spec.alpha) out << format_real(*spec.alpha);
  out << ',';
  if (spec.p) out << format_real(*spec.p);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_records(std::ostream& out, std::span<const MetricRecord> records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    write_spec_columns(out, r.spec);
    out << ',' << r.sample_index << ',' << r.seed << ',' << format_real(r.metrics.mean_closeness)
        << ',' << format_real(r.metrics.mean_betweenness) << ','
        << format_real(r.metrics.avg_shortest_path) << ','
        << format_real(r.metrics.global_clustering) << '\n';
  }
}

std::vector<MetricRecord> read_records(std::istream& in) {
  check_header(in, kRecordsHeader, "records");
  std::vector<MetricRecord> records;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row_text = strip_cr(line);
    if (row_text.empty()) continue;
    const RowReader row(row_text, line_no, 13);
    MetricRecord r;
    r.spec = row.spec();
    r.n = r.spec.n;
    r.m = r.spec.m;
    r.sample_index = row.integer(7);
    r.seed = row.integer(8);
    r.metrics.mean_closeness = row.real(9);
    r.metrics.mean_betweenness = row.real(10);
    r.metrics.avg_shortest_path = row.real(11);
    r.metrics.global_clustering = row.real(12);
    records.push_back(std::move(r));
  }
  return records;
}

void write_aggregates(std::ostream& out, std::span<const AggregateRecord> aggregates) {
  out << kAggregatesHeader << '\n';
  auto summary = [&out](const Summary& s) {
    out << ',' << format_real(s.mean) << ',' << format_real(s.sd);
  };
  for (const auto& a : aggregates) {
    write_spec_columns(out, a.spec);
    out << ',' << a.samples;
    summary(a.mean_closeness);
    summary(a.mean_betweenness);
    summary(a.avg_shortest_path);
    summary(a.global_clustering);
    out << '\n';
  }
}

std::vector<AggregateRecord> read_aggregates(std::istream& in) {
  check_header(in, kAggregatesHeader, "aggregates");
  std::vector<AggregateRecord> aggregates;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row_text = strip_cr(line);
    if (row_text.empty()) continue;
    const RowReader row(row_text, line_no, 16);
    AggregateRecord a;
    a.spec = row.spec();
    a.samples = row.integer(7);
    a.mean_closeness = {row.real(8), row.real(9)};
    a.mean_betweenness = {row.real(10), row.real(11)};
    a.avg_shortest_path = {row.real(12), row.real(13)};
    a.global_clustering = {row.real(14), row.real(15)};
    aggregates.push_back(std::move(a));
  }
  return aggregates;
}

void write_manifest(std::ostream& out, const SweepResult& result) {
  out << format_sweep_config(result.config) << "artifact_version=" << result.artifact_version
      << '\n'
      << "record_count=" << result.records.size() << '\n'
      << "aggregate_count=" << result.aggregates.size() << '\n';
}

void write_records(const SweepResult& result, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_records(out, result.records);
}

std::vector<MetricRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open records file " + path.string(), 0);
  return read_records(in);
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_records(result, dir / "records.csv");
  auto aggregates = open_for_write(dir / "aggregates.csv");
  write_aggregates(aggregates, result.aggregates);
  auto manifest = open_for_write(dir / "manifest.txt");
  write_manifest(manifest, result);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace compnet
