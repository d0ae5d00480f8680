#include "compnet/plot_series.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

#include "compnet/errors.hpp"

namespace compnet {

namespace {

double figure_value(const AggregateRecord& a, Figure figure) {
  switch (figure) {
    case Figure::kEdgesVertices:
      return static_cast<double>(a.spec.m);
    case Figure::kCloseness:
      return a.mean_closeness.mean;
    case Figure::kBetweenness:
      return a.mean_betweenness.mean;
    case Figure::kAsp:
      return a.avg_shortest_path.mean;
    case Figure::kClustering:
      return a.global_clustering.mean;
  }
  return 0.0;
}

std::string file_slug(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == ' ') {
      out += '_';
    } else if (c != '=') {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view figure_name(Figure figure) {
  switch (figure) {
    case Figure::kEdgesVertices:
      return "edges_vertices";
    case Figure::kCloseness:
      return "closeness";
    case Figure::kBetweenness:
      return "betweenness";
    case Figure::kAsp:
      return "asp";
    case Figure::kClustering:
      return "clustering";
  }
  return "unknown";
}

std::optional<Figure> parse_figure(std::string_view text) {
  for (Figure f : {Figure::kEdgesVertices, Figure::kCloseness, Figure::kBetweenness, Figure::kAsp,
                   Figure::kClustering}) {
    if (text == figure_name(f)) return f;
  }
  return std::nullopt;
}

std::string series_key(const ModelSpec& spec) {
  std::string key(model_name(spec.model));
  if (spec.alpha) key += " alpha=" + format_real(*spec.alpha);
  if (spec.p) key += " p=" + format_real(*spec.p);
  return key;
}

std::vector<PlotSeries> emit_plot_series(std::span<const AggregateRecord> aggregates,
                                         Figure figure, std::optional<std::uint64_t> panel) {
  // (panel, model, parameter) -> series; parameter is alpha or p, -1 when absent.
  using Key = std::tuple<std::uint64_t, Model, double>;
  std::map<Key, PlotSeries> grouped;
  for (const auto& a : aggregates) {
    if (panel && a.spec.s != *panel) continue;
    const double parameter = a.spec.alpha.value_or(a.spec.p.value_or(-1.0));
    auto& series = grouped[Key{a.spec.s, a.spec.model, parameter}];
    if (series.series_key.empty()) {
      series.figure = figure;
      series.panel = a.spec.s;
      series.series_key = series_key(a.spec);
    }
    const bool by_vertices = figure == Figure::kEdgesVertices;
    series.points.push_back({by_vertices ? static_cast<double>(a.spec.n)
                                         : static_cast<double>(a.spec.m),
                             figure_value(a, figure)});
  }
  if (grouped.empty()) {
    std::string slice = "figure " + std::string(figure_name(figure));
    if (panel) slice += ", S=" + std::to_string(*panel);
    throw ParameterError("no aggregates available for " + slice);
  }

  std::vector<PlotSeries> out;
  out.reserve(grouped.size());
  for (auto& [key, series] : grouped) {
    std::stable_sort(series.points.begin(), series.points.end(),
                     [](const PlotPoint& a, const PlotPoint& b) { return a.x < b.x; });
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<std::filesystem::path> write_plot_series(std::span<const PlotSeries> series,
                                                     const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> files;
  std::ofstream manifest(dir / "manifest.csv", std::ios::binary);
  if (!manifest) throw std::runtime_error("cannot write " + (dir / "manifest.csv").string());
  manifest << "figure,panel,series_key,file,points\n";
  for (const auto& s : series) {
    const std::string name = std::string(figure_name(s.figure)) + "_S" + std::to_string(s.panel) +
                             "_" + file_slug(s.series_key) + ".csv";
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << "x,y\n";
    for (const auto& p : s.points) out << format_real(p.x) << ',' << format_real(p.y) << '\n';
    manifest << figure_name(s.figure) << ',' << s.panel << ',' << s.series_key << ',' << name << ','
             << s.points.size() << '\n';
    files.push_back(dir / name);
  }
  return files;
}

}  // namespace compnet
