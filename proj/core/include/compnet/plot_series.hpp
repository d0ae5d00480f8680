#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compnet/sweep.hpp"

namespace compnet {

enum class Figure { kEdgesVertices, kCloseness, kBetweenness, kAsp, kClustering };

std::string_view figure_name(Figure figure);
std::optional<Figure> parse_figure(std::string_view text);

struct PlotPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

// One legend entry of one panel. For edges_vertices x is n and y is m; for the
// metric figures x is m and y the metric mean over samples.
struct PlotSeries {
  Figure figure = Figure::kEdgesVertices;
  std::uint64_t panel = 0;  // S (= Nei)
  std::string series_key;   // "random", "scale_free alpha=2.5", "small_world p=0.3"
  std::vector<PlotPoint> points;
};

std::string series_key(const ModelSpec& spec);

// Series ordered by panel, then model, then parameter; points ascending in x.
// When `panel` is given only that S is emitted. Throws ParameterError naming
// the missing slice when nothing matches.
std::vector<PlotSeries> emit_plot_series(std::span<const AggregateRecord> aggregates,
                                         Figure figure,
                                         std::optional<std::uint64_t> panel = std::nullopt);

inline std::vector<PlotSeries> emit_plot_series(const SweepResult& result, Figure figure,
                                                std::optional<std::uint64_t> panel = std::nullopt) {
  return emit_plot_series(result.aggregates, figure, panel);
}

// One "x,y" CSV per series plus manifest.csv (figure,panel,series_key,file,points).
// Returns the series file paths in emission order.
std::vector<std::filesystem::path> write_plot_series(std::span<const PlotSeries> series,
                                                     const std::filesystem::path& dir);

}  // namespace compnet
