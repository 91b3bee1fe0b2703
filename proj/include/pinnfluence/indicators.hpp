#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinnfluence/geometry.hpp"

namespace pinnfluence {

// Closed disc.
struct RegionSpec {
  Point2 center;
  double radius = 0.0;

  bool contains(Point2 p) const noexcept;
};

// Disc of `factor` times the cylinder radius around the cylinder centre.
RegionSpec cylinder_region(const DomainSpec& spec, double factor = 1.5);

// sum_{selected} |row_i| / sum_i |row_i|. Throws NumericalError when the row
// has no mass.
double influence_share(std::span<const double> influence_row, const std::vector<bool>& selected);

// Share of absolute influence carried by training points with larger x than
// the test point. Throws NumericalError when the row has no mass.
double directional_indicator(Point2 test, std::span<const double> influence_row, std::span<const Point2> train_points);

// Share of absolute influence carried by training points inside the region.
double region_indicator(const RegionSpec& region, std::span<const double> influence_row,
                        std::span<const Point2> train_points);

struct IndicatorSummary {
  double mean_di = 0.0;
  double mean_oi = 0.0;
  std::size_t count = 0;     // rows that entered the means
  std::size_t excluded = 0;  // all-zero rows
};

// Accumulates per-row indicators into means; all-zero rows are counted as
// excluded rather than contributing 0/0.
class IndicatorAccumulator {
 public:
  void add(Point2 test, std::span<const double> influence_row, std::span<const Point2> train_points,
           const RegionSpec& region);
  IndicatorSummary summary() const;

 private:
  double sum_di_ = 0.0;
  double sum_oi_ = 0.0;
  std::size_t count_ = 0;
  std::size_t excluded_ = 0;
};

struct IndicatorRow {
  std::string target;
  IndicatorSummary interior;
  IndicatorSummary boundary;
  IndicatorSummary combined;
};

struct IndicatorReport {
  std::vector<IndicatorRow> rows;  // kTableTargets order
  double lambda = 0.0;
  RegionSpec region;
  std::string model_tag;
};

struct HeatmapGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  // Row-major, ny rows from bottom to top; nullopt marks empty cells.
  std::vector<std::optional<double>> cells;

  double cell_width() const noexcept { return (x_max - x_min) / static_cast<double>(nx); }
  double cell_height() const noexcept { return (y_max - y_min) / static_cast<double>(ny); }
  const std::optional<double>& at(std::size_t ix, std::size_t iy) const { return cells[iy * nx + ix]; }
};

inline constexpr double kLogClamp = 1e-300;

// Mean of log10 |value| per cell over the rectangle of `spec`. Values below
// kLogClamp are clamped before the log.
HeatmapGrid heatmap_grid(std::span<const Point2> train_points, std::span<const double> values, const DomainSpec& spec,
                         std::size_t nx, std::size_t ny);

// Closed polyline approximating the region boundary.
std::vector<Point2> region_outline(const RegionSpec& region, std::size_t segments = 128);

}  // namespace pinnfluence
