#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace pinnfluence {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

enum class Segment { inlet, outlet, top, bottom, cylinder };

std::string_view to_string(Segment s) noexcept;
// Throws ValidationError for unknown names.
Segment segment_from_string(std::string_view name);

// Rectangular channel with one circular obstacle. Default values are the
// benchmark cavity: [0, 2.2] x [0, 0.41], cylinder of radius 0.05 at (0.2, 0.2).
struct DomainSpec {
  double x_min = 0.0;
  double x_max = 2.2;
  double y_min = 0.0;
  double y_max = 0.41;
  Point2 cylinder_center{0.2, 0.2};
  double cylinder_radius = 0.05;

  // Throws ValidationError naming the offending field.
  void validate() const;

  double width() const noexcept { return x_max - x_min; }
  double height() const noexcept { return y_max - y_min; }
  double perimeter() const noexcept;  // rectangle plus cylinder circumference

  // Strictly inside the rectangle and strictly outside the cylinder.
  bool contains(Point2 p) const noexcept;
};

struct BoundaryPoint {
  Point2 at;
  Segment segment;
};

// Training points. Interior points come first in the flat index space,
// boundary points follow. Per-point loss weights are N / N_pde for interior
// and N / N_bc for boundary points, so (1/N) sum w_i l_i equals the sum of
// the two group means.
class CollocationSet {
 public:
  CollocationSet() = default;
  CollocationSet(std::vector<Point2> interior, std::vector<BoundaryPoint> boundary);

  const std::vector<Point2>& interior() const noexcept { return interior_; }
  const std::vector<BoundaryPoint>& boundary() const noexcept { return boundary_; }

  std::size_t n_interior() const noexcept { return interior_.size(); }
  std::size_t n_boundary() const noexcept { return boundary_.size(); }
  std::size_t size() const noexcept { return interior_.size() + boundary_.size(); }

  bool is_interior(std::size_t i) const noexcept { return i < interior_.size(); }
  Point2 point(std::size_t i) const;
  // nullopt for interior points.
  std::optional<Segment> segment(std::size_t i) const;
  double weight(std::size_t i) const;

  std::vector<Point2> all_points() const;

 private:
  std::vector<Point2> interior_;
  std::vector<BoundaryPoint> boundary_;
};

// Base-2 radical inverse (van der Corput) of i.
double radical_inverse_base2(std::uint64_t i) noexcept;

// Points (i / n, radical_inverse_base2(i)) for i in [index_offset, index_offset + n).
// Throws ContractViolation when n == 0.
std::vector<Point2> hammersley(std::size_t n, std::uint64_t index_offset);

// n points strictly inside the domain. Unit-square Hammersley points are
// mapped onto the rectangle; rejected points are replaced by continuing the
// sequence index with first coordinate radical_inverse_base3(i).
std::vector<Point2> sample_interior(const DomainSpec& spec, std::size_t n, std::uint64_t index_offset = 1);

// Boundary points placed along the closed boundary by arclength at
// frac(i / n) * perimeter. Order of the parameterization: bottom (left to
// right), outlet (upwards), top (right to left), inlet (downwards), then the
// cylinder counter-clockwise from angle 0. Rectangle corners belong to the
// bottom/top segments. Throws ValidationError when n < 5.
std::vector<BoundaryPoint> sample_boundary(const DomainSpec& spec, std::size_t n, std::uint64_t index_offset = 1);

// Maps an arclength position in [0, perimeter) to a tagged boundary point.
BoundaryPoint boundary_at_arclength(const DomainSpec& spec, double s);

// Entry i is true iff train_points[i].x > test.x.
std::vector<bool> downstream_mask(Point2 test, const std::vector<Point2>& train_points);

// Regular cell-centred grid clipped to the domain, sized to hold roughly
// `n_target` points.
std::vector<Point2> regular_interior_grid(const DomainSpec& spec, std::size_t n_target);

// n boundary points at uniform arclength spacing (offset by half a step).
std::vector<BoundaryPoint> uniform_boundary(const DomainSpec& spec, std::size_t n);

}  // namespace pinnfluence
