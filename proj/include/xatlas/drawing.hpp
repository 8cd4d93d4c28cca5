#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xatlas/graph.hpp"
#include "xatlas/rational.hpp"

namespace xatlas {

enum class Region { TopBoundary, BottomBoundary, TopCenter, BottomCenter };
enum class Disk { Top, Bottom };
enum class EdgeClass { EX, EY, EXY, EZXY };

std::string region_name(Region r);
Region parse_region(const std::string& s);
std::string disk_name(Disk d);
Disk parse_disk(const std::string& s);
std::string class_name(EdgeClass c);
EdgeClass parse_class(const std::string& s);

// Boundary angles are kept in [0, 1); center points carry angle 0.
struct CylinderPoint {
  Region region = Region::TopBoundary;
  Rational angle;

  static CylinderPoint boundary(Disk d, const Rational& angle);
  static CylinderPoint center(Disk d);
  [[nodiscard]] bool is_center() const { return region == Region::TopCenter || region == Region::BottomCenter; }
  friend bool operator==(const CylinderPoint&, const CylinderPoint&) = default;
};

// Straight chord of a disk. The cap (the side away from the disk center) is the
// counterclockwise arc from `from` to `to` when `ccw`, otherwise from `to` to `from`.
struct Chord {
  Disk disk = Disk::Top;
  Rational from;
  Rational to;
  bool ccw = true;

  [[nodiscard]] Rational cap_start() const { return ccw ? from : to; }
  [[nodiscard]] Rational cap_length() const { return ccw ? (to - from).frac() : (from - to).frac(); }
  friend bool operator==(const Chord&, const Chord&) = default;
};

// Center of `disk` to the boundary point at `angle`.
struct Radial {
  Disk disk = Disk::Top;
  Rational angle;
  friend bool operator==(const Radial&, const Radial&) = default;
};

// Lateral curve from the top circle at `top` to the bottom circle at `top + winding`.
struct Helix {
  Rational top;
  Rational bottom;
  Rational winding;

  static Helix shortest(const Rational& top, const Rational& bottom);
  friend bool operator==(const Helix&, const Helix&) = default;
};

using RouteSegment = std::variant<Chord, Radial, Helix>;

std::pair<CylinderPoint, CylinderPoint> segment_endpoints(const RouteSegment& s);

struct Route {
  EdgeKey edge;
  EdgeClass cls = EdgeClass::EX;
  std::vector<RouteSegment> segments;  // traversal order from edge.u to edge.v
  friend bool operator==(const Route&, const Route&) = default;
};

struct DrawingParams {
  int bottomShift = 0;          // bottom sequence offset in units of 1/m turn
  int topDepartureSign = 1;     // side of the target at which top-center helices depart
  int bottomDepartureSign = 1;  // same for the bottom center
  friend bool operator==(const DrawingParams&, const DrawingParams&) = default;
};

struct CylindricalDrawing {
  int n = 0;
  Graph graph;
  std::map<VertexLabel, CylinderPoint> placement;
  std::vector<Route> routes;  // sorted by edge
  DrawingParams params;

  [[nodiscard]] const Route& route(const EdgeKey& e) const;
  [[nodiscard]] std::size_t class_size(EdgeClass c) const;
  friend bool operator==(const CylindricalDrawing&, const CylindricalDrawing&) = default;
};

// Number of equidistant boundary points per disk: n for even n, n-1 for odd n.
int boundary_points(int n);
int default_bottom_shift(int n);
DrawingParams default_params(int n);

CylindricalDrawing generate_Dn(int n);
CylindricalDrawing generate_Dn(int n, const DrawingParams& params);
// a_0 and b_0 on the top boundary, no edges.
CylindricalDrawing trivial_drawing();

// Throws std::invalid_argument describing the first violated invariant.
void validate(const CylindricalDrawing& d);

CylindricalDrawing rotate(const CylindricalDrawing& d, const Rational& offset);
CylindricalDrawing mirror(const CylindricalDrawing& d);

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Chart of the cylinder: x is the angle (period 1), the lateral surface is 0 <= y <= 1,
// the top disk is 1 <= y <= 2 with its center on the line y = 2, the bottom disk is
// -1 <= y <= 0 with its center on y = -1. A center vertex is the whole pole line.
struct ExpandedDrawing {
  struct Vertex {
    VertexLabel label;
    Point2 at;
    bool pole = false;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Polyline {
    EdgeKey edge;
    EdgeClass cls = EdgeClass::EX;
    std::vector<Point2> points;
    friend bool operator==(const Polyline&, const Polyline&) = default;
  };

  std::vector<Vertex> vertices;    // sorted by label
  std::vector<Polyline> polylines;

  [[nodiscard]] const Vertex& vertex(const VertexLabel& v) const;
  friend bool operator==(const ExpandedDrawing&, const ExpandedDrawing&) = default;
};

Rational chord_height(const Rational& capLength);
Rational pole_y(Disk d);
Rational rim_y(Disk d);

// Chart points of one segment in its natural order (Chord from->to, Radial center->rim, Helix top->bottom).
std::vector<Point2> segment_chart(const RouteSegment& s);

ExpandedDrawing expand_Dn(const CylindricalDrawing& d);

// Checks endpoints against vertex coordinates (modulo the period) and distinct vertex points.
void validate(const ExpandedDrawing& e);

}  // namespace xatlas
