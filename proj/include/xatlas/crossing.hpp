#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xatlas/drawing.hpp"
#include "xatlas/split.hpp"

namespace xatlas {

// "E_X|E_XY": class names in lexicographic order.
std::string class_pair_key(EdgeClass a, EdgeClass b);

struct CrossingBreakdown {
  std::int64_t total = 0;
  std::map<std::string, std::int64_t> perClassPair;

  [[nodiscard]] std::int64_t get(EdgeClass a, EdgeClass b) const;
  void add(EdgeClass a, EdgeClass b, std::int64_t k);
};

bool chords_cross(const Chord& c1, const Chord& c2);
bool radial_crosses_chord(const Radial& r, const Chord& c);
std::int64_t helix_crossings(const Helix& h1, const Helix& h2);
std::int64_t segment_crossings(const RouteSegment& s1, const RouteSegment& s2);
std::int64_t route_crossings(const Route& r1, const Route& r2);

CrossingBreakdown count_drawing(const CylindricalDrawing& d);

class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generic counter over the periodic chart; throws DegeneracyError on touching or overlapping curves.
std::int64_t count_expanded(const ExpandedDrawing& e);

std::int64_t mesh_crossings(const MeshSpec& spec);
std::int64_t split_drawing_count(const CylindricalDrawing& base, const std::vector<MeshSpec>& meshes, int width);

}  // namespace xatlas
