#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xatlas/bounds.hpp"
#include "xatlas/crossing.hpp"
#include "xatlas/drawing.hpp"
#include "xatlas/graph.hpp"
#include "xatlas/split.hpp"

namespace xatlas {

using nlohmann::json;

inline constexpr const char* kGenerator = "xatlas 1.0.0";
inline constexpr int kFormatVersion = 1;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json segment_to_json(const RouteSegment& s);
RouteSegment segment_from_json(const json& j);

json drawing_to_json(const CylindricalDrawing& d);
CylindricalDrawing drawing_from_json(const json& j);

json expanded_to_json(const ExpandedDrawing& e);
ExpandedDrawing expanded_from_json(const json& j);

json mesh_to_json(const MeshSpec& m);
MeshSpec mesh_from_json(const json& j);

json breakdown_to_json(const CrossingBreakdown& b);
json interval_to_json(const CertifiedInterval& c);

// Everything `xatlas build` writes: the base cylindrical drawing, the meshes of a split
// drawing (empty for knn), and the chart geometry of the final drawing.
struct DrawingDocument {
  Family family = Family::Knn;
  int n = 0;
  int width = 1;  // 1 for knn, 2 for p3, 4 for c4
  Graph graph;
  CylindricalDrawing base;
  std::vector<MeshSpec> meshes;
  ExpandedDrawing expanded;
  friend bool operator==(const DrawingDocument&, const DrawingDocument&) = default;
};

DrawingDocument build_document(Family f, int n);
json document_to_json(const DrawingDocument& d);
// Throws std::invalid_argument when the graph, base drawing and chart geometry disagree.
void check_consistent(const DrawingDocument& d);
DrawingDocument document_from_json(const json& j);

DrawingDocument read_document(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace xatlas
