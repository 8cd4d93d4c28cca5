#pragma once

#include <vector>

#include "xatlas/drawing.hpp"

namespace xatlas {

// Local crossing pattern at one vertex of the base drawing after its edges become bunches.
struct MeshSpec {
  VertexLabel vertex;
  int left = 0;
  int right = 0;
  int width = 2;
  int reductions = 0;  // self crossings removed at this vertex
  bool split = true;   // false when the vertex keeps a single terminal
  friend bool operator==(const MeshSpec&, const MeshSpec&) = default;
};

struct SplitDrawing {
  int n = 0;
  int width = 2;
  Graph graph;  // K_n x P_3 (width 2) or K_n x C_4 (width 4)
  CylindricalDrawing base;
  std::vector<MeshSpec> meshes;  // one per base vertex, sorted by vertex
  ExpandedDrawing expanded;
  friend bool operator==(const SplitDrawing&, const SplitDrawing&) = default;
};

// Chart-unit sizes used to realize bunches and meshes.
struct SplitGeometry {
  Rational entry;        // fraction of the first segment where a bunch leaves its mesh
  Rational centerEntry;  // same for radials at a split center
  Rational terminalGap;  // half distance between the two terminals of a split boundary vertex
  Rational spacing;      // distance between neighbouring bunch members
  Rational centerRadius; // distance of center terminals from the pole line
};

SplitGeometry default_split_geometry(int n, int width);

// The base product vertices produced by splitting: terminal 0 is the "minus" side.
VertexLabel split_terminal(const VertexLabel& base, int side, int width);

SplitDrawing generate_split_drawing(int n, int width);
SplitDrawing generate_split_drawing(int n, int width, const SplitGeometry& geometry);
// Base drawing and meshes only; `expanded` stays empty.
SplitDrawing split_meshes(int n, int width);

}  // namespace xatlas
