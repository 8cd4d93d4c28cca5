#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xatlas {

enum class Tag : std::uint8_t { a, b, layer0, layer1, layer2, layer3, u, v };

std::string tag_name(Tag t);
Tag parse_tag(const std::string& s);
Tag layer_tag(int layer);
int layer_of(Tag t);  // -1 for non-layer tags

struct VertexLabel {
  Tag tag = Tag::a;
  int index = 0;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& v);
// Inverse of to_string: "a3", "v0", "2:5".
VertexLabel parse_label(const std::string& s);

inline VertexLabel A(int i) { return {Tag::a, i}; }
inline VertexLabel B(int i) { return {Tag::b, i}; }
inline VertexLabel L(int layer, int i) { return {layer_tag(layer), i}; }

// Unordered pair with u < v.
struct EdgeKey {
  VertexLabel u;
  VertexLabel v;

  EdgeKey() = default;
  EdgeKey(VertexLabel x, VertexLabel y);
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

std::string to_string(const EdgeKey& e);

struct Edge {
  EdgeKey key;
  std::int64_t mult = 1;
};

// Undirected multigraph without loops; multiplicities are stored, not materialized.
class Graph {
 public:
  void add_vertex(VertexLabel v);
  // Adds mult parallel copies (accumulating).
  void add_edge(VertexLabel x, VertexLabel y, std::int64_t mult = 1);
  // Ensures a simple edge is present.
  void connect(VertexLabel x, VertexLabel y);

  [[nodiscard]] const std::vector<VertexLabel>& vertices() const { return vertices_; }
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] const std::map<EdgeKey, std::int64_t>& edge_map() const { return edges_; }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t pair_count() const { return edges_.size(); }
  [[nodiscard]] std::int64_t edge_count() const;  // with multiplicity

  [[nodiscard]] bool has_vertex(VertexLabel v) const;
  [[nodiscard]] std::optional<std::size_t> index_of(VertexLabel v) const;
  [[nodiscard]] std::int64_t multiplicity(VertexLabel x, VertexLabel y) const;
  [[nodiscard]] bool is_simple() const;
  [[nodiscard]] std::int64_t degree(VertexLabel v) const;
  // Adjacency by vertex index, one entry per distinct neighbour.
  [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexLabel> vertices_;  // sorted, unique
  std::map<EdgeKey, std::int64_t> edges_;
};

Graph complete_graph(int n);                 // vertices u_i
Graph path_graph(int k);                     // vertices v_0..v_{k-1}
Graph cycle_graph(int k);                    // vertices v_0..v_{k-1}
Graph complete_bipartite(int m, int n);      // u_i, v_j

// Vertices (g, h) are labelled {layer_{h.index}, g.index}; h must have at most 4 vertices.
Graph kronecker_product(const Graph& g, const Graph& h);
Graph knn_minus_matching(int n);
Graph multi_complete_bipartite(int m, int n, std::int64_t x);
Graph product_path3(int n);   // K_n x P_3
Graph product_cycle4(int n);  // K_n x C_4

using VertexMap = std::map<VertexLabel, VertexLabel>;
bool check_isomorphism_map(const Graph& g, const Graph& h, const VertexMap& map);

std::optional<int> girth(const Graph& g);  // nullopt for forests
std::int64_t max_degree(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace xatlas
