#include "xatlas/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace xatlas {

namespace {

constexpr const char* kTagNames[] = {"a", "b", "layer0", "layer1", "layer2", "layer3", "u", "v"};

}  // namespace

std::string tag_name(Tag t) { return kTagNames[static_cast<int>(t)]; }

Tag parse_tag(const std::string& s) {
  for (int i = 0; i < 8; ++i)
    if (s == kTagNames[i]) return static_cast<Tag>(i);
  throw std::invalid_argument("unknown vertex tag: " + s);
}

Tag layer_tag(int layer) {
  if (layer < 0 || layer > 3) throw std::invalid_argument("layer out of range");
  return static_cast<Tag>(static_cast<int>(Tag::layer0) + layer);
}

int layer_of(Tag t) {
  const int k = static_cast<int>(t) - static_cast<int>(Tag::layer0);
  return (k >= 0 && k < 4) ? k : -1;
}

std::string to_string(const VertexLabel& v) {
  const int layer = layer_of(v.tag);
  if (layer >= 0) return std::to_string(layer) + ":" + std::to_string(v.index);
  return tag_name(v.tag) + std::to_string(v.index);
}

VertexLabel parse_label(const std::string& s) {
  auto number = [&s](const std::string& digits) {
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad vertex label: " + s);
    return std::stoi(digits);
  };
  if (const auto colon = s.find(':'); colon != std::string::npos)
    return {layer_tag(number(s.substr(0, colon))), number(s.substr(colon + 1))};
  if (s.empty()) throw std::invalid_argument("empty vertex label");
  const Tag t = parse_tag(s.substr(0, 1));
  if (layer_of(t) >= 0) throw std::invalid_argument("bad vertex label: " + s);
  return {t, number(s.substr(1))};
}

EdgeKey::EdgeKey(VertexLabel x, VertexLabel y) : u(std::min(x, y)), v(std::max(x, y)) {}

std::string to_string(const EdgeKey& e) { return to_string(e.u) + "-" + to_string(e.v); }

void Graph::add_vertex(VertexLabel v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void Graph::add_edge(VertexLabel x, VertexLabel y, std::int64_t mult) {
  if (x == y) throw std::invalid_argument("self-loop at " + to_string(x));
  if (mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
  add_vertex(x);
  add_vertex(y);
  edges_[EdgeKey(x, y)] += mult;
}

void Graph::connect(VertexLabel x, VertexLabel y) {
  if (x == y) throw std::invalid_argument("self-loop at " + to_string(x));
  add_vertex(x);
  add_vertex(y);
  edges_[EdgeKey(x, y)] = 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [k, m] : edges_) out.push_back({k, m});
  return out;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (const auto& [k, m] : edges_) total += m;
  return total;
}

bool Graph::has_vertex(VertexLabel v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> Graph::index_of(VertexLabel v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::int64_t Graph::multiplicity(VertexLabel x, VertexLabel y) const {
  if (x == y) return 0;
  auto it = edges_.find(EdgeKey(x, y));
  return it == edges_.end() ? 0 : it->second;
}

bool Graph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second == 1; });
}

std::int64_t Graph::degree(VertexLabel v) const {
  std::int64_t d = 0;
  for (const auto& [k, m] : edges_)
    if (k.u == v || k.v == v) d += m;
  return d;
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices_.size());
  for (const auto& [k, m] : edges_) {
    const std::size_t i = *index_of(k.u);
    const std::size_t j = *index_of(k.v);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex({Tag::u, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.connect({Tag::u, i}, {Tag::u, j});
  return g;
}

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least one vertex");
  Graph g;
  for (int i = 0; i < k; ++i) g.add_vertex({Tag::v, i});
  for (int i = 0; i + 1 < k; ++i) g.connect({Tag::v, i}, {Tag::v, i + 1});
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g = path_graph(k);
  g.connect({Tag::v, k - 1}, {Tag::v, 0});
  return g;
}

Graph complete_bipartite(int m, int n) { return multi_complete_bipartite(m, n, 1); }

Graph kronecker_product(const Graph& g, const Graph& h) {
  if (h.vertex_count() > 4)
    throw std::invalid_argument("kronecker_product: second factor supplies layers and must have at most 4 vertices");
  {
    std::set<int> seen;
    for (const auto& v : g.vertices())
      if (!seen.insert(v.index).second)
        throw std::invalid_argument("kronecker_product: first factor indices must be distinct");
  }
  Graph out;
  for (const auto& x : g.vertices())
    for (std::size_t j = 0; j < h.vertex_count(); ++j) out.add_vertex({layer_tag(static_cast<int>(j)), x.index});
  for (const auto& [ge, gm] : g.edge_map()) {
    for (const auto& [he, hm] : h.edge_map()) {
      const int hx = static_cast<int>(*h.index_of(he.u));
      const int hy = static_cast<int>(*h.index_of(he.v));
      out.connect({layer_tag(hx), ge.u.index}, {layer_tag(hy), ge.v.index});
      out.connect({layer_tag(hy), ge.u.index}, {layer_tag(hx), ge.v.index});
    }
  }
  return out;
}

Graph knn_minus_matching(int n) {
  if (n < 1) throw std::invalid_argument("knn_minus_matching: n must be at least 1");
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.add_vertex(A(i));
    g.add_vertex(B(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.connect(A(i), B(j));
  return g;
}

Graph multi_complete_bipartite(int m, int n, std::int64_t x) {
  if (m < 1 || n < 1 || x < 1) throw std::invalid_argument("multi_complete_bipartite: arguments must be positive");
  Graph g;
  for (int i = 0; i < m; ++i) g.add_vertex({Tag::u, i});
  for (int j = 0; j < n; ++j) g.add_vertex({Tag::v, j});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge({Tag::u, i}, {Tag::v, j}, x);
  return g;
}

Graph product_path3(int n) { return kronecker_product(complete_graph(n), path_graph(3)); }

Graph product_cycle4(int n) { return kronecker_product(complete_graph(n), cycle_graph(4)); }

bool check_isomorphism_map(const Graph& g, const Graph& h, const VertexMap& map) {
  if (g.vertex_count() != h.vertex_count() || g.pair_count() != h.pair_count()) return false;
  std::set<VertexLabel> image;
  for (const auto& v : g.vertices()) {
    auto it = map.find(v);
    if (it == map.end() || !h.has_vertex(it->second)) return false;
    if (!image.insert(it->second).second) return false;
  }
  for (const auto& [k, m] : g.edge_map()) {
    const VertexLabel x = map.at(k.u);
    const VertexLabel y = map.at(k.v);
    if (h.multiplicity(x, y) != m) return false;
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  for (const auto& [k, m] : g.edge_map())
    if (m > 1) return 2;
  const auto adj = g.adjacency();
  const std::size_t n = adj.size();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = root;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      if (2 * dist[x] >= best) break;
      for (std::size_t y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::int64_t max_degree(const Graph& g) {
  std::map<VertexLabel, std::int64_t> deg;
  for (const auto& [k, m] : g.edge_map()) {
    deg[k.u] += m;
    deg[k.v] += m;
  }
  std::int64_t best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == adj.size();
}

}  // namespace xatlas
