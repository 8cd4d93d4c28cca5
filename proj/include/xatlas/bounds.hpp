#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xatlas/graph.hpp"
#include "xatlas/rational.hpp"

namespace xatlas {

enum class Family { Knn, P3, C4 };

std::string family_name(Family f);
Family parse_family(const std::string& s);
Graph family_graph(Family f, int n);

// Guest multigraph routed into a host graph. Paths are stored flat as host vertex indices.
class Embedding {
 public:
  struct Route {
    VertexLabel u;  // guest endpoints
    VertexLabel v;
    std::int64_t copies = 1;
    std::size_t offset = 0;
    std::size_t length = 0;  // number of path vertices
  };

  Graph guest;
  Graph host;
  VertexMap vertexMap;

  void add_route(VertexLabel u, VertexLabel v, std::int64_t copies, std::initializer_list<VertexLabel> path);
  [[nodiscard]] const std::vector<Route>& routes() const { return routes_; }
  [[nodiscard]] std::span<const std::uint32_t> path(const Route& r) const {
    return {pathVertices_.data() + r.offset, r.length};
  }

 private:
  std::vector<Route> routes_;
  std::vector<std::uint32_t> pathVertices_;
};

struct ArrangementIndex {
  int i = 0;
  int k = 0;  // 1-based rank
  int alpha = 0;
  int beta = 0;
};

// All ordered pairs of distinct elements of {0..n-1} \ {i}, lexicographic, ranks 1..(n-1)(n-2).
std::vector<ArrangementIndex> arrangements(int n, int i);

Embedding build_embedding_knn(int n);
Embedding build_embedding_p3(int n);
Embedding build_embedding_c4(int n);
Embedding build_embedding(Family f, int n);
Embedding identity_embedding(const Graph& g);

struct CongestionReport {
  std::map<EdgeKey, std::int64_t> perEdgeLoad;
  std::int64_t congestion = 0;
  std::int64_t totalLoad = 0;     // sum of perEdgeLoad
  std::int64_t copyPathLength = 0;  // sum over guest edge copies of path length
};

// Validates the embedding (throws std::invalid_argument) and accumulates loads.
CongestionReport congestion(const Embedding& e);

Rational leighton_bound(const Rational& crG1Lower, std::int64_t cg, std::int64_t v2, std::int64_t delta);
Rational deklerk_lb(std::int64_t m, std::int64_t n);
Rational kainen_scale(std::int64_t x, const Rational& lb);

struct LeightonPipeline {
  std::int64_t multiplicity = 0;
  Rational guestLower;
  std::int64_t congestion = 0;
  std::int64_t hostVertices = 0;
  std::int64_t hostMaxDegree = 0;
  Rational value;
};

// Builds the embedding, measures it, and evaluates the congestion bound.
LeightonPipeline leighton_pipeline(Family f, int n);
Rational lower_bound_formula(Family f, int n);

bool planarity(const Graph& g);
std::int64_t euler_skewness_lb(const Graph& g);

// Largest n for which certify counts a drawing instead of using the closed form.
inline constexpr int kCountedUpperLimit = 40;
// Largest n for which certify builds the graph for planarity and the Euler bound.
inline constexpr int kStructuralLimit = 100;

std::int64_t upper_bound_formula(Family f, int n);
std::int64_t counted_upper_bound(Family f, int n);

struct CertifiedInterval {
  Family family = Family::Knn;
  int n = 0;
  std::optional<Rational> lowerRaw;  // congestion-bound value, possibly negative
  Rational lower;                    // certified, never negative
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> skewness;
  bool planar = false;  // only meaningful for n <= kStructuralLimit
  std::string lowerSource;
  std::string upperSource;
};

CertifiedInterval certify(Family f, int n);

}  // namespace xatlas
