#include "xatlas/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "xatlas/crossing.hpp"
#include "xatlas/drawing.hpp"
#include "xatlas/formulas.hpp"
#include "xatlas/split.hpp"

namespace xatlas {

std::string family_name(Family f) {
  switch (f) {
    case Family::Knn: return "knn";
    case Family::P3: return "p3";
    case Family::C4: return "c4";
  }
  throw std::invalid_argument("bad family");
}

Family parse_family(const std::string& s) {
  if (s == "knn") return Family::Knn;
  if (s == "p3") return Family::P3;
  if (s == "c4") return Family::C4;
  throw std::invalid_argument("unknown family '" + s + "' (expected knn, p3 or c4)");
}

Graph family_graph(Family f, int n) {
  switch (f) {
    case Family::Knn: return knn_minus_matching(n);
    case Family::P3: return product_path3(n);
    case Family::C4: return product_cycle4(n);
  }
  throw std::invalid_argument("bad family");
}

void Embedding::add_route(VertexLabel u, VertexLabel v, std::int64_t copies, std::initializer_list<VertexLabel> path) {
  Route r{u, v, copies, pathVertices_.size(), path.size()};
  for (const auto& x : path) {
    const auto idx = host.index_of(x);
    if (!idx) throw std::invalid_argument("route through unknown host vertex " + to_string(x));
    pathVertices_.push_back(static_cast<std::uint32_t>(*idx));
  }
  routes_.push_back(r);
}

std::vector<ArrangementIndex> arrangements(int n, int i) {
  if (n < 1 || i < 0 || i >= n) throw std::invalid_argument("arrangements: index out of range");
  std::vector<ArrangementIndex> out;
  int k = 0;
  for (int alpha = 0; alpha < n; ++alpha) {
    if (alpha == i) continue;
    for (int beta = 0; beta < n; ++beta) {
      if (beta == i || beta == alpha) continue;
      out.push_back({i, ++k, alpha, beta});
    }
  }
  return out;
}

namespace {

void require_embedding_n(int n) {
  if (n < 3) throw std::invalid_argument("embeddings need n >= 3");
  if (n > 2000) throw std::invalid_argument("embeddings are limited to n <= 2000");
}

std::int64_t arrangement_count(int n) { return static_cast<std::int64_t>(n - 1) * (n - 2); }

VertexLabel U(int i) { return {Tag::u, i}; }
VertexLabel V(int i) { return {Tag::v, i}; }

}  // namespace

Embedding build_embedding_knn(int n) {
  require_embedding_n(n);
  const std::int64_t x = arrangement_count(n);
  Embedding e;
  e.guest = multi_complete_bipartite(n, n, x);
  e.host = knn_minus_matching(n);
  for (int i = 0; i < n; ++i) {
    e.vertexMap[U(i)] = A(i);
    e.vertexMap[V(i)] = B(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.add_route(U(i), V(j), x, {A(i), B(j)});
  for (int i = 0; i < n; ++i)
    for (const auto& ar : arrangements(n, i)) e.add_route(U(i), V(i), 1, {A(i), B(ar.alpha), A(ar.beta), B(i)});
  return e;
}

Embedding build_embedding_p3(int n) {
  require_embedding_n(n);
  const std::int64_t x = arrangement_count(n);
  Embedding e;
  e.guest = multi_complete_bipartite(2 * n, n, x);
  e.host = product_path3(n);
  for (int i = 0; i < n; ++i) {
    e.vertexMap[U(i)] = L(0, i);
    e.vertexMap[U(n + i)] = L(2, i);
    e.vertexMap[V(i)] = L(1, i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      e.add_route(U(i), V(j), x, {L(0, i), L(1, j)});
      e.add_route(U(n + i), V(j), x, {L(2, i), L(1, j)});
    }
  for (int i = 0; i < n; ++i)
    for (const auto& ar : arrangements(n, i)) {
      e.add_route(U(i), V(i), 1, {L(0, i), L(1, ar.alpha), L(2, ar.beta), L(1, i)});
      e.add_route(U(n + i), V(i), 1, {L(2, i), L(1, ar.alpha), L(0, ar.beta), L(1, i)});
    }
  return e;
}

Embedding build_embedding_c4(int n) {
  require_embedding_n(n);
  const std::int64_t x = arrangement_count(n);
  Embedding e;
  e.guest = multi_complete_bipartite(2 * n, 2 * n, x);
  e.host = product_cycle4(n);
  for (int i = 0; i < n; ++i) {
    e.vertexMap[U(i)] = L(0, i);
    e.vertexMap[U(n + i)] = L(2, i);
    e.vertexMap[V(i)] = L(1, i);
    e.vertexMap[V(n + i)] = L(3, i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      e.add_route(U(i), V(j), x, {L(0, i), L(1, j)});
      e.add_route(U(n + i), V(j), x, {L(2, i), L(1, j)});
      e.add_route(U(i), V(n + j), x, {L(0, i), L(3, j)});
      e.add_route(U(n + i), V(n + j), x, {L(2, i), L(3, j)});
    }
  for (int i = 0; i < n; ++i)
    for (const auto& ar : arrangements(n, i)) {
      const int a = ar.alpha, b = ar.beta;
      e.add_route(U(i), V(i), 1, {L(0, i), L(1, a), L(2, b), L(1, i)});
      e.add_route(U(n + i), V(i), 1, {L(2, i), L(1, a), L(0, b), L(1, i)});
      e.add_route(U(i), V(n + i), 1, {L(0, i), L(3, a), L(2, b), L(3, i)});
      e.add_route(U(n + i), V(n + i), 1, {L(2, i), L(3, a), L(0, b), L(3, i)});
    }
  return e;
}

Embedding build_embedding(Family f, int n) {
  switch (f) {
    case Family::Knn: return build_embedding_knn(n);
    case Family::P3: return build_embedding_p3(n);
    case Family::C4: return build_embedding_c4(n);
  }
  throw std::invalid_argument("bad family");
}

Embedding identity_embedding(const Graph& g) {
  Embedding e;
  e.guest = g;
  e.host = g;
  for (const auto& v : g.vertices()) e.vertexMap[v] = v;
  for (const auto& [key, mult] : g.edge_map()) e.add_route(key.u, key.v, mult, {key.u, key.v});
  return e;
}

CongestionReport congestion(const Embedding& e) {
  const auto& hv = e.host.vertices();
  const std::size_t nh = hv.size();
  const std::size_t ng = e.guest.vertex_count();

  // vertex map: total, injective, into the host
  std::vector<std::uint32_t> image(ng);
  std::vector<bool> used(nh, false);
  for (std::size_t gi = 0; gi < ng; ++gi) {
    const VertexLabel gv = e.guest.vertices()[gi];
    auto it = e.vertexMap.find(gv);
    if (it == e.vertexMap.end()) throw std::invalid_argument("guest vertex " + to_string(gv) + " is not mapped");
    const auto hi = e.host.index_of(it->second);
    if (!hi) throw std::invalid_argument("guest vertex " + to_string(gv) + " maps outside the host");
    if (used[*hi]) throw std::invalid_argument("vertex map is not injective at " + to_string(it->second));
    used[*hi] = true;
    image[gi] = static_cast<std::uint32_t>(*hi);
  }
  if (e.vertexMap.size() != ng) throw std::invalid_argument("vertex map has entries outside the guest");

  std::vector<std::int32_t> edgeId(nh * nh, -1);
  std::vector<EdgeKey> hostEdges;
  for (const auto& [key, mult] : e.host.edge_map()) {
    const auto a = *e.host.index_of(key.u), b = *e.host.index_of(key.v);
    const auto id = static_cast<std::int32_t>(hostEdges.size());
    edgeId[a * nh + b] = edgeId[b * nh + a] = id;
    hostEdges.push_back(key);
  }

  std::vector<std::int64_t> load(hostEdges.size(), 0);
  std::vector<std::int64_t> copiesPerPair(ng * ng, 0);
  CongestionReport out;
  for (const auto& r : e.routes()) {
    const auto gu = e.guest.index_of(r.u), gv = e.guest.index_of(r.v);
    if (!gu || !gv) throw std::invalid_argument("route for an unknown guest vertex");
    if (r.copies <= 0) throw std::invalid_argument("route with non-positive copy count");
    const auto path = e.path(r);
    if (path.size() < 2) throw std::invalid_argument("route path is too short");
    if (path.front() != image[*gu] || path.back() != image[*gv])
      throw std::invalid_argument("route for " + to_string(r.u) + "-" + to_string(r.v) + " has wrong endpoints");
    for (std::size_t s = 0; s < path.size(); ++s)
      for (std::size_t t = s + 1; t < path.size(); ++t)
        if (path[s] == path[t]) throw std::invalid_argument("route path repeats a vertex");
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      const auto id = edgeId[path[s] * nh + path[s + 1]];
      if (id < 0)
        throw std::invalid_argument("route steps along a non-edge " + to_string(hv[path[s]]) + "-" +
                                    to_string(hv[path[s + 1]]));
      load[static_cast<std::size_t>(id)] += r.copies;
    }
    copiesPerPair[std::min(*gu, *gv) * ng + std::max(*gu, *gv)] += r.copies;
    out.copyPathLength += r.copies * static_cast<std::int64_t>(path.size() - 1);
  }

  std::int64_t routed = 0;
  for (const auto c : copiesPerPair) routed += c;
  for (const auto& [key, mult] : e.guest.edge_map()) {
    const auto a = *e.guest.index_of(key.u), b = *e.guest.index_of(key.v);
    const auto c = copiesPerPair[std::min(a, b) * ng + std::max(a, b)];
    if (c != mult)
      throw std::invalid_argument("guest edge " + to_string(key) + " has " + std::to_string(c) + " routed copies, expected " +
                                  std::to_string(mult));
    routed -= c;
  }
  if (routed != 0) throw std::invalid_argument("routes for pairs that are not guest edges");

  for (std::size_t id = 0; id < hostEdges.size(); ++id) {
    out.perEdgeLoad[hostEdges[id]] = load[id];
    out.congestion = std::max(out.congestion, load[id]);
    out.totalLoad += load[id];
  }
  return out;
}

Rational leighton_bound(const Rational& crG1Lower, std::int64_t cg, std::int64_t v2, std::int64_t delta) {
  if (cg <= 0) throw std::invalid_argument("leighton_bound: congestion must be positive");
  if (v2 < 0 || delta < 0) throw std::invalid_argument("leighton_bound: negative size");
  return crG1Lower / Rational(cg * cg) - Rational(v2, 2) * Rational(delta * delta);
}

Rational deklerk_lb(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("deklerk_lb: sizes must be positive");
  return deklerk_constant() * Rational(z_bipartite(m, n));
}

Rational kainen_scale(std::int64_t x, const Rational& lb) {
  if (x < 1) throw std::invalid_argument("kainen_scale: multiplicity must be positive");
  return Rational(x) * Rational(x) * lb;
}

LeightonPipeline leighton_pipeline(Family f, int n) {
  const Embedding e = build_embedding(f, n);
  const CongestionReport rep = congestion(e);
  LeightonPipeline out;
  out.multiplicity = arrangement_count(n);
  const std::int64_t m = f == Family::Knn ? n : 2 * n;
  const std::int64_t k = f == Family::C4 ? 2 * n : n;
  out.guestLower = kainen_scale(out.multiplicity, deklerk_lb(m, k));
  out.congestion = rep.congestion;
  out.hostVertices = static_cast<std::int64_t>(e.host.vertex_count());
  out.hostMaxDegree = max_degree(e.host);
  out.value = leighton_bound(out.guestLower, out.congestion, out.hostVertices, out.hostMaxDegree);
  return out;
}

Rational lower_bound_formula(Family f, int n) {
  switch (f) {
    case Family::Knn: return lb_knn(n);
    case Family::P3: return lb_p3(n);
    case Family::C4: return lb_c4(n);
  }
  throw std::invalid_argument("bad family");
}

bool planarity(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.vertex_count());
  for (const auto& [key, mult] : g.edge_map()) boost::add_edge(*g.index_of(key.u), *g.index_of(key.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::int64_t euler_skewness_lb(const Graph& g) {
  if (g.vertex_count() < 3) throw std::invalid_argument("euler_skewness_lb: needs at least 3 vertices");
  if (!g.is_simple()) throw std::invalid_argument("euler_skewness_lb: graph must be simple");
  if (!is_connected(g)) throw std::invalid_argument("euler_skewness_lb: graph must be connected");
  const auto gi = girth(g);
  if (!gi) throw std::invalid_argument("euler_skewness_lb: graph is a forest");
  const std::int64_t gg = *gi;
  const Rational bound = Rational(g.edge_count()) -
                         Rational(gg * (static_cast<std::int64_t>(g.vertex_count()) - 2), gg - 2);
  const mpz_class c = bound.ceil();
  return c > 0 ? c.get_si() : 0;
}

std::int64_t upper_bound_formula(Family f, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (f) {
    case Family::Knn: return z_complete4(n);
    case Family::P3: return ub_p3(n);
    case Family::C4: return n >= 3 ? ub_c4(n) : 0;
  }
  throw std::invalid_argument("bad family");
}

std::int64_t counted_upper_bound(Family f, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (f == Family::Knn) return count_drawing(n == 1 ? trivial_drawing() : generate_Dn(n)).total;
  const int width = f == Family::P3 ? 2 : 4;
  const SplitDrawing s = split_meshes(n, width);
  return split_drawing_count(s.base, s.meshes, width);
}

CertifiedInterval certify(Family f, int n) {
  if (n < 1 || n > kFormulaMaxN) throw std::invalid_argument("n out of range");
  CertifiedInterval out;
  out.family = f;
  out.n = n;

  if (n <= kCountedUpperLimit) {
    out.upper = counted_upper_bound(f, n);
    if (out.upper != upper_bound_formula(f, n))
      throw std::logic_error("counted drawing disagrees with the closed form at n = " + std::to_string(n));
    out.upperSource = "drawing";
  } else {
    out.upper = upper_bound_formula(f, n);
    out.upperSource = "formula";
  }

  out.lower = Rational(0);
  out.lowerSource = "trivial";
  if (n >= 2) {
    out.lowerRaw = lower_bound_formula(f, n);
    if (*out.lowerRaw > out.lower) {
      out.lower = *out.lowerRaw;
      out.lowerSource = "congestion";
    }
  }

  if (n <= kStructuralLimit) {
    const Graph g = family_graph(f, n);
    out.planar = planarity(g);
    if (g.vertex_count() >= 3 && is_connected(g) && girth(g)) {
      out.skewness = euler_skewness_lb(g);
      if (Rational(*out.skewness) > out.lower) {
        out.lower = Rational(*out.skewness);
        out.lowerSource = "euler";
      }
    }
    if (out.planar) out.lowerSource = out.upper == 0 ? "planar" : out.lowerSource;
  }

  if (out.lower.ceil() == out.upper) out.exact = out.upper;
  return out;
}

}  // namespace xatlas
