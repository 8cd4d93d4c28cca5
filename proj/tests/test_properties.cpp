#include <gtest/gtest.h>

#include <queue>
#include <random>
#include <set>

#include "xatlas/crossing.hpp"
#include "xatlas/formulas.hpp"
#include "xatlas/graph.hpp"

using namespace xatlas;

namespace {

// Shortest cycle as min over edges uv of 1 + dist(u, v) in G - uv.
std::optional<int> girth_by_edge_removal(const Graph& g) {
  const auto adj = g.adjacency();
  std::optional<int> best;
  for (const auto& [key, mult] : g.edge_map()) {
    const std::size_t s = *g.index_of(key.u), t = *g.index_of(key.v);
    std::vector<int> dist(adj.size(), -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x]) {
        if ((x == s && y == t) || (x == t && y == s) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    if (dist[t] >= 0 && (!best || dist[t] + 1 < *best)) best = dist[t] + 1;
  }
  return best;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex({Tag::u, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.connect({Tag::u, i}, {Tag::u, j});
  return g;
}

// Position k of m on a strictly convex arc, in cyclic order.
Point2 convex_point(int k) { return {Rational(k), Rational(k) * Rational(k)}; }

int orient(const Point2& a, const Point2& b, const Point2& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

bool segments_cross_properly(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const int d1 = orient(r, s, p), d2 = orient(r, s, q), d3 = orient(p, q, r), d4 = orient(p, q, s);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

Rational random_angle(std::mt19937& rng, int den) {
  std::uniform_int_distribution<int> d(0, den - 1);
  return Rational(d(rng), den);
}

}  // namespace

TEST(Property, ProductWithEdgeIsKnnMinusMatching) {
  for (int n = 2; n <= 12; ++n) {
    VertexMap m;
    for (int i = 0; i < n; ++i) {
      m[L(0, i)] = A(i);
      m[L(1, i)] = B(i);
    }
    EXPECT_TRUE(check_isomorphism_map(kronecker_product(complete_graph(n), path_graph(2)), knn_minus_matching(n), m)) << n;
    EXPECT_EQ(knn_minus_matching(n).edge_count(), n * (n - 1));
    EXPECT_EQ(max_degree(knn_minus_matching(n)), n - 1);
  }
}

TEST(Property, KroneckerCommutesUpToPairSwap) {
  std::vector<Graph> small = {complete_graph(2), complete_graph(3), complete_graph(4), path_graph(2),
                              path_graph(3),     path_graph(4),     cycle_graph(3),    cycle_graph(4)};
  for (const Graph& g : small)
    for (const Graph& h : small) {
      const Graph gh = kronecker_product(g, h);
      const Graph hg = kronecker_product(h, g);
      VertexMap swap;
      for (const auto& v : gh.vertices()) swap[v] = L(v.index, layer_of(v.tag));
      EXPECT_TRUE(check_isomorphism_map(gh, hg, swap));
      EXPECT_EQ(gh.edge_count(), 2 * g.edge_count() * h.edge_count());
    }
}

TEST(Property, GirthMatchesEdgeRemovalSearch) {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 10;
    const double p = 0.1 + 0.05 * (trial % 9);
    const Graph g = random_graph(rng, n, p);
    EXPECT_EQ(girth(g), girth_by_edge_removal(g)) << "trial " << trial;
  }
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(girth(knn_minus_matching(n)), girth_by_edge_removal(knn_minus_matching(n)));
    EXPECT_EQ(girth(product_cycle4(n)), girth_by_edge_removal(product_cycle4(n)));
  }
}

TEST(Property, ChordPredicateMatchesSegmentGeometry) {
  for (int m = 4; m <= 16; ++m) {
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) chords.emplace_back(i, j);
    for (std::size_t x = 0; x < chords.size(); ++x)
      for (std::size_t y = x + 1; y < chords.size(); ++y) {
        const auto [a, b] = chords[x];
        const auto [c, d] = chords[y];
        const bool predicate = chords_cross(Chord{Disk::Top, Rational(a, m), Rational(b, m), true},
                                            Chord{Disk::Top, Rational(d, m), Rational(c, m), false});
        const bool geometry = segments_cross_properly(convex_point(a), convex_point(b), convex_point(c), convex_point(d));
        ASSERT_EQ(predicate, geometry) << m << ": " << a << "-" << b << " vs " << c << "-" << d;
      }
  }
}

TEST(Property, HelixCrossingsSymmetricAndRotationInvariant) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational t1 = random_angle(rng, 24), t2 = random_angle(rng, 24);
    const Rational b1 = random_angle(rng, 24), b2 = random_angle(rng, 24);
    std::uniform_int_distribution<int> turns(-2, 2);
    Helix h1 = Helix::shortest(t1, b1), h2 = Helix::shortest(t2, b2);
    h1.winding += Rational(turns(rng));
    h2.winding += Rational(turns(rng));
    const std::int64_t k = helix_crossings(h1, h2);
    ASSERT_EQ(k, helix_crossings(h2, h1));
    const Rational off = random_angle(rng, 48);
    Helix r1 = h1, r2 = h2;
    r1.top = (r1.top + off).frac();
    r1.bottom = (r1.bottom + off).frac();
    r2.top = (r2.top + off).frac();
    r2.bottom = (r2.bottom + off).frac();
    ASSERT_EQ(k, helix_crossings(r1, r2));
  }
}

TEST(Property, ClassDecompositionIsAdditive) {
  for (int n = 5; n <= 11; ++n) {
    const CylindricalDrawing d = generate_Dn(n);
    std::vector<const Route*> e1, e2;
    for (const auto& r : d.routes) (r.cls == EdgeClass::EX || r.cls == EdgeClass::EZXY ? e1 : e2).push_back(&r);
    auto within = [](const std::vector<const Route*>& rs) {
      std::int64_t k = 0;
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) k += route_crossings(*rs[i], *rs[j]);
      return k;
    };
    std::int64_t between = 0;
    for (const Route* a : e1)
      for (const Route* b : e2) between += route_crossings(*a, *b);
    EXPECT_EQ(within(e1) + within(e2) + between, count_drawing(d).total) << n;
  }
}

TEST(Property, RegionsAreSeparated) {
  for (int n = 4; n <= 16; ++n) {
    const CrossingBreakdown b = count_drawing(generate_Dn(n));
    EXPECT_EQ(b.get(EdgeClass::EX, EdgeClass::EY), 0) << n;
    EXPECT_EQ(b.get(EdgeClass::EX, EdgeClass::EXY), 0) << n;
    EXPECT_EQ(b.get(EdgeClass::EY, EdgeClass::EXY), 0) << n;
    EXPECT_EQ(b.get(EdgeClass::EZXY, EdgeClass::EZXY), 0) << n;
  }
}

TEST(Property, CountersAgreeOnRotatedDrawings) {
  std::mt19937 rng(99);
  for (int n = 2; n <= 9; ++n) {
    const Rational off = random_angle(rng, 97);
    const CylindricalDrawing d = rotate(generate_Dn(n), off);
    EXPECT_EQ(count_expanded(expand_Dn(d)), count_drawing(d).total) << n;
  }
}

TEST(Property, CalibrationSearchContainsDefault) {
  for (int n : {6, 7, 8, 9}) {
    const int m = boundary_points(n);
    std::set<std::tuple<int, int, int>> good;
    for (int shift = 0; shift < m; ++shift)
      for (int ts : {-1, 1})
        for (int bs : {-1, 1}) {
          try {
            if (count_drawing(generate_Dn(n, DrawingParams{shift, ts, bs})).total == z_complete4(n))
              good.insert({shift, ts, bs});
          } catch (const std::logic_error&) {
          }
        }
    const DrawingParams p = default_params(n);
    EXPECT_TRUE(good.count({p.bottomShift, p.topDepartureSign, p.bottomDepartureSign})) << n;
  }
}
