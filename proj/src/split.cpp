#include "xatlas/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace xatlas {

namespace {

Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
Point2 operator*(const Rational& k, const Point2& p) { return {k * p.x, k * p.y}; }

Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Rational norm_inf(const Point2& p) { return std::max(abs(p.x), abs(p.y)); }
Point2 unit_inf(const Point2& p) { return (Rational(1) / norm_inf(p)) * p; }
// Left normal of a direction, scaled to unit max-norm.
Point2 normal(const Point2& d) { return unit_inf(Point2{-d.y, d.x}); }
double angle_of(const Point2& d) { return std::atan2(d.y.to_double(), d.x.to_double()); }

struct End {
  std::size_t polyline;
  bool atA;  // true: the a-end (first point), false: the b-end (last point)
};

struct Frame {
  VertexLabel label;
  bool split = false;
  bool center = false;
  Disk disk = Disk::Top;
  Point2 at;                 // canonical chart point (boundary) or (0, pole) for centers
  Point2 axis;               // boundary: unit max-norm axis; T+ = at + gap * axis
  Rational phi0;             // centers: direction of the terminal pair
  std::optional<std::size_t> straddle;
  std::vector<End> ends;
  int left = 0;
  int right = 0;
};

Point2 outward(const ExpandedDrawing::Polyline& pl, bool atA) {
  const auto& p = pl.points;
  return atA ? p[1] - p[0] : p[p.size() - 2] - p.back();
}

// Member offsets grow along this direction at the given end.
Point2 offset_dir(const ExpandedDrawing::Polyline& pl, bool atA) {
  const auto& p = pl.points;
  return atA ? normal(p[1] - p[0]) : normal(p.back() - p[p.size() - 2]);
}

bool center_left(const Rational& theta, const Rational& phi0) { return (theta - phi0).frac() < Rational(1, 2); }

void choose_boundary_axis(Frame& f, const ExpandedDrawing& base) {
  std::vector<Point2> dirs;
  for (const End& e : f.ends) dirs.push_back(outward(base.polylines[e.polyline], e.atA));
  const int deg = static_cast<int>(dirs.size());

  auto count = [&dirs](const Point2& u, int& l, int& r) {
    l = r = 0;
    for (const auto& d : dirs) {
      const int s = cross(u, d).sign();
      if (s == 0) return false;
      (s > 0 ? l : r) += 1;
    }
    return true;
  };

  if (f.straddle) {
    Point2 s;
    for (const End& e : f.ends)
      if (e.polyline == *f.straddle) s = outward(base.polylines[e.polyline], e.atA);
    f.axis = unit_inf(s);
    int l = 0, r = 0;
    for (const End& e : f.ends) {
      if (e.polyline == *f.straddle) continue;
      const int sg = cross(f.axis, outward(base.polylines[e.polyline], e.atA)).sign();
      if (sg == 0) throw std::logic_error("bunch collinear with straddle axis at " + to_string(f.label));
      (sg > 0 ? l : r) += 1;
    }
    f.left = std::max(l, r) + 1;
    f.right = std::min(l, r);
    if (std::abs(l - r) > 0) throw std::logic_error("unbalanced straddle mesh at " + to_string(f.label));
    return;
  }

  int l = 0, r = 0;
  const Point2 tangent{Rational(1), Rational(0)};
  if (count(tangent, l, r) && std::abs(l - r) <= 1) {
    f.axis = tangent;
    f.left = l;
    f.right = r;
    return;
  }
  std::vector<std::size_t> order(dirs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&dirs](std::size_t x, std::size_t y) { return angle_of(dirs[x]) < angle_of(dirs[y]); });
  double bestGap = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point2& d1 = dirs[order[k]];
    const Point2& d2 = dirs[order[(k + 1) % order.size()]];
    double gap = angle_of(d2) - angle_of(d1);
    if (gap <= 0) gap += 2 * M_PI;
    if (gap >= M_PI) continue;
    const Point2 u = unit_inf(unit_inf(d1) + unit_inf(d2));
    int cl = 0, cr = 0;
    if (!count(u, cl, cr) || std::abs(cl - cr) > 1) continue;
    if (gap > bestGap) {
      bestGap = gap;
      f.axis = u;
      f.left = cl;
      f.right = cr;
    }
  }
  if (bestGap < 0 || deg == 0) {
    if (deg == 0) {
      f.axis = tangent;
      return;
    }
    throw std::logic_error("no balanced mesh axis at " + to_string(f.label));
  }
}

void choose_center_axis(Frame& f, const ExpandedDrawing& base, int m) {
  std::vector<Rational> thetas;
  for (const End& e : f.ends) {
    const auto& p = base.polylines[e.polyline].points;
    thetas.push_back((e.atA ? p.front() : p.back()).x.frac());
  }
  const int deg = static_cast<int>(thetas.size());
  for (int k = 0; k < 8 * m; ++k) {
    const Rational phi(2 * k + 1, 8 * m);
    int l = 0;
    for (const auto& t : thetas)
      if (center_left(t, phi)) ++l;
    if (std::abs(2 * l - deg) <= 1) {
      f.phi0 = phi;
      f.left = l;
      f.right = deg - l;
      return;
    }
  }
  throw std::logic_error("no balanced center axis at " + to_string(f.label));
}

Point2 miter(const Point2& prev, const Point2& at, const Point2& next, const Rational& off) {
  const Point2 d1 = at - prev;
  const Point2 d2 = next - at;
  const Point2 n1 = normal(d1);
  const Point2 n2 = normal(d2);
  const Rational det = cross(d1, Point2{-d2.x, -d2.y});
  if (det.sign() == 0) return at + off * n1;
  const Point2 delta = off * (n2 - n1);
  const Rational t = cross(delta, Point2{-d2.x, -d2.y}) / det;
  return at + off * n1 + t * d1;
}

}  // namespace

SplitGeometry default_split_geometry(int n, int width) {
  const int m = std::max(2, boundary_points(n));
  SplitGeometry g;
  g.entry = Rational(1, 4L * m * m);
  g.centerEntry = Rational(1, 4);
  g.terminalGap = g.entry / Rational(64L * m);
  g.spacing = g.terminalGap / Rational(8L * width);
  g.centerRadius = Rational(1, 8);
  return g;
}

VertexLabel split_terminal(const VertexLabel& base, int side, int width) {
  if (base.tag == Tag::a) return L(side == 0 ? 0 : 2, base.index);
  if (base.tag == Tag::b) return L(width == 4 && side == 1 ? 3 : 1, base.index);
  throw std::invalid_argument("split_terminal: base vertex must be a or b");
}

SplitDrawing generate_split_drawing(int n, int width) {
  return generate_split_drawing(n, width, default_split_geometry(n, width));
}

namespace {

SplitDrawing generate(int n, int width, const SplitGeometry& geo, bool geometry) {
  if (width != 2 && width != 4) throw std::invalid_argument("generate_split_drawing: width must be 2 or 4");
  if (n < 1) throw std::invalid_argument("generate_split_drawing: n must be at least 1");

  SplitDrawing out;
  out.n = n;
  out.width = width;
  out.graph = width == 2 ? product_path3(n) : product_cycle4(n);

  if (n == 1) {
    out.base = trivial_drawing();
    const int layers = width == 2 ? 3 : 4;
    for (int layer = 0; layer < layers; ++layer)
      out.expanded.vertices.push_back({L(layer, 0), {Rational(layer, layers), Rational(1)}, false});
    for (const auto& v : out.base.graph.vertices())
      out.meshes.push_back({v, 0, 0, width, 0, width == 4 || v.tag == Tag::a});
    return out;
  }

  out.base = generate_Dn(n);
  const ExpandedDrawing base = expand_Dn(out.base);
  const int m = boundary_points(n);

  std::map<VertexLabel, Frame> frames;
  for (const auto& v : base.vertices) {
    Frame f;
    f.label = v.label;
    f.split = width == 4 || v.label.tag == Tag::a;
    f.center = v.pole;
    f.at = v.at;
    f.disk = (v.at.y >= Rational(1)) ? Disk::Top : Disk::Bottom;
    frames[v.label] = f;
  }
  std::map<EdgeKey, std::size_t> byEdge;
  for (std::size_t i = 0; i < base.polylines.size(); ++i) {
    const auto& pl = base.polylines[i];
    byEdge[pl.edge] = i;
    frames[pl.edge.u].ends.push_back({i, true});
    frames[pl.edge.v].ends.push_back({i, false});
  }

  // Even n, width 4: the vertex at boundary position p straddles its chord to position p+1.
  std::map<std::size_t, bool> straddledAtA;
  if (width == 4 && n % 2 == 0) {
    for (Disk disk : {Disk::Top, Disk::Bottom}) {
      std::map<Rational, VertexLabel> byAngle;
      for (const auto& [v, p] : out.base.placement)
        if (!p.is_center() && (p.region == Region::TopBoundary) == (disk == Disk::Top)) byAngle[p.angle] = v;
      std::vector<VertexLabel> ring;
      for (const auto& [a, v] : byAngle) ring.push_back(v);
      for (std::size_t p = 0; p < ring.size(); ++p) {
        const VertexLabel v = ring[p];
        const VertexLabel w = ring[(p + 1) % ring.size()];
        if (v == w) continue;
        const std::size_t idx = byEdge.at(EdgeKey(v, w));
        if (straddledAtA.count(idx)) continue;
        straddledAtA[idx] = (base.polylines[idx].edge.u == v);
        frames[v].straddle = idx;
      }
    }
  }

  for (auto& [v, f] : frames) {
    if (f.center) choose_center_axis(f, base, m);
    else choose_boundary_axis(f, base);
    MeshSpec spec{v, f.left, f.right, width, f.straddle ? 1 : 0, f.split};
    out.meshes.push_back(spec);
  }
  if (!geometry) return out;

  // Chart vertices of the product graph.
  for (const auto& [v, f] : frames) {
    if (!f.split) {
      out.expanded.vertices.push_back({split_terminal(v, 0, width), f.at, f.center});
      continue;
    }
    for (int side = 0; side < 2; ++side) {
      Point2 p;
      if (f.center) {
        const Rational y = f.disk == Disk::Top ? f.at.y - geo.centerRadius : f.at.y + geo.centerRadius;
        p = {(side == 1 ? f.phi0 : f.phi0 + Rational(1, 2)).frac(), y};
      } else {
        p = f.at + (side == 1 ? geo.terminalGap : -geo.terminalGap) * f.axis;
        p.x = p.x.frac();
      }
      out.expanded.vertices.push_back({split_terminal(v, side, width), p, false});
    }
  }
  std::sort(out.expanded.vertices.begin(), out.expanded.vertices.end(),
            [](const auto& x, const auto& y) { return x.label < y.label; });

  // Terminal point for `side` at frame f, in the lift of the polyline endpoint `end`.
  auto terminal = [&geo](const Frame& f, const Point2& end, int side) {
    if (f.center) {
      const Rational& theta = end.x;
      const Rational off = (theta - f.phi0).frac();
      Rational pLift, qLift;
      if (off < Rational(1, 2)) {
        pLift = theta - off;
        qLift = pLift + Rational(1, 2);
      } else {
        pLift = theta - off + Rational(1);
        qLift = pLift - Rational(1, 2);
      }
      const Rational y = f.disk == Disk::Top ? end.y - geo.centerRadius : end.y + geo.centerRadius;
      return Point2{side == 1 ? pLift : qLift, y};
    }
    return end + (side == 1 ? geo.terminalGap : -geo.terminalGap) * f.axis;
  };

  // +1 when higher member indices sit nearer terminal side 1 at this end.
  auto preference = [&base](const Frame& f, std::size_t idx, bool atA) {
    const auto& pl = base.polylines[idx];
    Point2 u = f.axis;
    if (f.center) {
      const Rational theta = (atA ? pl.points.front() : pl.points.back()).x;
      u = center_left(theta, f.phi0) ? Point2{Rational(-1), Rational(0)} : Point2{Rational(1), Rational(0)};
    }
    return dot(offset_dir(pl, atA), u).sign();
  };

  for (std::size_t idx = 0; idx < base.polylines.size(); ++idx) {
    const auto& pl = base.polylines[idx];
    const auto& pts = pl.points;
    const Frame& fa = frames.at(pl.edge.u);
    const Frame& fb = frames.at(pl.edge.v);
    const int sa = preference(fa, idx, true);
    const int sb = fb.split ? preference(fb, idx, false) : 1;
    auto it = straddledAtA.find(idx);
    const bool straddleA = it != straddledAtA.end() && it->second;
    const bool straddleB = it != straddledAtA.end() && !it->second;
    if ((sa == 0 && !straddleA) || (sb == 0 && !straddleB))
      throw std::logic_error("bunch parallel to mesh axis on " + to_string(pl.edge));

    std::vector<int> aSide(static_cast<std::size_t>(width)), bSide(static_cast<std::size_t>(width), 0);
    if (width == 2) {
      aSide = sa > 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    } else {
      const std::vector<int> grouped = {0, 0, 1, 1}, groupedRev = {1, 1, 0, 0};
      const std::vector<int> interleaved = {0, 1, 0, 1}, interleavedRev = {1, 0, 1, 0};
      const std::vector<int> straddled = {0, 1, 1, 0};
      if (straddleA) {
        aSide = straddled;
        bSide = sb > 0 ? grouped : groupedRev;
      } else if (straddleB) {
        bSide = straddled;
        aSide = sa > 0 ? grouped : groupedRev;
      } else {
        aSide = sa > 0 ? grouped : groupedRev;
        bSide = sb > 0 ? interleaved : interleavedRev;
      }
    }

    const Point2 firstDir = pts[1] - pts[0];
    const Point2 lastDir = pts.back() - pts[pts.size() - 2];
    const Rational ta = fa.center ? geo.centerEntry : geo.entry / norm_inf(firstDir);
    const Rational tb = fb.center ? geo.centerEntry : geo.entry / norm_inf(lastDir);

    for (int j = 0; j < width; ++j) {
      const Rational off = Rational(2 * j - width + 1, 2) * geo.spacing;
      ExpandedDrawing::Polyline member;
      member.cls = pl.cls;
      const VertexLabel ua = split_terminal(pl.edge.u, aSide[static_cast<std::size_t>(j)], width);
      const VertexLabel vb = split_terminal(pl.edge.v, bSide[static_cast<std::size_t>(j)], width);
      member.edge = EdgeKey(ua, vb);

      member.points.push_back(terminal(fa, pts.front(), aSide[static_cast<std::size_t>(j)]));
      member.points.push_back(pts.front() + ta * firstDir + off * normal(firstDir));
      for (std::size_t i = 1; i + 1 < pts.size(); ++i) member.points.push_back(miter(pts[i - 1], pts[i], pts[i + 1], off));
      if (!fb.split && fb.center) {
        member.points.push_back(pts.back() + off * normal(lastDir));
      } else {
        member.points.push_back(pts.back() - tb * lastDir + off * normal(lastDir));
        member.points.push_back(fb.split ? terminal(fb, pts.back(), bSide[static_cast<std::size_t>(j)]) : pts.back());
      }
      if (member.edge.u != ua) std::reverse(member.points.begin(), member.points.end());
      out.expanded.polylines.push_back(std::move(member));
    }
  }
  std::sort(out.expanded.polylines.begin(), out.expanded.polylines.end(),
            [](const auto& x, const auto& y) { return x.edge < y.edge; });
  return out;
}

}  // namespace

SplitDrawing generate_split_drawing(int n, int width, const SplitGeometry& geo) {
  return generate(n, width, geo, true);
}

SplitDrawing split_meshes(int n, int width) { return generate(n, width, default_split_geometry(n, width), false); }

}  // namespace xatlas
