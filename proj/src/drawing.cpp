#include "xatlas/drawing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xatlas {

namespace {

Disk other(Disk d) { return d == Disk::Top ? Disk::Bottom : Disk::Top; }

Region mirrored(Region r) {
  switch (r) {
    case Region::TopBoundary: return Region::BottomBoundary;
    case Region::BottomBoundary: return Region::TopBoundary;
    case Region::TopCenter: return Region::BottomCenter;
    case Region::BottomCenter: return Region::TopCenter;
  }
  return r;
}

EdgeClass classify(const CylinderPoint& p, const CylinderPoint& q) {
  if (p.is_center() || q.is_center()) return EdgeClass::EZXY;
  if (p.region == q.region) return p.region == Region::TopBoundary ? EdgeClass::EX : EdgeClass::EY;
  return EdgeClass::EXY;
}

Chord chord_between(Disk disk, const Rational& from, const Rational& to) {
  const Rational len = (to - from).frac();
  // minor arc; a diameter takes the arc running counterclockwise from `from`
  return Chord{disk, from, to, len <= Rational(1, 2)};
}

std::string point_text(const CylinderPoint& p) {
  return region_name(p.region) + (p.is_center() ? "" : "@" + p.angle.str());
}

}  // namespace

std::string region_name(Region r) {
  switch (r) {
    case Region::TopBoundary: return "TopBoundary";
    case Region::BottomBoundary: return "BottomBoundary";
    case Region::TopCenter: return "TopCenter";
    case Region::BottomCenter: return "BottomCenter";
  }
  return "?";
}

Region parse_region(const std::string& s) {
  for (Region r : {Region::TopBoundary, Region::BottomBoundary, Region::TopCenter, Region::BottomCenter})
    if (region_name(r) == s) return r;
  throw std::invalid_argument("unknown region: " + s);
}

std::string disk_name(Disk d) { return d == Disk::Top ? "top" : "bottom"; }

Disk parse_disk(const std::string& s) {
  if (s == "top") return Disk::Top;
  if (s == "bottom") return Disk::Bottom;
  throw std::invalid_argument("unknown disk: " + s);
}

std::string class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::EX: return "E_X";
    case EdgeClass::EY: return "E_Y";
    case EdgeClass::EXY: return "E_XY";
    case EdgeClass::EZXY: return "E_ZXY";
  }
  return "?";
}

EdgeClass parse_class(const std::string& s) {
  for (EdgeClass c : {EdgeClass::EX, EdgeClass::EY, EdgeClass::EXY, EdgeClass::EZXY})
    if (class_name(c) == s) return c;
  throw std::invalid_argument("unknown edge class: " + s);
}

CylinderPoint CylinderPoint::boundary(Disk d, const Rational& angle) {
  return {d == Disk::Top ? Region::TopBoundary : Region::BottomBoundary, angle.frac()};
}

CylinderPoint CylinderPoint::center(Disk d) {
  return {d == Disk::Top ? Region::TopCenter : Region::BottomCenter, Rational(0)};
}

Helix Helix::shortest(const Rational& top, const Rational& bottom) {
  Rational w = (bottom - top).frac();
  if (w > Rational(1, 2)) w -= Rational(1);
  return Helix{top.frac(), bottom.frac(), w};
}

std::pair<CylinderPoint, CylinderPoint> segment_endpoints(const RouteSegment& s) {
  return std::visit(
      [](const auto& seg) -> std::pair<CylinderPoint, CylinderPoint> {
        using T = std::decay_t<decltype(seg)>;
        if constexpr (std::is_same_v<T, Chord>) {
          return {CylinderPoint::boundary(seg.disk, seg.from), CylinderPoint::boundary(seg.disk, seg.to)};
        } else if constexpr (std::is_same_v<T, Radial>) {
          return {CylinderPoint::center(seg.disk), CylinderPoint::boundary(seg.disk, seg.angle)};
        } else {
          return {CylinderPoint::boundary(Disk::Top, seg.top), CylinderPoint::boundary(Disk::Bottom, seg.bottom)};
        }
      },
      s);
}

const Route& CylindricalDrawing::route(const EdgeKey& e) const {
  auto it = std::lower_bound(routes.begin(), routes.end(), e,
                             [](const Route& r, const EdgeKey& k) { return r.edge < k; });
  if (it == routes.end() || it->edge != e) throw std::out_of_range("no route for edge " + to_string(e));
  return *it;
}

std::size_t CylindricalDrawing::class_size(EdgeClass c) const {
  return static_cast<std::size_t>(
      std::count_if(routes.begin(), routes.end(), [c](const Route& r) { return r.cls == c; }));
}

int boundary_points(int n) { return n % 2 == 0 ? n : n - 1; }

int default_bottom_shift(int n) {
  const int m = boundary_points(n);
  if (m <= 0) return 0;
  return (2 * ((m + 3) / 4) - 1) % m;
}

DrawingParams default_params(int n) {
  const int m = boundary_points(n);
  DrawingParams p;
  p.bottomShift = default_bottom_shift(n);
  if (m % 4 == 0) {
    p.topDepartureSign = -1;
    p.bottomDepartureSign = 1;
  } else {
    p.topDepartureSign = 1;
    p.bottomDepartureSign = -1;
  }
  return p;
}

CylindricalDrawing generate_Dn(int n) { return generate_Dn(n, default_params(n)); }

CylindricalDrawing generate_Dn(int n, const DrawingParams& params) {
  if (n < 2) throw std::invalid_argument("generate_Dn: n must be at least 2");
  if (std::abs(params.topDepartureSign) != 1 || std::abs(params.bottomDepartureSign) != 1)
    throw std::invalid_argument("generate_Dn: departure signs must be +1 or -1");
  const int m = boundary_points(n);
  CylindricalDrawing d;
  d.n = n;
  d.params = params;
  d.graph = knn_minus_matching(n);

  for (int p = 0; p < m; ++p) {
    const VertexLabel top = (p % 2 == 0) ? A(p) : B(p);
    d.placement[top] = CylinderPoint::boundary(Disk::Top, Rational(p, m));
    const int idx = ((p + params.bottomShift) % m + m) % m;
    const VertexLabel bottom = (idx % 2 == 1) ? A(idx) : B(idx);
    d.placement[bottom] = CylinderPoint::boundary(Disk::Bottom, Rational(p, m));
  }
  if (n % 2 == 1) {
    d.placement[A(n - 1)] = CylinderPoint::center(Disk::Top);
    d.placement[B(n - 1)] = CylinderPoint::center(Disk::Bottom);
  }

  const Rational nudge(1, 4 * m);
  for (const auto& [key, mult] : d.graph.edge_map()) {
    const CylinderPoint& pa = d.placement.at(key.u);
    const CylinderPoint& pb = d.placement.at(key.v);
    Route r;
    r.edge = key;
    r.cls = classify(pa, pb);
    switch (r.cls) {
      case EdgeClass::EX:
        r.segments.emplace_back(chord_between(Disk::Top, pa.angle, pb.angle));
        break;
      case EdgeClass::EY:
        r.segments.emplace_back(chord_between(Disk::Bottom, pa.angle, pb.angle));
        break;
      case EdgeClass::EXY:
        if (pa.region == Region::TopBoundary)
          r.segments.emplace_back(Helix::shortest(pa.angle, pb.angle));
        else
          r.segments.emplace_back(Helix::shortest(pb.angle, pa.angle));
        break;
      case EdgeClass::EZXY:
        if (pa.region == Region::TopCenter) {
          if (pb.region == Region::TopBoundary) {
            r.segments.emplace_back(Radial{Disk::Top, pb.angle});
          } else {
            const Rational theta = (pb.angle + Rational(params.topDepartureSign) * nudge).frac();
            r.segments.emplace_back(Radial{Disk::Top, theta});
            r.segments.emplace_back(Helix{theta, pb.angle, Rational(-params.topDepartureSign) * nudge});
          }
        } else {
          if (pa.region == Region::BottomBoundary) {
            r.segments.emplace_back(Radial{Disk::Bottom, pa.angle});
          } else {
            const Rational theta = (pa.angle + Rational(params.bottomDepartureSign) * nudge).frac();
            r.segments.emplace_back(Helix{pa.angle, theta, Rational(params.bottomDepartureSign) * nudge});
            r.segments.emplace_back(Radial{Disk::Bottom, theta});
          }
        }
        break;
    }
    d.routes.push_back(std::move(r));
  }
  return d;
}

CylindricalDrawing trivial_drawing() {
  CylindricalDrawing d;
  d.n = 1;
  d.graph = knn_minus_matching(1);
  d.placement[A(0)] = CylinderPoint::boundary(Disk::Top, Rational(0));
  d.placement[B(0)] = CylinderPoint::boundary(Disk::Top, Rational(1, 2));
  return d;
}

void validate(const CylindricalDrawing& d) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("malformed drawing: " + msg); };

  std::set<std::pair<Region, Rational>> used;
  for (const auto& v : d.graph.vertices()) {
    auto it = d.placement.find(v);
    if (it == d.placement.end()) fail("vertex " + to_string(v) + " not placed");
    const CylinderPoint& p = it->second;
    if (p.angle < Rational(0) || p.angle >= Rational(1)) fail("angle outside [0,1) at " + to_string(v));
    if (p.is_center() && p.angle != Rational(0)) fail("center point carries an angle");
    if (!used.insert({p.region, p.angle}).second) fail("two vertices at " + point_text(p));
  }
  if (d.placement.size() != d.graph.vertex_count()) fail("placement of unknown vertex");
  if (d.routes.size() != d.graph.pair_count()) fail("edge/route count mismatch");

  std::set<std::pair<Region, Rational>> vertexPoints = used;
  for (std::size_t i = 0; i < d.routes.size(); ++i) {
    const Route& r = d.routes[i];
    if (i > 0 && !(d.routes[i - 1].edge < r.edge)) fail("routes not sorted by edge");
    if (d.graph.multiplicity(r.edge.u, r.edge.v) == 0) fail("route for non-edge " + to_string(r.edge));
    if (r.segments.empty()) fail("empty route " + to_string(r.edge));
    const CylinderPoint start = d.placement.at(r.edge.u);
    const CylinderPoint end = d.placement.at(r.edge.v);
    if (classify(start, end) != r.cls) fail("class tag mismatch on " + to_string(r.edge));
    CylinderPoint cur = start;
    for (std::size_t s = 0; s < r.segments.size(); ++s) {
      const RouteSegment& seg = r.segments[s];
      if (const auto* c = std::get_if<Chord>(&seg)) {
        if (c->from == c->to) fail("degenerate chord on " + to_string(r.edge));
        if (c->cap_length() > Rational(1, 2)) fail("chord cap longer than half a turn on " + to_string(r.edge));
      }
      if (const auto* h = std::get_if<Helix>(&seg)) {
        if ((h->top + h->winding - h->bottom).frac() != Rational(0)) fail("helix winding inconsistent on " + to_string(r.edge));
        if (abs(h->winding) > Rational(1, 2)) fail("helix winding exceeds half a turn on " + to_string(r.edge));
      }
      auto [p0, p1] = segment_endpoints(seg);
      if (p0.angle >= Rational(1) || p0.angle < Rational(0) || p1.angle >= Rational(1) || p1.angle < Rational(0))
        fail("segment angle outside [0,1) on " + to_string(r.edge));
      if (p0 == cur) cur = p1;
      else if (p1 == cur) cur = p0;
      else fail("segment chain broken on " + to_string(r.edge));
      if (s + 1 < r.segments.size() && vertexPoints.count({cur.region, cur.angle}))
        fail("route " + to_string(r.edge) + " passes through a vertex at " + point_text(cur));
    }
    if (!(cur == end)) fail("route " + to_string(r.edge) + " does not end at its endpoint");
  }
}

CylindricalDrawing rotate(const CylindricalDrawing& d, const Rational& offset) {
  CylindricalDrawing out = d;
  for (auto& [v, p] : out.placement)
    if (!p.is_center()) p.angle = (p.angle + offset).frac();
  for (auto& r : out.routes)
    for (auto& seg : r.segments)
      std::visit(
          [&offset](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Chord>) {
              s.from = (s.from + offset).frac();
              s.to = (s.to + offset).frac();
            } else if constexpr (std::is_same_v<T, Radial>) {
              s.angle = (s.angle + offset).frac();
            } else {
              s.top = (s.top + offset).frac();
              s.bottom = (s.bottom + offset).frac();
            }
          },
          seg);
  return out;
}

CylindricalDrawing mirror(const CylindricalDrawing& d) {
  CylindricalDrawing out = d;
  for (auto& [v, p] : out.placement) p.region = mirrored(p.region);
  for (auto& r : out.routes) {
    if (r.cls == EdgeClass::EX) r.cls = EdgeClass::EY;
    else if (r.cls == EdgeClass::EY) r.cls = EdgeClass::EX;
    for (auto& seg : r.segments)
      std::visit(
          [](auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Chord>) {
              s.disk = other(s.disk);
            } else if constexpr (std::is_same_v<T, Radial>) {
              s.disk = other(s.disk);
            } else {
              std::swap(s.top, s.bottom);
              s.winding = -s.winding;
            }
          },
          seg);
  }
  return out;
}

const ExpandedDrawing::Vertex& ExpandedDrawing::vertex(const VertexLabel& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](const Vertex& x, const VertexLabel& l) { return x.label < l; });
  if (it == vertices.end() || it->label != v) throw std::out_of_range("no chart vertex " + to_string(v));
  return *it;
}

Rational chord_height(const Rational& capLength) { return Rational(2) * capLength * capLength; }

Rational pole_y(Disk d) { return d == Disk::Top ? Rational(2) : Rational(-1); }

Rational rim_y(Disk d) { return d == Disk::Top ? Rational(1) : Rational(0); }

std::vector<Point2> segment_chart(const RouteSegment& s) {
  return std::visit(
      [](const auto& seg) -> std::vector<Point2> {
        using T = std::decay_t<decltype(seg)>;
        if constexpr (std::is_same_v<T, Chord>) {
          const Rational len = seg.cap_length();
          const Rational y0 = rim_y(seg.disk);
          const Rational apex = seg.disk == Disk::Top ? y0 + chord_height(len) : y0 - chord_height(len);
          const Rational dir = seg.ccw ? Rational(1) : Rational(-1);
          return {{seg.from, y0}, {seg.from + dir * len / Rational(2), apex}, {seg.from + dir * len, y0}};
        } else if constexpr (std::is_same_v<T, Radial>) {
          return {{seg.angle, pole_y(seg.disk)}, {seg.angle, rim_y(seg.disk)}};
        } else {
          return {{seg.top, Rational(1)}, {seg.top + seg.winding, Rational(0)}};
        }
      },
      s);
}

ExpandedDrawing expand_Dn(const CylindricalDrawing& d) {
  validate(d);
  ExpandedDrawing e;
  for (const auto& v : d.graph.vertices()) {
    const CylinderPoint& p = d.placement.at(v);
    ExpandedDrawing::Vertex ev;
    ev.label = v;
    switch (p.region) {
      case Region::TopBoundary: ev.at = {p.angle, Rational(1)}; break;
      case Region::BottomBoundary: ev.at = {p.angle, Rational(0)}; break;
      case Region::TopCenter: ev.at = {Rational(0), pole_y(Disk::Top)}; ev.pole = true; break;
      case Region::BottomCenter: ev.at = {Rational(0), pole_y(Disk::Bottom)}; ev.pole = true; break;
    }
    e.vertices.push_back(ev);
  }
  for (const Route& r : d.routes) {
    ExpandedDrawing::Polyline pl;
    pl.edge = r.edge;
    pl.cls = r.cls;
    CylinderPoint cur = d.placement.at(r.edge.u);
    for (const RouteSegment& seg : r.segments) {
      auto [p0, p1] = segment_endpoints(seg);
      std::vector<Point2> pts = segment_chart(seg);
      if (p0 == cur) {
        cur = p1;
      } else {
        std::reverse(pts.begin(), pts.end());
        cur = p0;
      }
      Rational shift;
      if (!pl.points.empty()) shift = pl.points.back().x - pts.front().x;
      else if (!d.placement.at(r.edge.u).is_center()) shift = d.placement.at(r.edge.u).angle - pts.front().x;
      for (std::size_t i = pl.points.empty() ? 0 : 1; i < pts.size(); ++i)
        pl.points.push_back({pts[i].x + shift, pts[i].y});
    }
    e.polylines.push_back(std::move(pl));
  }
  return e;
}

void validate(const ExpandedDrawing& e) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("malformed expanded drawing: " + msg); };
  std::set<std::pair<Rational, Rational>> seen;
  std::set<Rational> poles;
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    const auto& v = e.vertices[i];
    if (i > 0 && !(e.vertices[i - 1].label < v.label)) fail("vertices not sorted");
    if (v.pole) {
      if (!poles.insert(v.at.y).second) fail("two vertices on one pole line");
    } else {
      if (v.at.x < Rational(0) || v.at.x >= Rational(1)) fail("vertex x outside [0,1)");
      if (!seen.insert({v.at.x, v.at.y}).second) fail("coincident vertices at " + to_string(v.label));
    }
  }
  for (const auto& v : e.vertices)
    if (!v.pole && poles.count(v.at.y)) fail("vertex on a pole line");
  auto matches = [](const ExpandedDrawing::Vertex& v, const Point2& p) {
    if (v.pole) return p.y == v.at.y;
    return p.y == v.at.y && (p.x - v.at.x).is_integer();
  };
  for (const auto& pl : e.polylines) {
    if (pl.points.size() < 2) fail("polyline with fewer than two points");
    if (!matches(e.vertex(pl.edge.u), pl.points.front()) || !matches(e.vertex(pl.edge.v), pl.points.back()))
      fail("polyline endpoints do not match vertices for " + to_string(pl.edge));
    for (std::size_t i = 1; i < pl.points.size(); ++i)
      if (pl.points[i] == pl.points[i - 1]) fail("repeated point in polyline " + to_string(pl.edge));
  }
}

}  // namespace xatlas
