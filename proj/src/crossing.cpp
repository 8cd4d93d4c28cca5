#include "xatlas/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace xatlas {

namespace {

// x strictly inside the counterclockwise arc from `start` to `end`.
bool strictly_inside(const Rational& x, const Rational& start, const Rational& end) {
  const Rational off = (x - start).frac();
  return off.sign() > 0 && off < (end - start).frac();
}

std::int64_t to_int64(const mpz_class& z) { return z.get_si(); }

}  // namespace

std::string class_pair_key(EdgeClass a, EdgeClass b) {
  std::string x = class_name(a);
  std::string y = class_name(b);
  if (y < x) std::swap(x, y);
  return x + "|" + y;
}

std::int64_t CrossingBreakdown::get(EdgeClass a, EdgeClass b) const {
  auto it = perClassPair.find(class_pair_key(a, b));
  return it == perClassPair.end() ? 0 : it->second;
}

void CrossingBreakdown::add(EdgeClass a, EdgeClass b, std::int64_t k) {
  perClassPair[class_pair_key(a, b)] += k;
  total += k;
}

bool chords_cross(const Chord& c1, const Chord& c2) {
  const Rational a1 = c1.from.frac(), b1 = c1.to.frac(), a2 = c2.from.frac(), b2 = c2.to.frac();
  if (a1 == b1 || a2 == b2) throw std::invalid_argument("chords_cross: degenerate chord");
  if ((a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2)) throw std::invalid_argument("chords_cross: identical chords");
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  return strictly_inside(a2, a1, b1) != strictly_inside(b2, a1, b1);
}

bool radial_crosses_chord(const Radial& r, const Chord& c) {
  if (r.disk != c.disk) return false;
  const Rational start = c.cap_start().frac();
  return strictly_inside(r.angle.frac(), start, start + c.cap_length());
}

std::int64_t helix_crossings(const Helix& h1, const Helix& h2) {
  const Rational d0 = h1.top - h2.top;
  const Rational d1 = (h1.top + h1.winding) - (h2.top + h2.winding);
  const Rational lo = std::min(d0, d1);
  const Rational hi = std::max(d0, d1);
  // integers k with lo < k < hi
  const mpz_class first = lo.floor() + 1;
  const mpz_class last = hi.ceil() - 1;
  return last >= first ? to_int64(last - first + 1) : 0;
}

std::int64_t segment_crossings(const RouteSegment& s1, const RouteSegment& s2) {
  if (const auto* c1 = std::get_if<Chord>(&s1)) {
    if (const auto* c2 = std::get_if<Chord>(&s2)) return c1->disk == c2->disk && chords_cross(*c1, *c2) ? 1 : 0;
    if (const auto* r2 = std::get_if<Radial>(&s2)) return radial_crosses_chord(*r2, *c1) ? 1 : 0;
    return 0;
  }
  if (const auto* r1 = std::get_if<Radial>(&s1)) {
    if (const auto* c2 = std::get_if<Chord>(&s2)) return radial_crosses_chord(*r1, *c2) ? 1 : 0;
    return 0;  // radials share their center or lie on different disks; helices live on the lateral surface
  }
  const auto& h1 = std::get<Helix>(s1);
  if (const auto* h2 = std::get_if<Helix>(&s2)) return helix_crossings(h1, *h2);
  return 0;
}

std::int64_t route_crossings(const Route& r1, const Route& r2) {
  std::int64_t total = 0;
  for (const auto& a : r1.segments)
    for (const auto& b : r2.segments) total += segment_crossings(a, b);
  return total;
}

CrossingBreakdown count_drawing(const CylindricalDrawing& d) {
  validate(d);
  CrossingBreakdown out;
  const auto& routes = d.routes;
  for (std::size_t i = 0; i < routes.size(); ++i)
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      const std::int64_t k = route_crossings(routes[i], routes[j]);
      if (k != 0) out.add(routes[i].cls, routes[j].cls, k);
    }
  return out;
}

namespace {

struct Box {
  double x0, x1, y0, y1;
};

constexpr double kMargin = 1e-9;

struct PreparedPolyline {
  const ExpandedDrawing::Polyline* source;
  std::vector<Box> segBoxes;
  Box box;
};

Box box_of(const Point2& p, const Point2& q) {
  const double px = p.x.to_double(), qx = q.x.to_double(), py = p.y.to_double(), qy = q.y.to_double();
  return {std::min(px, qx) - kMargin, std::max(px, qx) + kMargin, std::min(py, qy) - kMargin,
          std::max(py, qy) + kMargin};
}

int orient(const Point2& a, const Point2& b, const Point2& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

enum class Contact { None, Proper, Touch };

struct SegmentContact {
  Contact kind = Contact::None;
  Point2 at;
};

SegmentContact classify_contact(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const int d1 = orient(r, s, p), d2 = orient(r, s, q), d3 = orient(p, q, r), d4 = orient(p, q, s);
  if (d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
    if (d1 != d2 && d3 != d4) return {Contact::Proper, {}};
    return {};
  }
  if (d1 == 0 && d2 == 0) {
    // collinear: a single shared endpoint is a touch, anything longer is an overlap
    std::vector<Point2> common;
    for (const Point2* x : {&p, &q})
      if (on_segment(*x, r, s)) common.push_back(*x);
    for (const Point2* x : {&r, &s})
      if (on_segment(*x, p, q) && std::find(common.begin(), common.end(), *x) == common.end()) common.push_back(*x);
    if (common.empty()) return {};
    if (common.size() == 1) return {Contact::Touch, common.front()};
    throw DegeneracyError("overlapping collinear segments");
  }
  if (d1 == 0 && on_segment(p, r, s)) return {Contact::Touch, p};
  if (d2 == 0 && on_segment(q, r, s)) return {Contact::Touch, q};
  if (d3 == 0 && on_segment(r, p, q)) return {Contact::Touch, r};
  if (d4 == 0 && on_segment(s, p, q)) return {Contact::Touch, s};
  return {};
}

std::string describe(const ExpandedDrawing::Polyline& a, const ExpandedDrawing::Polyline& b, const Point2& at) {
  return to_string(a.edge) + " and " + to_string(b.edge) + " touch at (" + at.x.str() + ", " + at.y.str() + ")";
}

// Crossings between polyline a and the translate b + k.
std::int64_t pair_crossings(const PreparedPolyline& pa, const PreparedPolyline& pb, long k, bool self) {
  const auto& a = *pa.source;
  const auto& b = *pb.source;
  const Rational shift(k);
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < a.points.size(); ++i) {
    const Box& ba = pa.segBoxes[i];
    for (std::size_t j = 0; j + 1 < b.points.size(); ++j) {
      const Box& bb = pb.segBoxes[j];
      if (bb.x1 + static_cast<double>(k) < ba.x0 || bb.x0 + static_cast<double>(k) > ba.x1 || bb.y1 < ba.y0 ||
          bb.y0 > ba.y1)
        continue;
      const Point2 r{b.points[j].x + shift, b.points[j].y};
      const Point2 s{b.points[j + 1].x + shift, b.points[j + 1].y};
      const SegmentContact c = classify_contact(a.points[i], a.points[i + 1], r, s);
      if (c.kind == Contact::None) continue;
      if (c.kind == Contact::Proper) {
        if (self) throw DegeneracyError("curve " + to_string(a.edge) + " crosses its own translate");
        ++total;
        continue;
      }
      // touching: only a shared terminal vertex is allowed
      const bool aFirst = c.at == a.points.front(), aLast = c.at == a.points.back();
      const bool bFirst = c.at == r && j == 0;
      const bool bLast = c.at == s && j + 2 == b.points.size();
      if ((aFirst || aLast) && (bFirst || bLast)) {
        const VertexLabel va = aFirst ? a.edge.u : a.edge.v;
        const VertexLabel vb = bFirst ? b.edge.u : b.edge.v;
        if (va == vb) continue;
      }
      throw DegeneracyError(describe(a, b, c.at));
    }
  }
  return total;
}

}  // namespace

std::int64_t count_expanded(const ExpandedDrawing& e) {
  validate(e);
  std::vector<PreparedPolyline> prepared;
  prepared.reserve(e.polylines.size());
  for (const auto& pl : e.polylines) {
    PreparedPolyline pp{&pl, {}, {1e300, -1e300, 1e300, -1e300}};
    for (std::size_t i = 0; i + 1 < pl.points.size(); ++i) {
      Box b = box_of(pl.points[i], pl.points[i + 1]);
      pp.segBoxes.push_back(b);
      pp.box = {std::min(pp.box.x0, b.x0), std::max(pp.box.x1, b.x1), std::min(pp.box.y0, b.y0),
                std::max(pp.box.y1, b.y1)};
    }
    prepared.push_back(std::move(pp));
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    const auto& pa = prepared[i];
    for (std::size_t j = i; j < prepared.size(); ++j) {
      const auto& pb = prepared[j];
      if (pb.box.y1 < pa.box.y0 || pb.box.y0 > pa.box.y1) continue;
      const long kLo = static_cast<long>(std::ceil(pa.box.x0 - pb.box.x1));
      const long kHi = static_cast<long>(std::floor(pa.box.x1 - pb.box.x0));
      for (long k = kLo; k <= kHi; ++k) {
        if (i == j && k == 0) continue;
        if (i == j && k < 0) continue;  // the translate by -k is the same pair
        total += pair_crossings(pa, pb, k, i == j);
      }
    }
  }
  return total;
}

std::int64_t mesh_crossings(const MeshSpec& spec) {
  if (spec.left < 0 || spec.right < 0) throw std::invalid_argument("mesh_crossings: negative bunch count");
  if (!spec.split) return 0;
  const std::int64_t l = spec.left, r = spec.right;
  if (spec.width == 2) return l * (l - 1) / 2 + r * (r - 1) / 2;
  if (spec.width == 4) return l * (2 * l - 1) + r * (2 * r - 1);
  throw std::invalid_argument("mesh_crossings: width must be 2 or 4");
}

std::int64_t split_drawing_count(const CylindricalDrawing& base, const std::vector<MeshSpec>& meshes, int width) {
  if (width != 2 && width != 4) throw std::invalid_argument("split_drawing_count: width must be 2 or 4");
  std::set<VertexLabel> covered;
  for (const auto& m : meshes) {
    if (!base.graph.has_vertex(m.vertex)) throw std::invalid_argument("mesh at unknown vertex " + to_string(m.vertex));
    if (!covered.insert(m.vertex).second) throw std::invalid_argument("vertex covered twice: " + to_string(m.vertex));
    if (m.width != width) throw std::invalid_argument("mesh width mismatch at " + to_string(m.vertex));
  }
  if (covered.size() != base.graph.vertex_count()) throw std::invalid_argument("meshes do not cover every vertex");

  const std::int64_t nu = count_drawing(base).total;
  std::int64_t meshTotal = 0;
  std::int64_t reductions = 0;
  for (const auto& m : meshes) {
    meshTotal += mesh_crossings(m);
    reductions += m.reductions;
  }
  if (width == 2) return 4 * nu + meshTotal;
  return 16 * nu + meshTotal - static_cast<std::int64_t>(base.graph.pair_count()) - reductions;
}

}  // namespace xatlas
