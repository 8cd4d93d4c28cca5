#include "xatlas/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "xatlas/formulas.hpp"

namespace xatlas {

namespace {

Rational rat(const json& j) { return Rational::parse(j.get<std::string>()); }
VertexLabel label(const json& j) { return parse_label(j.get<std::string>()); }

json point_to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

Point2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be a pair");
  return {rat(j[0]), rat(j[1])};
}

}  // namespace

json graph_to_json(const Graph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back(to_string(v));
  json es = json::array();
  for (const auto& [key, mult] : g.edge_map()) es.push_back({{"u", to_string(key.u)}, {"v", to_string(key.v)}, {"mult", mult}});
  return {{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const json& j) {
  Graph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(label(v));
  for (const auto& e : j.at("edges")) {
    const VertexLabel u = label(e.at("u")), v = label(e.at("v"));
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw std::invalid_argument("edge with an undeclared endpoint");
    g.add_edge(u, v, e.value("mult", std::int64_t{1}));
  }
  return g;
}

json segment_to_json(const RouteSegment& s) {
  if (const auto* c = std::get_if<Chord>(&s))
    return {{"kind", "chord"}, {"disk", disk_name(c->disk)}, {"from", c->from.str()}, {"to", c->to.str()}, {"ccw", c->ccw}};
  if (const auto* r = std::get_if<Radial>(&s))
    return {{"kind", "radial"}, {"disk", disk_name(r->disk)}, {"angle", r->angle.str()}};
  const auto& h = std::get<Helix>(s);
  return {{"kind", "helix"}, {"top", h.top.str()}, {"bottom", h.bottom.str()}, {"winding", h.winding.str()}};
}

RouteSegment segment_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "chord") return Chord{parse_disk(j.at("disk")), rat(j.at("from")), rat(j.at("to")), j.at("ccw").get<bool>()};
  if (kind == "radial") return Radial{parse_disk(j.at("disk")), rat(j.at("angle"))};
  if (kind == "helix") return Helix{rat(j.at("top")), rat(j.at("bottom")), rat(j.at("winding"))};
  throw std::invalid_argument("unknown segment kind: " + kind);
}

json drawing_to_json(const CylindricalDrawing& d) {
  json placements = json::array();
  for (const auto& [v, p] : d.placement)
    placements.push_back({{"vertex", to_string(v)}, {"region", region_name(p.region)}, {"angle", p.angle.str()}});
  json routes = json::array();
  for (const auto& r : d.routes) {
    json segs = json::array();
    for (const auto& s : r.segments) segs.push_back(segment_to_json(s));
    routes.push_back({{"u", to_string(r.edge.u)}, {"v", to_string(r.edge.v)}, {"class", class_name(r.cls)}, {"segments", segs}});
  }
  return {{"n", d.n},
          {"graph", graph_to_json(d.graph)},
          {"params",
           {{"bottomShift", d.params.bottomShift},
            {"topDepartureSign", d.params.topDepartureSign},
            {"bottomDepartureSign", d.params.bottomDepartureSign}}},
          {"placements", placements},
          {"routes", routes}};
}

CylindricalDrawing drawing_from_json(const json& j) {
  CylindricalDrawing d;
  d.n = j.at("n").get<int>();
  d.graph = graph_from_json(j.at("graph"));
  const json& p = j.at("params");
  d.params = {p.at("bottomShift").get<int>(), p.at("topDepartureSign").get<int>(), p.at("bottomDepartureSign").get<int>()};
  for (const auto& pl : j.at("placements")) {
    const VertexLabel v = label(pl.at("vertex"));
    if (!d.placement.emplace(v, CylinderPoint{parse_region(pl.at("region")), rat(pl.at("angle"))}).second)
      throw std::invalid_argument("vertex placed twice: " + to_string(v));
  }
  for (const auto& r : j.at("routes")) {
    Route route;
    route.edge = EdgeKey(label(r.at("u")), label(r.at("v")));
    if (route.edge.u != label(r.at("u"))) throw std::invalid_argument("route endpoints out of order");
    route.cls = parse_class(r.at("class"));
    for (const auto& s : r.at("segments")) route.segments.push_back(segment_from_json(s));
    d.routes.push_back(std::move(route));
  }
  std::sort(d.routes.begin(), d.routes.end(), [](const Route& a, const Route& b) { return a.edge < b.edge; });
  return d;
}

json expanded_to_json(const ExpandedDrawing& e) {
  json vs = json::array();
  for (const auto& v : e.vertices) vs.push_back({{"vertex", to_string(v.label)}, {"at", point_to_json(v.at)}, {"pole", v.pole}});
  json ps = json::array();
  for (const auto& pl : e.polylines) {
    json pts = json::array();
    for (const auto& p : pl.points) pts.push_back(point_to_json(p));
    ps.push_back({{"u", to_string(pl.edge.u)}, {"v", to_string(pl.edge.v)}, {"class", class_name(pl.cls)}, {"points", pts}});
  }
  return {{"vertices", vs}, {"polylines", ps}};
}

ExpandedDrawing expanded_from_json(const json& j) {
  ExpandedDrawing e;
  for (const auto& v : j.at("vertices"))
    e.vertices.push_back({label(v.at("vertex")), point_from_json(v.at("at")), v.at("pole").get<bool>()});
  for (const auto& p : j.at("polylines")) {
    ExpandedDrawing::Polyline pl;
    pl.edge = EdgeKey(label(p.at("u")), label(p.at("v")));
    if (pl.edge.u != label(p.at("u"))) throw std::invalid_argument("polyline endpoints out of order");
    pl.cls = parse_class(p.at("class"));
    for (const auto& pt : p.at("points")) pl.points.push_back(point_from_json(pt));
    e.polylines.push_back(std::move(pl));
  }
  return e;
}

json mesh_to_json(const MeshSpec& m) {
  return {{"vertex", to_string(m.vertex)}, {"left", m.left},   {"right", m.right},
          {"width", m.width},             {"split", m.split}, {"reductions", m.reductions}};
}

MeshSpec mesh_from_json(const json& j) {
  return {label(j.at("vertex")), j.at("left").get<int>(),       j.at("right").get<int>(),
          j.at("width").get<int>(), j.at("reductions").get<int>(), j.at("split").get<bool>()};
}

json breakdown_to_json(const CrossingBreakdown& b) {
  json per = json::object();
  for (const auto& [k, v] : b.perClassPair) per[k] = v;
  return {{"total", b.total}, {"perClassPair", per}};
}

json interval_to_json(const CertifiedInterval& c) {
  json j = {{"family", family_name(c.family)},
            {"n", c.n},
            {"lower_raw", c.lowerRaw ? json(c.lowerRaw->str()) : json(nullptr)},
            {"lower", c.lower.str()},
            {"upper", c.upper},
            {"exact", c.exact ? json(*c.exact) : json(nullptr)},
            {"lower_source", c.lowerSource},
            {"upper_source", c.upperSource}};
  if (c.skewness) j["euler"] = *c.skewness;
  return j;
}

DrawingDocument build_document(Family f, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  DrawingDocument d;
  d.family = f;
  d.n = n;
  if (f == Family::Knn) {
    d.width = 1;
    d.base = n == 1 ? trivial_drawing() : generate_Dn(n);
    d.graph = d.base.graph;
    d.expanded = expand_Dn(d.base);
    return d;
  }
  d.width = f == Family::P3 ? 2 : 4;
  SplitDrawing s = generate_split_drawing(n, d.width);
  d.graph = std::move(s.graph);
  d.base = std::move(s.base);
  d.meshes = std::move(s.meshes);
  d.expanded = std::move(s.expanded);
  return d;
}

json document_to_json(const DrawingDocument& d) {
  json meshes = json::array();
  for (const auto& m : d.meshes) meshes.push_back(mesh_to_json(m));
  return {{"generator", kGenerator},
          {"version", kFormatVersion},
          {"family", family_name(d.family)},
          {"n", d.n},
          {"width", d.width},
          {"graph", graph_to_json(d.graph)},
          {"base", drawing_to_json(d.base)},
          {"meshes", meshes},
          {"expanded", expanded_to_json(d.expanded)}};
}

void check_consistent(const DrawingDocument& d) {
  validate(d.base);
  validate(d.expanded);
  if (d.family == Family::Knn && !(d.graph == d.base.graph)) throw std::invalid_argument("graph differs from the base drawing");
  std::vector<VertexLabel> drawn;
  for (const auto& v : d.expanded.vertices) drawn.push_back(v.label);
  if (drawn != d.graph.vertices()) throw std::invalid_argument("drawn vertices differ from the graph");
  std::map<EdgeKey, std::int64_t> copies;
  for (const auto& pl : d.expanded.polylines) ++copies[pl.edge];
  if (copies != d.graph.edge_map()) throw std::invalid_argument("drawn edges differ from the graph");
}

DrawingDocument document_from_json(const json& j) {
  if (j.value("version", 0) != kFormatVersion) throw std::invalid_argument("unsupported document version");
  DrawingDocument d;
  d.family = parse_family(j.at("family").get<std::string>());
  d.n = j.at("n").get<int>();
  d.width = j.at("width").get<int>();
  const int expectedWidth = d.family == Family::Knn ? 1 : d.family == Family::P3 ? 2 : 4;
  if (d.width != expectedWidth) throw std::invalid_argument("width does not match the family");
  d.graph = graph_from_json(j.at("graph"));
  d.base = drawing_from_json(j.at("base"));
  for (const auto& m : j.at("meshes")) d.meshes.push_back(mesh_from_json(m));
  d.expanded = expanded_from_json(j.at("expanded"));
  check_consistent(d);
  return d;
}

DrawingDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace xatlas
