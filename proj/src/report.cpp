#include "xatlas/report.hpp"

#include <sstream>
#include <stdexcept>

#include "xatlas/drawing.hpp"
#include "xatlas/formulas.hpp"
#include "xatlas/serialize.hpp"
#include "xatlas/split.hpp"

namespace xatlas {

namespace {

constexpr const char* kCenterGroup = "E_ZXY|*";

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

bool involves_center(const std::string& key) { return key.find("E_ZXY") != std::string::npos; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv, md or json)");
}

std::map<std::string, std::int64_t> expected_breakdown(int n) {
  std::map<std::string, std::int64_t> out;
  const int even = n % 2 == 0 ? n : n - 1;
  if (even >= 6) {
    out[class_pair_key(EdgeClass::EX, EdgeClass::EX)] = nu_ex(even);
    out[class_pair_key(EdgeClass::EY, EdgeClass::EY)] = nu_ex(even);
    out[class_pair_key(EdgeClass::EXY, EdgeClass::EXY)] = nu_exy(even);
  }
  if (n % 2 == 1 && n >= 5) out[kCenterGroup] = odd_increment(n);
  return out;
}

std::optional<std::string> first_breakdown_difference(int n, const CrossingBreakdown& b) {
  const auto expected = expected_breakdown(n);
  std::map<std::string, std::int64_t> counted;
  for (const auto& [key, v] : b.perClassPair) {
    if (key == class_pair_key(EdgeClass::EZXY, EdgeClass::EZXY)) counted[key] += v;
    else if (involves_center(key)) counted[kCenterGroup] += v;
    else counted[key] += v;
  }
  std::map<std::string, std::int64_t> keys = counted;
  keys.insert(expected.begin(), expected.end());
  for (const auto& [key, unused] : keys) {
    const auto c = counted.count(key) ? counted.at(key) : 0;
    const auto e = expected.count(key) ? expected.at(key) : 0;
    if (c != e) return key + ": counted " + std::to_string(c) + ", expected " + std::to_string(e);
  }
  return std::nullopt;
}

VerifyRow verify_one(Family f, int n, bool geometric) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  VerifyRow row;
  row.family = f;
  row.n = n;
  row.formula = upper_bound_formula(f, n);

  std::optional<std::string> classDiff;
  if (f == Family::Knn) {
    const CylindricalDrawing d = n == 1 ? trivial_drawing() : generate_Dn(n);
    const CrossingBreakdown b = count_drawing(d);
    row.counted = b.total;
    if (n >= 2) classDiff = first_breakdown_difference(n, b);
    if (geometric) row.geometric = count_expanded(expand_Dn(d));
  } else {
    const int width = f == Family::P3 ? 2 : 4;
    const SplitDrawing s = geometric ? generate_split_drawing(n, width) : split_meshes(n, width);
    row.counted = split_drawing_count(s.base, s.meshes, width);
    if (n >= 2) classDiff = first_breakdown_difference(n, count_drawing(s.base));
    if (geometric) row.geometric = count_expanded(s.expanded);
  }

  row.match = row.counted == row.formula && !classDiff && (!row.geometric || *row.geometric == row.counted);
  if (classDiff) row.diagnostic = *classDiff;
  else if (row.counted != row.formula)
    row.diagnostic = "total: counted " + std::to_string(row.counted) + ", expected " + std::to_string(row.formula);
  else if (row.geometric && *row.geometric != row.counted)
    row.diagnostic = "geometric count " + std::to_string(*row.geometric) + " differs from " + std::to_string(row.counted);
  return row;
}

std::string format_verify(const std::vector<VerifyRow>& rows, Format fmt) {
  std::ostringstream o;
  switch (fmt) {
    case Format::Csv:
      o << "family,n,counted,formula,geometric,match,diagnostic\n";
      for (const auto& r : rows)
        o << family_name(r.family) << "," << r.n << "," << r.counted << "," << r.formula << "," << opt_str(r.geometric) << ","
          << (r.match ? "yes" : "no") << "," << r.diagnostic << "\n";
      break;
    case Format::Md:
      o << "| family | n | counted | formula | geometric | match | diagnostic |\n";
      o << "|---|---:|---:|---:|---:|---|---|\n";
      for (const auto& r : rows)
        o << "| " << family_name(r.family) << " | " << r.n << " | " << r.counted << " | " << r.formula << " | "
          << opt_str(r.geometric) << " | " << (r.match ? "yes" : "no") << " | " << r.diagnostic << " |\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j = {{"family", family_name(r.family)}, {"n", r.n},         {"counted", r.counted},
                  {"formula", r.formula},            {"match", r.match}, {"diagnostic", r.diagnostic}};
        j["geometric"] = r.geometric ? json(*r.geometric) : json(nullptr);
        arr.push_back(j);
      }
      o << arr.dump(2) << "\n";
      break;
    }
  }
  return o.str();
}

std::string format_bounds(const std::vector<CertifiedInterval>& rows, Format fmt) {
  std::ostringstream o;
  switch (fmt) {
    case Format::Csv:
      o << "family,n,lower_raw,lower,upper,exact,lower_raw_decimal,lower_decimal,lower_source,upper_source\n";
      for (const auto& r : rows)
        o << family_name(r.family) << "," << r.n << "," << (r.lowerRaw ? r.lowerRaw->str() : "") << "," << r.lower.str()
          << "," << r.upper << "," << opt_str(r.exact) << "," << (r.lowerRaw ? r.lowerRaw->decimal(4) : "") << ","
          << r.lower.decimal(4) << "," << r.lowerSource << "," << r.upperSource << "\n";
      break;
    case Format::Md:
      o << "| family | n | lower (raw) | lower | upper | exact |\n";
      o << "|---|---:|---:|---:|---:|---:|\n";
      for (const auto& r : rows)
        o << "| " << family_name(r.family) << " | " << r.n << " | " << (r.lowerRaw ? r.lowerRaw->decimal(4) : "") << " | "
          << r.lower.decimal(4) << " | " << r.upper << " | " << opt_str(r.exact) << " |\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(interval_to_json(r));
      o << arr.dump(2) << "\n";
      break;
    }
  }
  return o.str();
}

EmbedReport embed_report(Family f, int n) {
  EmbedReport r;
  r.family = f;
  r.n = n;
  r.congestion = congestion(build_embedding(f, n));
  r.expected = static_cast<std::int64_t>(n - 2) * (n + 2);
  r.match = r.congestion.congestion == r.expected;
  return r;
}

std::string format_embed(const EmbedReport& r) {
  std::map<std::int64_t, std::int64_t> histogram;
  for (const auto& [edge, load] : r.congestion.perEdgeLoad) ++histogram[load];
  json hist = json::array();
  for (const auto& [load, count] : histogram) hist.push_back({{"load", load}, {"edges", count}});
  const json j = {{"generator", kGenerator},
                  {"family", family_name(r.family)},
                  {"n", r.n},
                  {"congestion", r.congestion.congestion},
                  {"expected", r.expected},
                  {"match", r.match},
                  {"total_load", r.congestion.totalLoad},
                  {"histogram", hist}};
  return j.dump(2) + "\n";
}

}  // namespace xatlas
