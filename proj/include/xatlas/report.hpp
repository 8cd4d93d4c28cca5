#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xatlas/bounds.hpp"
#include "xatlas/crossing.hpp"

namespace xatlas {

enum class Format { Csv, Md, Json };

Format parse_format(const std::string& s);

// Closed-form per class-pair counts of D_n (pairs absent from the map are expected to be 0).
std::map<std::string, std::int64_t> expected_breakdown(int n);

// First class pair whose count differs from expected_breakdown, as "E_X|E_X: counted 5, expected 4".
std::optional<std::string> first_breakdown_difference(int n, const CrossingBreakdown& b);

struct VerifyRow {
  Family family = Family::Knn;
  int n = 0;
  std::int64_t counted = 0;  // knn: drawing count; p3/c4: split accounting
  std::int64_t formula = 0;
  std::optional<std::int64_t> geometric;  // generic count of the chart drawing, when requested
  bool match = false;
  std::string diagnostic;
};

VerifyRow verify_one(Family f, int n, bool geometric);

std::string format_verify(const std::vector<VerifyRow>& rows, Format fmt);
std::string format_bounds(const std::vector<CertifiedInterval>& rows, Format fmt);

struct EmbedReport {
  Family family = Family::Knn;
  int n = 0;
  CongestionReport congestion;
  std::int64_t expected = 0;
  bool match = false;
};

EmbedReport embed_report(Family f, int n);
std::string format_embed(const EmbedReport& r);

}  // namespace xatlas
