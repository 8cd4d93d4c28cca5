#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "xatlas/bounds.hpp"
#include "xatlas/crossing.hpp"
#include "xatlas/formulas.hpp"
#include "xatlas/render.hpp"
#include "xatlas/report.hpp"
#include "xatlas/serialize.hpp"

using namespace xatlas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxDrawingN = 60;
constexpr int kMaxEmbedN = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"((\d{1,6})\.\.(\d{1,6}))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("range must look like A..B");
  const int a = std::stoi(m[1]), b = std::stoi(m[2]);
  if (a > b) throw UsageError("empty range " + s);
  return {a, b};
}

std::pair<int, int> resolve_range(const std::optional<int>& n, const std::string& range, int lo, int hi) {
  if (n && !range.empty()) throw UsageError("give either --n or --range, not both");
  if (!n && range.empty()) throw UsageError("one of --n or --range is required");
  const auto r = n ? std::pair{*n, *n} : parse_range(range);
  if (r.first < lo || r.second > hi)
    throw UsageError("n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return r;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text(out, text);
}

std::int64_t document_count(const DrawingDocument& d) {
  if (d.family == Family::Knn) return count_drawing(d.base).total;
  return split_drawing_count(d.base, d.meshes, d.width);
}

Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Format format_arg(const std::string& s) {
  try {
    return parse_format(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cylindrical drawings, crossing counts and lower bounds for K_{n,n}-nK_2, K_n x P_3 and K_n x C_4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kGenerator));

  std::string family, range, out, style, file;
  std::string countFormat = "json", verifyFormat = "md", boundsFormat = "csv";
  std::optional<int> n;
  bool geometric = false;

  auto* build = app.add_subcommand("build", "construct a drawing and write it as JSON");
  build->add_option("--family", family, "knn, p3 or c4")->required();
  build->add_option("--n", n, "size parameter")->required();
  build->add_option("--out", out, "output file (default stdout)");

  auto* count = app.add_subcommand("count", "count crossings of a drawing file");
  count->add_option("file", file, "drawing JSON written by build")->required();
  count->add_option("--format", countFormat, "csv, md or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compare counted drawings with the closed forms");
  verify->add_option("--family", family, "knn, p3 or c4")->required();
  verify->add_option("--n", n, "single n");
  verify->add_option("--range", range, "A..B");
  verify->add_option("--format", verifyFormat, "csv, md or json")->capture_default_str();
  verify->add_option("--out", out, "output file (default stdout)");
  verify->add_flag("--geometric", geometric, "also count the chart geometry with the generic counter");

  auto* bounds = app.add_subcommand("bounds", "certified lower and upper bounds");
  bounds->add_option("--family", family, "knn, p3 or c4")->required();
  bounds->add_option("--n", n, "single n");
  bounds->add_option("--range", range, "A..B");
  bounds->add_option("--format", boundsFormat, "csv, md or json")->capture_default_str();
  bounds->add_option("--out", out, "output file (default stdout)");

  auto* render = app.add_subcommand("render", "render a drawing file as SVG");
  render->add_option("file", file, "drawing JSON written by build")->required();
  render->add_option("--out", out, "SVG file (default stdout)");
  render->add_option("--style", style, "default, print or a JSON style file")->default_str("default");

  auto* embed = app.add_subcommand("embed", "congestion of the lower-bound embedding");
  embed->add_option("--family", family, "knn, p3 or c4")->required();
  embed->add_option("--n", n, "size parameter (n >= 3)")->required();
  embed->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) {
      const Family f = family_arg(family);
      resolve_range(n, "", 1, kMaxDrawingN);
      emit(out, document_to_json(build_document(f, *n)).dump(1) + "\n");
      return kExitOk;
    }

    if (*count) {
      const Format fmt = format_arg(countFormat);
      const DrawingDocument d = read_document(file);
      const std::int64_t total = document_count(d);
      const std::int64_t geometric = count_expanded(d.expanded);
      const bool agree = total == geometric;
      std::string text;
      if (fmt == Format::Json) {
        json j = {{"generator", kGenerator}, {"family", family_name(d.family)}, {"n", d.n},
                  {"total", total},          {"geometric", geometric},          {"agree", agree}};
        j["base"] = breakdown_to_json(count_drawing(d.base));
        text = j.dump(2) + "\n";
      } else if (fmt == Format::Csv) {
        text = "family,n,total,geometric,agree\n" + family_name(d.family) + "," + std::to_string(d.n) + "," +
               std::to_string(total) + "," + std::to_string(geometric) + "," + (agree ? "yes" : "no") + "\n";
      } else {
        text = "| family | n | total | geometric | agree |\n|---|---:|---:|---:|---|\n| " + family_name(d.family) + " | " +
               std::to_string(d.n) + " | " + std::to_string(total) + " | " + std::to_string(geometric) + " | " +
               (agree ? "yes" : "no") + " |\n";
      }
      std::cout << text;
      return agree ? kExitOk : kExitMismatch;
    }

    if (*verify) {
      const Family f = family_arg(family);
      const Format fmt = format_arg(verifyFormat);
      const auto [a, b] = resolve_range(n, range, 1, kMaxDrawingN);
      std::vector<VerifyRow> rows;
      bool ok = true;
      for (int k = a; k <= b; ++k) {
        rows.push_back(verify_one(f, k, geometric));
        if (!rows.back().match) {
          ok = false;
          std::cerr << family_name(f) << " n=" << k << ": mismatch, " << rows.back().diagnostic << "\n";
        }
      }
      emit(out, format_verify(rows, fmt));
      return ok ? kExitOk : kExitMismatch;
    }

    if (*bounds) {
      const Family f = family_arg(family);
      const Format fmt = format_arg(boundsFormat);
      const auto [a, b] = resolve_range(n, range, 1, static_cast<int>(kFormulaMaxN));
      std::vector<CertifiedInterval> rows;
      for (int k = a; k <= b; ++k) rows.push_back(certify(f, k));
      emit(out, format_bounds(rows, fmt));
      return kExitOk;
    }

    if (*render) {
      RenderStyle s;
      try {
        s = load_style(style);
        validate(s);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const DrawingDocument d = read_document(file);
      emit(out, render_svg(d.expanded, s, document_count(d)));
      return kExitOk;
    }

    if (*embed) {
      const Family f = family_arg(family);
      resolve_range(n, "", 3, kMaxEmbedN);
      const EmbedReport r = embed_report(f, *n);
      emit(out, format_embed(r));
      return r.match ? kExitOk : kExitMismatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // internal disagreement between counted and closed-form values
    std::cerr << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
