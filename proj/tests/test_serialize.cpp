#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "xatlas/serialize.hpp"

using namespace xatlas;

TEST(Serialize, GraphRoundTrip) {
  for (const Graph& g : {knn_minus_matching(4), product_cycle4(3), multi_complete_bipartite(2, 3, 5)}) {
    const json j = graph_to_json(g);
    EXPECT_EQ(graph_from_json(j), g);
  }
  const json j = graph_to_json(multi_complete_bipartite(1, 1, 3));
  EXPECT_EQ(j.at("edges").at(0).at("mult"), 3);
}

TEST(Serialize, SegmentRoundTrip) {
  const std::vector<RouteSegment> segs = {Chord{Disk::Top, Rational(1, 8), Rational(3, 8), false},
                                          Radial{Disk::Bottom, Rational(5, 6)},
                                          Helix{Rational(1, 4), Rational(3, 4), Rational(-1, 2)}};
  for (const auto& s : segs) EXPECT_EQ(segment_from_json(segment_to_json(s)), s);
  EXPECT_THROW(segment_from_json(json{{"kind", "spiral"}}), std::invalid_argument);
}

TEST(Serialize, DrawingRoundTripKeepsCount) {
  for (int n = 2; n <= 9; ++n) {
    const CylindricalDrawing d = generate_Dn(n);
    const CylindricalDrawing back = drawing_from_json(json::parse(drawing_to_json(d).dump()));
    EXPECT_EQ(back, d) << n;
    EXPECT_EQ(count_drawing(back).total, count_drawing(d).total);
  }
}

TEST(Serialize, DocumentRoundTrip) {
  for (Family f : {Family::Knn, Family::P3, Family::C4})
    for (int n : {1, 2, 5}) {
      const DrawingDocument d = build_document(f, n);
      const std::string text = document_to_json(d).dump(1);
      const DrawingDocument back = document_from_json(json::parse(text));
      EXPECT_EQ(back, d) << family_name(f) << " " << n;
      EXPECT_EQ(document_to_json(back).dump(1), text);
      EXPECT_EQ(count_expanded(back.expanded), count_expanded(d.expanded));
    }
}

TEST(Serialize, DocumentBytesAreDeterministic) {
  EXPECT_EQ(document_to_json(build_document(Family::C4, 4)).dump(1), document_to_json(build_document(Family::C4, 4)).dump(1));
}

TEST(Serialize, DocumentHeader) {
  const json j = document_to_json(build_document(Family::Knn, 3));
  EXPECT_EQ(j.at("generator"), kGenerator);
  EXPECT_EQ(j.at("version"), kFormatVersion);
  EXPECT_EQ(j.at("family"), "knn");
  EXPECT_EQ(j.at("width"), 1);
  EXPECT_EQ(j.at("base").at("placements").at(0).at("angle").get<std::string>().find('/') != std::string::npos, true);
}

TEST(Serialize, RejectsMalformedDocuments) {
  json j = document_to_json(build_document(Family::P3, 3));
  json wrongVersion = j;
  wrongVersion["version"] = 99;
  EXPECT_THROW(document_from_json(wrongVersion), std::invalid_argument);
  json wrongWidth = j;
  wrongWidth["width"] = 4;
  EXPECT_THROW(document_from_json(wrongWidth), std::invalid_argument);
  json badAngle = j;
  badAngle["base"]["placements"][0]["angle"] = "1/0";
  EXPECT_THROW(document_from_json(badAngle), std::invalid_argument);
  json missing = j;
  missing.erase("graph");
  EXPECT_THROW(document_from_json(missing), json::exception);
}

TEST(Serialize, ReadDocumentErrors) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string bad = (dir / "xatlas_bad_doc.json").string();
  write_text(bad, "{ not json");
  EXPECT_THROW(read_document(bad), std::invalid_argument);
  std::remove(bad.c_str());
  EXPECT_THROW(read_document((dir / "xatlas_missing_doc.json").string()), std::runtime_error);

  const std::string good = (dir / "xatlas_good_doc.json").string();
  const DrawingDocument d = build_document(Family::Knn, 6);
  write_text(good, document_to_json(d).dump());
  EXPECT_EQ(read_document(good), d);
  std::remove(good.c_str());
}

TEST(Serialize, IntervalJson) {
  const json j = interval_to_json(certify(Family::Knn, 5));
  EXPECT_EQ(j.at("lower"), "4/1");
  EXPECT_EQ(j.at("upper"), 4);
  EXPECT_EQ(j.at("exact"), 4);
  EXPECT_EQ(j.at("euler"), 4);
  EXPECT_TRUE(interval_to_json(certify(Family::Knn, 1)).at("lower_raw").is_null());
}
