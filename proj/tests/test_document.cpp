#include "multbound/reports.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace multbound;

TEST(Csv, QuotingRules) {
  EXPECT_EQ(csv::quote("plain"), "plain");
  EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_THROW(csv::parse("a,\"b\n"), DomainError);
  EXPECT_TRUE(csv::parse("").header.empty());
}

TEST(Csv, RenderParseRoundTripProperty) {
  std::mt19937 rng(1729);
  const std::string alphabet = "ab1,\"\n =x";
  auto field = [&] {
    std::string s;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t cols = 1 + rng() % 4;
    CsvTable t;
    for (std::size_t c = 0; c < cols; ++c) t.header.push_back("h" + std::to_string(c));
    const std::size_t rows = rng() % 5;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < cols; ++c) row.push_back(field());
      // A lone empty field renders as a blank line, which is ambiguous.
      if (cols == 1 && row[0].empty()) row[0] = "e";
      t.rows.push_back(row);
    }
    ASSERT_EQ(csv::parse(csv::render(t)), t) << csv::render(t);
  }
}

TEST(Document, JsonShape) {
  const auto doc = reports::mubar_document(36, 4);
  const auto j = nlohmann::json::parse(doc.render(Format::Json));
  EXPECT_EQ(j, doc.to_json());
  EXPECT_EQ(j.at("schema_version"), "1");
  EXPECT_EQ(j.at("kind"), "mubar");
  EXPECT_EQ(j.at("payload").at("value"), "966");
  EXPECT_EQ(doc.render(Format::Markdown), "966\n");
  EXPECT_EQ(doc.render(Format::Csv), "a,b,value\n36,4,966\n");
}

TEST(Document, StarOutsideU) {
  const auto doc = reports::mubar_document(3, 2);
  EXPECT_EQ(doc.markdown, "*\n");
  EXPECT_EQ(doc.payload.at("admissible"), false);
}

TEST(Document, CertificateRendering) {
  const auto c = certify("lattice-count-le-volume", BigInt(1), Relation::LessEqual,
                         Rational(9, 4), {{"a", "4"}, {"b", "2"}});
  EXPECT_EQ(markdown_line(c), "- [ok] lattice-count-le-volume: 1 <= 9/4  (a=4 b=2)\n");
  const auto j = to_json(c);
  EXPECT_EQ(j.at("rhs"), "9/4");
  EXPECT_EQ(j.at("holds"), true);
  EXPECT_EQ(csv_row(c).size(), certificate_csv_header().size());
}

TEST(Document, BigValuesStayExactInJson) {
  const auto doc = reports::mubar_document(900, 20);
  const std::string value = doc.payload.at("value");
  EXPECT_EQ(value, mubar({900, 20}).str());
  EXPECT_GT(value.size(), 15U);
}

TEST(Document, GlobalTableDeterministic) {
  const std::map<int, BigInt> published{{4, 6}};
  for (const Format f : {Format::Json, Format::Csv, Format::Markdown}) {
    const auto first = reports::global_table_document(20, true, published, {}).render(f);
    const auto second = reports::global_table_document(20, true, published, {}).render(f);
    EXPECT_EQ(first, second);
  }
  const auto md = reports::global_table_document(5, false, published, {}).render(Format::Markdown);
  EXPECT_NE(md.find("computed 8, published 6"), std::string::npos);
}

TEST(Document, FamilyFlagsExponent) {
  const auto doc = reports::family_document(5, 3, kDefaultDirectRange);
  EXPECT_NE(doc.markdown.find("verdict: established_direct"), std::string::npos);
  EXPECT_NE(doc.markdown.find("flag:"), std::string::npos);
}

TEST(Document, LatticeMarkdown) {
  const auto doc = reports::lattice_document(16, 2);
  EXPECT_EQ(doc.markdown.rfind("lattice points of Delta: 49\n", 0), 0U);
}
