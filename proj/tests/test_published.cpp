#include "multbound/published.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace multbound;

namespace {

PublishedTables parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_published(in);
}

}  // namespace

TEST(Published, DataFileCounts) {
  const auto t = load_published(MULTBOUND_PUBLISHED_TABLES);
  EXPECT_EQ(t.version, 1);
  EXPECT_EQ(t.local.size(), 232U);
  const auto defined = std::count_if(t.local.begin(), t.local.end(),
                                     [](const PublishedLocalCell& c) { return c.value.has_value(); });
  EXPECT_EQ(defined, 167);
  const auto maxima = std::count_if(t.local.begin(), t.local.end(),
                                    [](const PublishedLocalCell& c) { return c.column_max; });
  EXPECT_EQ(maxima, 36);
  ASSERT_EQ(t.global.size(), 36U);
  const auto values = t.global_values();
  EXPECT_EQ(values.at(16), 308);
  EXPECT_EQ(values.at(36), 7980);
  const auto excluded = std::count_if(t.global.begin(), t.global.end(),
                                      [](const PublishedGlobalRow& g) { return g.excluded; });
  EXPECT_EQ(excluded, 1);
}

TEST(Published, MinimalRecords) {
  const auto t = parse_text(
      "# comment\n"
      "version 1\n"
      "local a=4 b=2 value=4 max=1 src=x\n"
      "local a=3 b=2 value=* src=x\n"
      "global a=5 value=15 r=3 b=1,1,1\n");
  ASSERT_EQ(t.local.size(), 2U);
  EXPECT_EQ(t.local[0].value, BigInt(4));
  EXPECT_TRUE(t.local[0].column_max);
  EXPECT_FALSE(t.local[1].value.has_value());
  EXPECT_EQ(t.global[0].maximizer.b, (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(t.global[0].excluded);
}

TEST(Published, Errors) {
  EXPECT_THROW(parse_text("local a=4 b=2 value=4\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 2\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nlocal a=4 value=4\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nlocal a=4 b=x value=4\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nlocal a=4 b=2 value=-4\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nglobal a=5 value=15 r=2 b=1,1,1\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nrow a=1\n"), PublishedFormatError);
  EXPECT_THROW(parse_text("version 1\nlocal a=4 b=2 value\n"), PublishedFormatError);
  EXPECT_THROW(load_published("/nonexistent/tables.txt"), std::runtime_error);
  try {
    parse_text("version 1\n\nlocal a=4 b=2\n");
    FAIL();
  } catch (const PublishedFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
