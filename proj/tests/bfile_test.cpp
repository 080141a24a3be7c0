#include "mpc/bfile.hpp"

#include <gtest/gtest.h>

#include "mpc/error.hpp"
#include "support.hpp"

namespace mpc {
namespace {

TEST(BFile, MinimalFile) {
  const BFileSequence s = parse_bfile("# c\n1 0\n2 1", "x");
  ASSERT_EQ(s.entries().size(), 2u);
  EXPECT_EQ(s.entries()[0], (BFileEntry{1, 0}));
  EXPECT_EQ(s.entries()[1], (BFileEntry{2, 1}));
  EXPECT_EQ(s.first_index(), 1);
  EXPECT_EQ(s.last_index(), 2);
  EXPECT_EQ(s.source_name(), "x");
}

TEST(BFile, ToleratesWhitespaceAndCrlf) {
  const BFileSequence s = parse_bfile("\n  # header\r\n22 6\r\n23\t6  \n\n");
  EXPECT_EQ(s.at(23), 6u);
  EXPECT_EQ(s.at(22), 6u);
  EXPECT_FALSE(s.at(24).has_value());
  EXPECT_TRUE(s.covers(22, 23));
  EXPECT_FALSE(s.covers(21, 23));
}

TEST(BFile, NegativeIndicesAllowed) {
  const BFileSequence s = parse_bfile("-1 3\n0 4\n5 9");
  EXPECT_EQ(s.at(-1), 3u);
  EXPECT_FALSE(s.covers(0, 5));
}

TEST(BFile, Errors) {
  try {
    parse_bfile("2 1\n2 2");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_bfile("1 0\n# ok\n2 x\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_bfile("1 2 3"), FormatError);
  EXPECT_THROW(parse_bfile("1"), FormatError);
  EXPECT_THROW(parse_bfile("1 -2"), FormatError);
  EXPECT_THROW(load_bfile("/nonexistent/b000000.txt"), Error);
}

TEST(BFileProperty, RenderParseRoundTrip) {
  test::Gen gen(0xbf);
  for (int i = 0; i < 300; ++i) {
    std::vector<BFileEntry> entries;
    std::int64_t index = static_cast<std::int64_t>(gen.uniform(0, 20)) - 10;
    const std::size_t count = gen.uniform(0, 50);
    for (std::size_t j = 0; j < count; ++j) {
      entries.push_back({index, gen.uniform(0, ~std::uint64_t{0})});
      index += static_cast<std::int64_t>(gen.uniform(1, 5));
    }
    const BFileSequence s("seq" + std::to_string(i), entries);
    const BFileSequence back = parse_bfile(render_bfile(s), s.source_name());
    ASSERT_EQ(back, s);
  }
}

}  // namespace
}  // namespace mpc
