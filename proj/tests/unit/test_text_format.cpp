#include <gtest/gtest.h>

#include "symchar/schur.hpp"
#include "symchar/text_format.hpp"

using namespace symchar;

TEST(TextFormat, ParsePartition) {
  EXPECT_EQ(parse_partition("4,2,2,1"), Partition({4, 2, 2, 1}));
  EXPECT_EQ(parse_partition("0"), Partition{});
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_partition("[1,2^2,4]"), Partition({4, 2, 2, 1}));
  EXPECT_EQ(parse_partition(" 3, 1 "), Partition({3, 1}));
}

TEST(TextFormat, ParseErrorsNameTheToken) {
  for (const char* bad : {"2,x", "1,2", "3,-1", "[2^a]", "65"}) {
    try {
      parse_partition(bad);
      FAIL() << bad;
    } catch (const std::invalid_argument& e) {
      EXPECT_FALSE(std::string(e.what()).empty());
    }
  }
  try {
    parse_partition("2,x");
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
  }
}

TEST(TextFormat, RationalLabels) {
  EXPECT_EQ(parse_rational_label("1;1"), PartitionPair({1}, {1}));
  EXPECT_EQ(parse_rational_label("2,1;0"), PartitionPair({2, 1}, {}));
  EXPECT_THROW(parse_rational_label("1"), std::invalid_argument);
}

TEST(TextFormat, FormatSymFunc) {
  EXPECT_EQ(format(s({2}) + s({1, 1})), "s[2] + s[1,1]");
  EXPECT_EQ(format(s({2}) * Integer(2) - s({1, 1})), "2s[2] - s[1,1]");
  EXPECT_EQ(format(SymFunc{}), "0");
  EXPECT_EQ(format(-s({1})), "-s[1]");
  EXPECT_EQ(format(s({2}) + one(), LabelKind::o), "[2] + [0]");
  EXPECT_EQ(format(s({2, 1}), LabelKind::sp), "<2,1>");
  EXPECT_EQ(format(s({1}), LabelKind::thibon), "<<1>>");
  EXPECT_EQ(format(s({1}) + one(), LabelKind::reduced), "<1> + <0>");
}

TEST(TextFormat, FormatTensors) {
  EXPECT_EQ(format(tensor({1}, {})), "s[1](x)s[0]");
  EXPECT_EQ(format_rational(tensor({2}, {1}) + tensor({1, 1}, {1})), "{2;1} + {1,1;1}");
}

TEST(TextFormat, RoundTrip) {
  for (const Partition& p : partitions_up_to(8)) ASSERT_EQ(parse_partition(to_string(p)), p);
}
