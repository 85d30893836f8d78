#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "intval/errors.hpp"
#include "intval/sequence_io.hpp"

using namespace intval;

TEST(Bfile, ParsesContiguousIndices) {
  const auto s = parse_bfile("0 1\n1 2\n2 5");
  EXPECT_EQ(s, Sequence(0, {1, 2, 5}));
  EXPECT_TRUE(s.all_integer());
}

TEST(Bfile, CommentsAndBlankLines) {
  const auto s = parse_bfile("# A000000\n\n3 -4\n4 123456789012345678901234567890\n# end\n");
  EXPECT_EQ(s.start(), 3);
  EXPECT_EQ(s.at(4), parse_rational("123456789012345678901234567890"));
}

TEST(Bfile, GapReportsLine) {
  try {
    parse_bfile("0 1\n2 5");
    FAIL() << "gap accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(Bfile, Rejects) {
  EXPECT_THROW(parse_bfile(""), ParseError);
  EXPECT_THROW(parse_bfile("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_bfile("0 1/2\n"), ParseError);
  EXPECT_THROW(parse_bfile("-1 3\n"), ParseError);
  EXPECT_THROW(parse_bfile("1 3\n0 4\n"), ParseError);
  EXPECT_THROW(emit_bfile(Sequence(0, {parse_rational("1/2")})), InputError);
}

TEST(Structured, RationalValues) {
  const auto s = parse_structured(R"({"start": 2, "values": ["1/2", 3, "-4"]})");
  EXPECT_EQ(s.start(), 2);
  EXPECT_FALSE(s.all_integer());
  EXPECT_EQ(s.at(2), parse_rational("1/2"));
  EXPECT_THROW(parse_structured(R"({"start": 0})"), ParseError);
  EXPECT_THROW(parse_structured("not json"), ParseError);
  EXPECT_THROW(parse_structured(R"({"start": 0, "values": []})"), ParseError);
}

TEST(SequenceIo, RoundTripBothFormats) {
  gen::Gen g(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto start = g.integer(0, 50);
    std::vector<Rational> ints, rats;
    const auto n = g.integer(1, 30);
    for (std::int64_t i = 0; i < n; ++i) {
      ints.push_back(g.rational(1'000'000, 1) * pow2(static_cast<std::uint64_t>(g.integer(0, 100))));
      rats.push_back(g.rational(1000, 1000));
    }
    const Sequence si(start, ints), sr(start, rats);
    ASSERT_EQ(parse_bfile(emit_bfile(si)), si);
    ASSERT_EQ(parse_structured(emit_structured(si)), si);
    ASSERT_EQ(parse_structured(emit_structured(sr)), sr);
  }
}

TEST(SequenceIo, ReadFileErrors) {
  EXPECT_THROW(read_sequence("/nonexistent/file.b", SequenceFormat::bfile), IoError);
  const auto path = std::filesystem::temp_directory_path() / "intval_bad.b";
  std::ofstream(path) << "0 1\n2 3\n";
  try {
    read_sequence(path, SequenceFormat::bfile);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
    EXPECT_EQ(e.line(), 2U);
  }
  std::filesystem::remove(path);
  EXPECT_EQ(format_from_path("x.json"), SequenceFormat::structured);
  EXPECT_EQ(format_from_path("b000045.txt"), SequenceFormat::bfile);
  EXPECT_THROW(format_from_name("csv"), InputError);
}
