#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gkat/algebra_file.hpp"
#include "gkat/errors.hpp"
#include "gkat/instances.hpp"
#include "gkat/laws.hpp"
#include "support.hpp"

namespace gkat {
namespace {

using testing::el;
using testing::nm;

std::filesystem::path data(const std::string& file) {
  return std::filesystem::path(GKAT_DATA_DIR) / file;
}

const char* kTiny = R"(# two points
algebra tiny
elements 0 1
tests 0 1
zero 0
one 1
table plus
0 1
1 1
table seq
0 0
0 1
table arrow
1 1
0 1
table star
1 1
)";

struct Golden {
  const char* file;
  const char* builtin;
  SuiteName suite;
};

class GoldenFiles : public ::testing::TestWithParam<Golden> {};

TEST_P(GoldenFiles, MatchBuiltinTables) {
  const auto file = load_algebra(data(GetParam().file));
  const auto builtin = std::dynamic_pointer_cast<const FiniteAlgebra>(make_builtin(GetParam().builtin));
  ASSERT_TRUE(builtin);
  EXPECT_EQ(file->name(), builtin->name());
  EXPECT_EQ(file->identity_hash(), builtin->identity_hash());
  EXPECT_EQ(serialize(file->data()), serialize(builtin->data()));
}

TEST_P(GoldenFiles, PassAssignedSuite) {
  const auto file = load_algebra(data(GetParam().file));
  const auto r = run_law_suite(*file, GetParam().suite, Exhaustive{});
  EXPECT_TRUE(r.all_hold()) << GetParam().file << ": " << (r.first_failure() ? r.first_failure()->law : "");
}

INSTANTIATE_TEST_SUITE_P(
    Shipped, GoldenFiles,
    ::testing::Values(Golden{"bool2.alg", "bool2", SuiteName::KAT},
                      Golden{"chain3.alg", "chain3", SuiteName::IGKAT},
                      Golden{"powerset2.alg", "powerset:xy", SuiteName::KAT},
                      Golden{"luka5.alg", "luka:5", SuiteName::GKAT},
                      Golden{"godel5.alg", "godel:5", SuiteName::IGKAT},
                      Golden{"wajsberg4.alg", "wajsberg:4", SuiteName::GKAT},
                      Golden{"ex9.alg", "ex9", SuiteName::GKAT},
                      Golden{"lemma4.alg", "lemma4", SuiteName::GKAT},
                      Golden{"lemma6.alg", "lemma6", SuiteName::GKAT}),
    [](const auto& info) {
      std::string s = info.param.file;
      return s.substr(0, s.find('.'));
    });

TEST(AlgebraFile, Ex9Lookup) {
  const auto a = load_algebra(data("ex9.alg"));
  EXPECT_EQ(nm(*a, a->seq(el(*a, "m"), el(*a, "1"))), "m");
}

TEST(AlgebraFile, ParsesMinimalFile) {
  const auto a = parse_algebra(kTiny);
  EXPECT_EQ(a->name(), "tiny");
  EXPECT_EQ(a->size(), 2u);
  EXPECT_TRUE(run_law_suite(*a, SuiteName::KAT, Exhaustive{}).all_hold());
}

TEST(AlgebraFile, CommentsAndBlankLines) {
  std::string text = kTiny;
  text.insert(0, "\n\n   # leading\n");
  text.replace(text.find("table seq"), 9, "table seq   # trailing comment");
  EXPECT_EQ(parse_algebra(text)->identity_hash(), parse_algebra(kTiny)->identity_hash());
}

TEST(AlgebraFile, SaveRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "gkat_file_test";
  std::filesystem::create_directories(dir);
  for (const char* spec : {"ex9", "luka:3", "powerset:xyz", "wajsberg:5"}) {
    const auto a = std::dynamic_pointer_cast<const FiniteAlgebra>(make_builtin(spec));
    const auto path = dir / "out.alg";
    save_algebra(*a, path);
    const auto b = load_algebra(path);
    EXPECT_EQ(serialize(a->data()), serialize(b->data())) << spec;
  }
  std::filesystem::remove_all(dir);
}

std::pair<std::size_t, std::size_t> parse_position(const std::string& text) {
  try {
    parse_algebra_data(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  if (at == std::string::npos) throw std::logic_error("no " + from);
  return s.replace(at, from.size(), to);
}

TEST(AlgebraFile, ParseErrorPositions) {
  EXPECT_EQ(parse_position(replace(kTiny, "algebra tiny", "algebr tiny")), std::make_pair(2ul, 1ul));
  EXPECT_EQ(parse_position(replace(kTiny, "tests 0 1", "tests 0 2")), std::make_pair(4ul, 9ul));
  EXPECT_EQ(parse_position(replace(kTiny, "zero 0", "zero 0 1")), std::make_pair(5ul, 1ul));
  EXPECT_EQ(parse_position(replace(kTiny, "0 0\n0 1", "0 0\n0")), std::make_pair(12ul, 1ul));
  EXPECT_EQ(parse_position(replace(kTiny, "elements 0 1", "elements 0 0")), std::make_pair(3ul, 12ul));
  EXPECT_EQ(parse_position(replace(kTiny, "table star\n1 1\n", "")).first, 16u);
  EXPECT_EQ(parse_position(std::string(kTiny) + "extra\n"), std::make_pair(18ul, 1ul));
  EXPECT_EQ(parse_position(""), std::make_pair(1ul, 1ul));
}

TEST(AlgebraFile, UndeclaredTableEntryNamesCell) {
  try {
    parse_algebra(replace(kTiny, "table plus\n0 1\n1 1", "table plus\n0 1\n1 x"));
    FAIL();
  } catch (const ClosureError& e) {
    EXPECT_EQ(e.table(), "plus");
    EXPECT_EQ(e.row(), "1");
    EXPECT_EQ(e.column(), "1");
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
  }
  try {
    parse_algebra(replace(kTiny, "table star\n1 1", "table star\n1 q"));
    FAIL();
  } catch (const ClosureError& e) {
    EXPECT_EQ(e.table(), "star");
    EXPECT_EQ(e.row(), "1");
    EXPECT_EQ(e.column(), "-");
  }
}

TEST(AlgebraFile, TestClosureViolation) {
  // Demote 1 from the tests: constants must be tests.
  EXPECT_THROW(parse_algebra(replace(kTiny, "tests 0 1", "tests 0")), ClosureError);
  // A three-point algebra whose tests {0, 1} are not closed under ;.
  const std::string three = R"(algebra three
elements 0 m 1
tests 0 1
zero 0
one 1
table plus
0 m 1
m m 1
1 1 1
table seq
0 0 0
0 m m
0 m m
table arrow
1 _ 1
_ _ _
0 _ 1
table star
1 1 1
)";
  try {
    parse_algebra(three);
    FAIL();
  } catch (const ClosureError& e) {
    EXPECT_EQ(e.table(), "seq");
    EXPECT_EQ(e.row(), "1");
    EXPECT_EQ(e.column(), "1");
  }
  const auto data = parse_algebra_data(three);
  EXPECT_EQ(data.arrow[1], FiniteAlgebraData::kUnset);
}

TEST(AlgebraFile, UnreadablePath) {
  EXPECT_THROW(load_algebra("/nonexistent/x.alg"), Error);
}

}  // namespace
}  // namespace gkat
