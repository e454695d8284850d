#include "patience/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>

namespace patience::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "patience");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Sort) {
  const auto r = invoke({"sort", "64518723"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n\":8,\"piles\":[[6,4,1],[5,2],[8,7,3]]}\n");
}

TEST(Cli, RpwAndNormal) {
  EXPECT_EQ(invoke({"rpw", "64518723"}).out, "64152873\n");
  EXPECT_EQ(invoke({"normal", "231"}).out, "213\n");
}

TEST(Cli, Shadow) {
  EXPECT_EQ(invoke({"shadow", "2143"}).out, "{\"lines\":[[[1,2],[2,1]],[[3,4],[4,3]]]}\n");
}

TEST(Cli, ExtendedAndInvertRoundTrip) {
  const auto ext = invoke({"extended", "64518723"});
  EXPECT_EQ(ext.out,
            "{\"R\":{\"n\":8,\"piles\":[[6,4,1],[5,2],[8,7,3]]},"
            "\"S\":{\"n\":8,\"piles\":[[4,2,1],[7,3],[8,6,5]]}}\n");
  const auto inv = invoke({"invert", "--pair", "-"}, ext.out);
  EXPECT_EQ(inv.code, 0);
  EXPECT_EQ(inv.out, "64518723\n");
  EXPECT_EQ(invoke({"invert"}, ext.out).out, "64518723\n");
}

TEST(Cli, InvertErrors) {
  const auto unstable =
      invoke({"invert"}, R"({"R":{"n":3,"piles":[[3,1],[2]]},"S":{"n":3,"piles":[[3,1],[2]]}})");
  EXPECT_EQ(unstable.code, kDomain);
  EXPECT_NE(unstable.err.find("stable"), std::string::npos);

  EXPECT_EQ(invoke({"invert"}, R"({"R":{"n":4,"piles":[[4,3],[2,1]]},"S":{"n":4,"piles":[[2,1],[4,3]]}})").code,
            kDomain);
  EXPECT_EQ(invoke({"invert"}, R"({"R":{"n":3,"piles":[[2,1]]},"S":{"n":2,"piles":[[2,1]]}})").code, kDomain);
  EXPECT_EQ(invoke({"invert"}, "not json").code, kUsage);
  EXPECT_EQ(invoke({"invert"}, R"({"R":{"piles":"x"},"S":{}})").code, kUsage);
  EXPECT_EQ(invoke({"invert", "--pair", "/nonexistent/file.json"}).code, kUsage);
}

TEST(Cli, ClassIsSorted) {
  EXPECT_EQ(invoke({"class", "231"}).out, "213\n231\n");
  EXPECT_EQ(invoke({"class", "123"}).out, "123\n");
}

TEST(Cli, Avoid) {
  const auto r = invoke({"avoid", "--pattern", "3-~1-42", "231"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(invoke({"avoid", "--pattern", "3-~1-42", "3142"}).out, "true\n");
  EXPECT_EQ(invoke({"avoid", "--pattern", "3-12", "--pattern", "3-21", "123"}).out, "true\n");
}

TEST(Cli, Occurrences) {
  EXPECT_EQ(invoke({"occurrences", "--pattern", "2-31", "2431"}).out, "{\"positions\":[1,3,4]}\n");
  EXPECT_EQ(invoke({"occurrences", "--pattern", "21", "123"}).out, "");
  EXPECT_EQ(invoke({"occurrences", "--pattern", "3-~1-42", "2431"}).code, kDomain);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(invoke({"enumerate", "--what", "configs", "--n", "2"}).out,
            "{\"n\":2,\"piles\":[[2,1]]}\n{\"n\":2,\"piles\":[[1],[2]]}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "configs", "--n", "2", "--sorted"}).out,
            "{\"n\":2,\"piles\":[[1],[2]]}\n{\"n\":2,\"piles\":[[2,1]]}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "configs", "--n", "5", "--count"}).out,
            "{\"n\":5,\"label\":\"pile configs\",\"value\":52}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "noncrossing", "--n", "4", "--count"}).out,
            "{\"n\":4,\"label\":\"non-crossing configs\",\"value\":8}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "stable-pairs", "--n", "4", "--count"}).out,
            "{\"n\":4,\"label\":\"stable pairs\",\"value\":24}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "avoiders", "--n", "5", "--pattern", "3-~1-42"}).out,
            "{\"n\":5,\"label\":\"avoiders 3-~1-42\",\"value\":52}\n");
  EXPECT_EQ(invoke({"enumerate", "--what", "avoiders", "--n", "3", "--pattern", "2-31", "--list"}).out,
            "123\n132\n213\n312\n321\n");
}

TEST(Cli, EnumerateGuardsAndErrors) {
  EXPECT_EQ(invoke({"enumerate", "--what", "stable-pairs", "--n", "6"}).code, kDomain);
  EXPECT_EQ(invoke({"enumerate", "--what", "avoiders", "--n", "9", "--pattern", "21"}).code, kDomain);
  EXPECT_EQ(invoke({"enumerate", "--what", "avoiders", "--n", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"enumerate", "--what", "bogus", "--n", "3"}).code, kUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"sort"}).code, kUsage);
  EXPECT_EQ(invoke({"sort", "--frobnicate", "12"}).code, kUsage);
  EXPECT_EQ(invoke({"sort", "122"}).code, kUsage);
  EXPECT_EQ(invoke({"avoid", "--pattern", "1--2", "12"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"class", "34152"}, {"extended", "10,2,3,4,5,6,7,8,9,1"}, {"enumerate", "--what", "configs", "--n", "4"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
  EXPECT_EQ(invoke({"rpw", "10,2,3,4,5,6,7,8,9,1"}).out, "10,2,1,3,4,5,6,7,8,9\n");
}

TEST(Cli, VerifySmall) {
  const auto r = invoke({"verify", "--max-n", "4"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("\"pass\":false"), std::string::npos);
  EXPECT_NE(r.out.find("{\"check\":\"stable-pair surjectivity\",\"n\":4,\"pass\":true"), std::string::npos);
}

}  // namespace
}  // namespace patience::cli
