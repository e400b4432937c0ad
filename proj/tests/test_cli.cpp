#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcpinfer/cli.hpp"

using namespace lcpinfer;
using cli::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "lcpinfer");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("lcpinfer_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, InferSevenSymbolArray) {
  const auto r = call({"infer", "--lcp", "1 4 0 2 1 3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  EXPECT_EQ(j["bwt"], "babbbaa");
  EXPECT_EQ(j["swaps"], json::parse("[[1,3]]"));
  EXPECT_EQ(j["rendered"], "b[ab]bbaa");
  EXPECT_EQ(cli::inference_from_json(j), *infer(parse_lcp("1 4 0 2 1 3")));
  EXPECT_EQ(cli::lcp_from_json(j["lcp"]), parse_lcp("1 4 0 2 1 3"));
}

TEST(Cli, InferRejects) {
  const auto r = call({"infer", "--lcp", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("invalid LCP array"), std::string::npos);
}

TEST(Cli, DfaCount) {
  const auto r = call({"dfa", "--lcp", "1 0 1 0 2", "--count"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["count"], 8);
  EXPECT_EQ(call({"--text", "dfa", "--lcp", "1 0 1 0 2", "--count"}).out, "8\n");
  EXPECT_EQ(call({"dfa", "--lcp", "1 4 0 2 1 3", "--accepts", "bbabbaa"}).code, 0);
  EXPECT_EQ(call({"dfa", "--lcp", "1 4 0 2 1 3", "--accepts", "aaaaaaa"}).code, 1);
  const auto e = call({"dfa", "--lcp", "1 0 1 0 2", "--enumerate", "--limit", "3"}).j();
  EXPECT_EQ(e["solutions"], json::parse(R"(["abccab","abccba","baccab"])"));
  EXPECT_EQ(e["truncated"], true);
  EXPECT_EQ(call({"dfa", "--lcp", "2", "--count"}).code, 1);
}

TEST(Cli, VerifyAcceptsInferAndEnumerateOutput) {
  for (const char* lcp : {"1 4 0 2 1 3", "2 5 1 4 3 4 2 0 3 2 5 3 1", "2 1 2 0 2 1", "w"}) {
    const auto inf = call({"infer", "--lcp", lcp});
    ASSERT_EQ(inf.code, 0);
    EXPECT_EQ(call({"verify", "--input", "-"}, inf.out).code, 0) << lcp;
    const auto en = call({"enumerate", "--lcp", lcp});
    ASSERT_EQ(en.code, 0);
    EXPECT_EQ(call({"verify", "--input", "-"}, en.out).code, 0) << lcp;
  }
  EXPECT_EQ(call({"verify", "--lcp", "1 4 0 2 1 3", "--bwt", "aaaaaaa"}).code, 1);
  EXPECT_EQ(call({"verify", "--lcp", "1 4 0 2 1 3", "--bwt", "ab"}).code, 2);
}

TEST(Cli, EnumerateLimit) {
  const auto j = call({"enumerate", "--lcp", "2 1 2 0 2 1", "--limit", "5"}).j();
  EXPECT_EQ(j["solutions"].size(), 5u);
  EXPECT_EQ(j["truncated"], true);
}

TEST(Cli, StringTransforms) {
  EXPECT_EQ(call({"bwt", "--words", "aab aab ab"}).j()["bwt"], "bbaabaaa");
  EXPECT_EQ(call({"ibwt", "--bwt", "bbaabaaa"}).j()["words"], json::parse(R"(["ab","aab","aab"])"));
  EXPECT_EQ(call({"lcp", "--words", "ab aab aab"}).j()["lcp"], json::parse(R"(["w",1,"w",3,0,"w",2])"));
  EXPECT_EQ(call({"--text", "lcp", "--words", "aababa", "--variant", "terminated"}).out, "0 1 1 3 0 2\n");
  EXPECT_EQ(call({"--text", "lcp", "--words", "aababab", "--variant", "open"}).out, "1 2 4 0 1 3\n");
  const std::string words = temp_file("words.txt", "b\n\nbabb\n");
  EXPECT_EQ(call({"--text", "lcp", "--input", words, "--variant", "terminated-set"}).out, "0 0 0 1 1 1\n");
  EXPECT_EQ(call({"lcp", "--words", "a$b", "--variant", "open"}).code, 2);
  EXPECT_EQ(call({"bwt", "--words", "abab"}).code, 2);
}

TEST(Cli, SingleString) {
  const auto r = call({"single", "--lcp", "1 4 0 2 1 3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["word"], "aabbabb");
  EXPECT_EQ(call({"verify", "--input", "-"}, r.out).code, 0);
  EXPECT_EQ(call({"single", "--lcp", "w 0"}).code, 1);
  EXPECT_EQ(call({"single", "--lcp", "1"}).code, 1);
}

TEST(Cli, SatPipeline) {
  const std::string sat = temp_file("sat.cnf", "p cnf 3 1\n1 2 3 0\n");
  const std::string unsat = temp_file("unsat.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  const auto s = call({"ccec-solve", "--cnf", sat});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.j()["solvable"], true);
  EXPECT_EQ(call({"ccec-solve", "--cnf", unsat}).code, 1);
  EXPECT_EQ(call({"ccec-solve", "--cnf", sat, "--cap", "2"}).code, 3);

  const auto l = call({"sat2lcp", "--cnf", unsat, "--cores"});
  ASSERT_EQ(l.code, 0) << l.err;
  const auto j = l.j();
  EXPECT_EQ(j["partitions"], 6);
  for (const auto& c : j["cores"]) EXPECT_NE(c["form"], "unclassified");
  const auto lcp_text = call({"--text", "sat2lcp", "--cnf", unsat}).out;
  EXPECT_EQ(call({"single", "--lcp", lcp_text}).code, 1);
  const auto d = call({"sat2lcp", "--cnf", unsat, "--terminator"}).j();
  EXPECT_NE(d["words"].dump().find('$'), std::string::npos);

  EXPECT_EQ(call({"ccec-solve", "--cnf", temp_file("bad.cnf", "p cnf 2 1\n1 2 0\n")}).code, 2);
  EXPECT_EQ(call({"ccec-solve", "--cnf", "/nonexistent/file.cnf"}).code, 2);
}

TEST(Cli, Oracle) {
  const auto r = call({"oracle", "--lcp", "1 4 0 2 1 3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["solutions"].size(), 2u);
  EXPECT_EQ(call({"oracle", "--lcp", "w 0", "--variant", "cyclic"}).code, 1);
  EXPECT_EQ(call({"oracle", "--lcp", "1 1 1 1 1 1 1 1 1 1", "--guard", "100"}).code, 3);
}

TEST(Cli, Dot) {
  const std::string f = temp_file("dot.cnf", "p cnf 1 1\n1 1 1 0\n");
  const std::vector<std::vector<std::string>> calls{{"dot", "--target", "ccec", "--cnf", f},
                                                    {"dot", "--target", "dfa", "--lcp", "1 0 1 0 2"},
                                                    {"dot", "--target", "bwtgraph", "--lcp", "1 4 0 2 1 3"}};
  for (const auto& args : calls) {
    const auto r = call(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(r.out.back(), '\n');
  }
  EXPECT_EQ(call({"dot", "--target", "tree", "--lcp", "0"}).code, 2);
}

TEST(Cli, Transform) {
  EXPECT_EQ(call({"transform", "--lcp", "0 1 1 3 0 2", "--from", "BTSILA", "--to", "BOSILA"}).j()["lcp"],
            json::parse("[1,1,3,0,2]"));
  EXPECT_EQ(call({"transform", "--lcp", "1 1 3 0 2", "--from", "BTSILA", "--to", "BOSILA"}).code, 1);
  EXPECT_EQ(call({"transform", "--lcp", "0", "--from", "BTSILA", "--to", "OSSILA"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"infer"}).code, 2);
  EXPECT_EQ(call({"infer", "--lcp", "1 x"}).code, 2);
  EXPECT_EQ(call({"infer", "--lcp", "-1"}).code, 2);
  EXPECT_EQ(call({"dfa", "--lcp", "0", "--count", "--enumerate"}).code, 2);
  EXPECT_EQ(call({"verify", "--input", "-"}, "{not json").code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}
