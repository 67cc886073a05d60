#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "dyck/cli.hpp"

namespace {

struct cli_result {
  int code;
  std::string out;
  std::string err;
};

cli_result invoke(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = dyck::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

} // namespace

TEST_CASE("object listings") {
  CHECK(invoke({"words", "--k", "2"}).out == "00011\n00101\n");
  CHECK(invoke({"germs", "--k", "4", "--count", "3"}).out == "000\n001\n010\n");
  CHECK(invoke({"nests", "--k", "2", "--format", "csv"}).out ==
        "0,01221\n1,02211\n");
  CHECK(invoke({"signatures", "--k", "3"}).out == "12\n10\n02\n01\n00\n");
  auto jsonl = invoke({"signatures", "--k", "3", "--count", "1", "--format",
                       "jsonl"});
  CHECK(jsonl.out == "{\"k\":3,\"m\":0,\"signature\":\"12\"}\n");
}

TEST_CASE("update records in each format") {
  CHECK(invoke({"updates", "--count", "3", "--format", "csv"}).out ==
        "0,0,,,,\n1,1,1,0,B,0\n2,10,2,0,B,0\n");
  CHECK(invoke({"updates", "--count", "2", "--format", "jsonl"}).out ==
        "{\"o\":0,\"rgs\":\"0\",\"i\":null,\"g\":null,\"case\":null,\"h\":null}\n"
        "{\"o\":1,\"rgs\":\"1\",\"i\":1,\"g\":0,\"case\":\"B\",\"h\":0}\n");
  CHECK(invoke({"updates", "--count", "5", "--format", "bfile"}).out ==
        "1 0\n2 0\n3 -2\n4 0\n");
  CHECK(invoke({"updates", "--count", "3"}).out ==
        "0 0 - - - -\n1 1 1 0 B 0\n2 10 2 0 B 0\n");
  CHECK(lines_of(invoke({"updates", "--count", "42", "--format", "csv"}).out)
            .size() == 42);
}

TEST_CASE("sequence export") {
  CHECK(invoke({"oeis", "--id", "A000108", "--count", "8", "--format",
                "bfile"}).out ==
        "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 429\n");
  CHECK(invoke({"oeis", "--id", "A239903", "--count", "5", "--format",
                "bfile"}).out == "0 0\n1 1\n2 10\n3 11\n4 12\n");
  CHECK(invoke({"oeis", "--id", "A239903", "--count", "3", "--format",
                "plain"}).out == "0\n1\n10\n");
}

TEST_CASE("vertex retrieval") {
  CHECK(invoke({"retrieve", "--k", "4", "--rank", "1", "--t", "5"}).out ==
        "111010000\n");
  CHECK(invoke({"retrieve", "--k", "1", "--rank", "0", "--all"}).out ==
        "001\n100\n010\n");
  CHECK(invoke({"retrieve", "--k", "4", "--rank", "0", "--mode", "middle",
                "--level", "upper"}).out == "000011111\n");
}

TEST_CASE("graph queries") {
  CHECK(invoke({"graph", "--op", "arc", "--bits", "000001111", "--color", "3"})
            .out == "111010000 1 5 lower\n");
  CHECK(invoke({"graph", "--op", "lexical", "--bits", "000001111", "--color",
                "3"}).out == "000001111 000101111\n000010111 000011111\n");
  auto cls = invoke({"graph", "--op", "class", "--bits", "111010000"});
  auto lines = lines_of(cls.out);
  REQUIRE(lines.size() == 11);
  CHECK(lines[0] == "000011101");
  CHECK(lines[1] == "5");
  CHECK(lines[2] == "000011101");
  CHECK(lines[7] == "111010000");
  CHECK(invoke({"graph", "--op", "census", "--k", "2"}).out ==
        "0,00011\n1,00101\n");
  CHECK(lines_of(invoke({"graph", "--op", "dihedral", "--bits", "000011101"})
                     .out).size() == 18);
}

TEST_CASE("path points") {
  CHECK(invoke({"path-data", "--word", "00011"}).out ==
        "0,0\n1,1\n2,2\n3,3\n4,2\n5,1\n");
  CHECK(invoke({"path-data", "--k", "2", "--rank", "1"}).out ==
        "0,0\n1,1\n2,2\n3,1\n4,2\n5,1\n");
}

TEST_CASE("verification through the command line") {
  auto res = invoke({"verify", "--suite", "triangle"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"suite\":\"triangle\"") != std::string::npos);
  CHECK(res.out.find("\"pass\":true") != std::string::npos);
  CHECK(res.out.find("wall_seconds") == std::string::npos);
  auto timed = invoke({"verify", "--suite", "triangle", "--time"});
  CHECK(timed.out.find("wall_seconds") != std::string::npos);
}

TEST_CASE("benchmark report") {
  auto res = invoke({"bench", "--k", "4", "--strategy", "signature", "--check"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"steps\":13") != std::string::npos);
  CHECK(res.out.find("\"entry_writes\":13") != std::string::npos);
  CHECK(res.out.find("\"streams_match\":true") != std::string::npos);
  CHECK(res.out.find("\"nondeterministic\":") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"no-such-verb"}).code == 2);
  CHECK(invoke({"germs", "--k", "1"}).code == 2);
  CHECK(invoke({"oeis", "--id", "A999999", "--count", "3"}).code == 2);
  auto bad = invoke({"retrieve", "--k", "4", "--rank", "99", "--t", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(invoke({"graph", "--op", "arc", "--bits", "000001111"}).code == 2);
}
