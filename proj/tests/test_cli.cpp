#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bvm/serialize.hpp"
#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bvm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("build-fullshift prints level sizes") {
  const auto r = run({"build-fullshift", "--levels", "3", "--word-length", "14", "-o",
                      "cli_test_fs3.bvd"});
  CHECK(r.code == 0);
  CHECK(r.out == "V_1 = 2\nV_2 = 11\nV_3 = 15\n");
  std::ifstream f("cli_test_fs3.bvd");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(bvm::deserialize(ss.str()).level_size(3) == 15);

  const auto one = run({"build-fullshift", "--levels", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.rfind("V_1 = 2\nBVD 1\n", 0) == 0);
}

TEST_CASE("build-fullshift rejects a short word length") {
  const auto r = run({"build-fullshift", "--word-length", "5", "--levels", "3"});
  CHECK(r.code != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("--word-length >= 12") != std::string::npos);
}

TEST_CASE("build-fullshift text format lists pictures") {
  const auto r = run({"build-fullshift", "-k", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0|1|0|1\n |1 0|") != std::string::npos);
}

TEST_CASE("markers command") {
  const auto r = run({"markers", "--word", "0101010101", "--rows", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "row 1 determined [0, 9] markers 0 1 2 3 4 5 6 7 8 9\n"
                 "row 2 determined [1, 7] markers 1 3 5 7\n");
  const auto ones = run({"markers", "--word", "1111111111", "--rows", "3"});
  CHECK(ones.out.find("row 3 determined [2, 5] markers 2 3 4 5") != std::string::npos);
  const auto text = run({"markers", "--word", "01010", "-k", "2", "--format", "text"});
  CHECK(text.out == "|0|1|0|1|0\n ?|1 0 ? ?\n");
  CHECK(run({"markers", "--word", "0101", "--rows", "0"}).code != 0);
  CHECK(run({"markers", "--word", "0121", "--rows", "1"}).code != 0);
  CHECK(run({"markers", "--word", "01", "--rows", "2"}).code != 0);
}

TEST_CASE("successor command") {
  const auto cat = run({"catalog", "odometer", "--depth", "3"});
  REQUIRE(cat.code == 0);
  const auto file = temp_file("od3.bvd", cat.out);
  const auto r = run({"successor", file, "0/0/0", "--steps", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "0/0/0\n1/0/0\n0/1/0\n1/1/0\n0/0/1\n1/0/1\n0/1/1\n1/1/1\n");
  const auto past = run({"successor", file, "0/1/1", "--steps", "5"});
  CHECK(past.out == "0/1/1\n1/1/1\nMAXIMAL-EXHAUSTED\n");
  CHECK(run({"successor", file, "0/x"}).code != 0);
  CHECK(run({"successor", "no_such_file.bvd", "0"}).code != 0);
}

TEST_CASE("diagnose command reports evidence") {
  const auto tree = temp_file("bt4.bvd", run({"catalog", "binary-tree", "--depth", "4"}).out);
  const auto r = run({"diagnose", tree, "--probe-depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("interior max N=1: witnesses to depth 3: 0 1") != std::string::npos);
  CHECK(r.out.find("interior min N=1: witnesses to depth 3: 0 1") != std::string::npos);
  CHECK(r.out.find("decisive") == std::string::npos);

  const auto e72 = temp_file("e72.bvd", run({"catalog", "example-7-2", "--depth", "6"}).out);
  const auto s = run({"diagnose", e72});
  CHECK(s.out.find("interior max N=1: witnesses to depth 3: 2\n") != std::string::npos);
  CHECK(s.out.find("interior min N=1: witnesses to depth 3: 0\n") != std::string::npos);
}

TEST_CASE("catalog command") {
  const auto dot = run({"catalog", "odometer", "--depth", "4", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const auto bvd = run({"catalog", "example-7-2", "--depth", "3", "--format", "bvd"});
  CHECK(bvm::serialize(bvm::deserialize(bvd.out)) == bvd.out);
  const auto bad = run({"catalog", "nope"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("binary-tree") != std::string::npos);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::string> args{"build-fullshift", "-k", "2", "--format", "dot"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
  CHECK(run({"--help"}).code == 0);
}
