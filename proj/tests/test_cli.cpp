#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "dslice/json_io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DSLICE_CLI_PATH) + " " + args;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("sfs verb") {
  const Run r = run("sfs \"S2(0; 5/2, -5/2, 5, -5)\"");
  REQUIRE(r.code == 0);
  const auto doc = dslice::Json::parse(r.out);
  CHECK(doc["embeds_ZHS1xS3"]["answer"] == "NO");
  CHECK(doc["embeds_ZHS1xS3"]["witness"]["gcd"] == 5);

  const auto empty = dslice::Json::parse(run("sfs \"S2(0;)\"").out);
  CHECK(empty["euler"] == "0");
  CHECK(empty["b1"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("sfs \"S2(0; 4/2)\" 2>/dev/null").code == 1);
  CHECK(run("sfs \"M(0; 3, -3)\" 2>/dev/null").code == 2);
  CHECK(run("lattice-search \"S2(-1; 2)\" 2>/dev/null").code == 2);
  const Run err = run("sfs \"S2(0; 4/2)\" 2>&1 >/dev/null");
  const auto doc = dslice::Json::parse(err.out);
  CHECK(doc["error"]["kind"] == "parse");
  CHECK(doc["error"]["position"] == 6);
}

TEST_CASE("other verbs") {
  CHECK(dslice::Json::parse(run("pretzel \"P(3, 5, -5, -3)\"").out)["classification"] == "slice+WDS-both");
  const auto lattice = dslice::Json::parse(run("lattice-search '{\"n\": 1, \"entries\": [[1]]}'").out);
  CHECK(lattice["count"] == 1);
  const auto parts = dslice::Json::parse(
      run("partitions '{\"n\": 3, \"lk\": [[0,2,2],[2,0,-2],[2,-2,0]], \"slice\": [false,true,true]}'").out);
  CHECK(parts["passing"].size() == 1);
  CHECK(run("--human sfs \"S2(1; 2)\"").out.find("b1: 0") != std::string::npos);
}

TEST_CASE("batch verb") {
  const std::string path = "dslice_cli_batch_input.jsonl";
  {
    std::ofstream f(path);
    f << "S2(0; 2, -2)\nnot an expression\n{\"verb\": \"montesinos\", \"input\": \"M(0; 3, -3)\"}\n";
  }
  const Run r = run("batch --jobs 2 " + path);
  CHECK(r.code == 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 3);
  std::remove(path.c_str());
}
