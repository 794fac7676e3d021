#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iwip/cli.hpp"
#include "iwip/words.hpp"

namespace fs = std::filesystem;
using iwip::cli::run;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(IWIP_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("analyze the four-generator fixture") {
  auto r = invoke({"analyze", data("four_generator.aut"), "--pmax", "12", "--format", "json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "NOT_IWIP");
  CHECK(j["witnesses"][0]["summary"] == "phi^5-invariant proper free factor <a>");
  CHECK(j["matrix"] == nlohmann::json::parse("[[0,0,1,0],[1,0,0,0],[0,1,0,1],[0,0,1,1]]"));
  CHECK(j["bounds_used"]["max_period"] == 12);

  auto t = invoke({"analyze", data("four_generator.aut")});
  CHECK(t.status == 0);
  CHECK(t.out.rfind("verdict: NOT_IWIP\n", 0) == 0);
}

TEST_CASE("matrix powers on the command line") {
  auto r = invoke({"matrix", data("four_generator.aut"), "--power", "6"});
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  int count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("  ", 0) != 0) continue;  // matrix rows are indented
    std::istringstream row(line);
    long long x = 0;
    while (row >> x) {
      CHECK(x > 0);
      ++count;
    }
  }
  CHECK(count == 16);
  auto j = invoke({"matrix", data("four_generator.aut"), "--power", "6", "--format", "json"});
  auto m = nlohmann::json::parse(j.out);
  CHECK(m["power"] == 6);
  CHECK(m["matrix"][0][0] == 2);
}

TEST_CASE("train-track check output") {
  auto bad = invoke({"tt-check", data("bad.aut")});
  CHECK(bad.status == 0);
  CHECK(bad.out.find("not a train-track map") != std::string::npos);
  CHECK(bad.out.find("{a, a}") != std::string::npos);
  CHECK(bad.out.find("{a^-1, b}") != std::string::npos);
  auto good = invoke({"tt-check", data("fib.json")});
  CHECK(good.status == 0);
  CHECK(good.out.rfind("train-track map", 0) == 0);
}

TEST_CASE("input errors exit with status one") {
  auto r = invoke({"analyze", data("invalid/badletter.aut")});
  CHECK(r.status == 1);
  CHECK(r.err.find("line 3, column 8") != std::string::npos);
  CHECK(invoke({"analyze", data("missing.aut")}).status == 1);
  CHECK(invoke({"analyze", data("fib.aut"), "--bogus"}).status == 1);
  CHECK(invoke({}).status == 1);
  CHECK(invoke({"analyze", "--map", "a->a b; b->a", "--pmax", "0"}).status == 1);
  CHECK(invoke({"analyze", data("invalid/unreduced.aut")}).status == 1);
  auto fixed = invoke({"analyze", data("invalid/unreduced.aut"), "--auto-reduce"});
  CHECK(fixed.status == 0);
  CHECK(fixed.err.find("warning") != std::string::npos);
  CHECK(invoke({"segments", "--map", "a->b; b->a", "--length", "2"}).status == 1);
  CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("other subcommands") {
  auto wh = invoke({"whitehead", "--map", "a->a b; b->b"});
  CHECK(wh.status == 0);
  CHECK(wh.out.find("disconnected") != std::string::npos);
  auto bu = invoke({"blowup", "--map", "a->a b; b->b"});
  CHECK(bu.status == 0);
  CHECK(bu.out.find("reduction: verified") != std::string::npos);
  auto core = invoke({"core", "--rank", "2", "--gen", "a a", "--gen", "b", "--gen", "a b a^-1"});
  CHECK(core.status == 0);
  CHECK(core.out.find("finite index: yes") != std::string::npos);
  auto carriage = invoke({"carriage", "--map", "a->a b; b->a", "--gen", "a"});
  CHECK(carriage.status == 0);
  CHECK(carriage.out.rfind("refuted at L = 1", 0) == 0);
  auto carried = invoke({"carriage", "--map", "a->a b; b->a", "--gen", "a", "--gen", "b",
                         "--max-length", "4"});
  CHECK(carried.out.rfind("carried up to L = 4", 0) == 0);
  auto seg = invoke({"segments", "--map", "a->a b; b->a", "--length", "1", "--format", "json"});
  CHECK(seg.status == 0);
  CHECK(nlohmann::json::parse(seg.out)["segments"].size() == 4);
}

TEST_CASE("batch analysis is ordered by file name") {
  auto r = invoke({"analyze", IWIP_TEST_DATA, "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  std::vector<std::string> names;
  for (const auto& e : j) names.push_back(e["file"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() >= 6);
}

TEST_CASE("fixture generation is deterministic and round trips") {
  fs::path dir = fs::temp_directory_path() / "iwip_cli_generate";
  fs::remove_all(dir);
  auto a = invoke({"generate", "--seed", "0", "--count", "3", "--rank", "2", "--out", dir.string()});
  REQUIRE(a.status == 0);
  std::vector<std::string> first;
  for (const auto& name : {"fixture_0_0.aut", "fixture_0_1.aut", "fixture_0_2.aut"}) {
    REQUIRE(fs::exists(dir / name));
    first.push_back(slurp(dir / name));
    auto phi = iwip::parse_automorphism(first.back());
    CHECK(iwip::generates_whole_group(phi.images(), phi.rank()));
    CHECK(invoke({"analyze", (dir / name).string()}).status == 0);
  }
  fs::remove_all(dir);
  invoke({"generate", "--seed", "0", "--count", "3", "--rank", "2", "--out", dir.string()});
  CHECK(slurp(dir / "fixture_0_0.aut") == first[0]);
  CHECK(slurp(dir / "fixture_0_2.aut") == first[2]);
  auto printed = invoke({"generate", "--seed", "0", "--count", "1", "--rank", "2"});
  CHECK(printed.out == first[0]);
  fs::remove_all(dir);
}

TEST_CASE("text and json verdicts agree") {
  for (const char* map : {"a->a b; b->a", "a->b; b->c; c->a b", "a->a; b->b", "a->a b; b->a^-1"}) {
    auto t = invoke({"analyze", "--map", map});
    auto j = invoke({"analyze", "--map", map, "--format", "json"});
    auto verdict = nlohmann::json::parse(j.out)["verdict"].get<std::string>();
    CHECK(t.out.rfind("verdict: " + verdict + "\n", 0) == 0);
  }
}

TEST_CASE("default format from the environment") {
  setenv("IWIP_FORMAT", "json", 1);
  auto r = invoke({"analyze", "--map", "a->a b; b->a"});
  unsetenv("IWIP_FORMAT");
  CHECK(nlohmann::json::parse(r.out)["verdict"].is_string());
}
