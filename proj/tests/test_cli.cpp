#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "chaintrace/cli.hpp"
#include "chaintrace/io.hpp"

using namespace chaintrace;
using chaintrace::io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHAINTRACE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("grid info") {
  const auto r = run({"grid", "info", "--k", "4"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["vertices"] == 25);
  CHECK(j["simplexes"] == 32);
  CHECK(j["faces"]["diagonal"] == 16);
  CHECK(run({"grid", "info", "--k", "1"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"chain", "trace", "--k", "2", "--start", "bottom:9"}).code == 2);
  CHECK(run({"chain", "trace", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--start", "bottom:9"})
            .code == 2);
  CHECK(run({"chain", "trace", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--start", "middle:0"})
            .code == 2);
  CHECK(run({"chain", "trace", "--k", "3", "--coloring", data("vertical_split_k2.json"), "--start", "bottom:0"})
            .code == 2);
  CHECK(run({"chain", "trace", "--k", "3", "--coloring", data("bad_shape.json"), "--start", "bottom:0"}).code == 2);
  CHECK(run({"chain", "trace", "--k", "2", "--coloring", data("missing.json"), "--start", "bottom:0"}).code == 2);
  CHECK(run({"mean", "certify", "--map", "no-such-map", "--k-list", "8"}).code == 2);
  CHECK(run({"mean", "certify", "--map", "lift-average", "--k-list", "8,x"}).code == 2);
  CHECK(run({"lemma", "exhaustive", "--k", "6", "--a", "0,0", "--b", "6,6"}).code == 2);
  CHECK(run({"lemma", "exhaustive", "--k", "3", "--a", "0,0", "--b", "3,0"}).code == 2);
  CHECK(run({"ls", "approx", "--inputs", data("points_a.json"), "--epsilon", "0"}).code == 2);
}

TEST_CASE("chain trace on the vertical split") {
  const auto r = run({"chain", "trace", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--start",
                      "bottom:0"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["simplexes"].size() == 4);
  CHECK(j["gates"].size() == 5);
  CHECK(j["gates"][4].dump() == R"({"a":[0,2],"b":[1,2]})");
  const auto from_top = run({"chain", "trace", "--k", "2", "--coloring", data("vertical_split_k2.json"),
                             "--start", "top:0"});
  CHECK(from_top.code == 0);
  CHECK(Json::parse(from_top.out)["gates"][4].dump() == R"({"a":[0,0],"b":[1,0]})");
}

TEST_CASE("lemma witness") {
  const auto r = run({"lemma", "witness", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--a", "0,0",
                      "--b", "2,2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["simplexes"].size() == 4);
  const auto same = run({"lemma", "witness", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--a",
                         "0,0", "--b", "0,2"});
  CHECK(same.code == 2);
}

TEST_CASE("lemma exhaustive, k = 3") {
  const auto r = run({"lemma", "exhaustive", "--k", "3", "--a", "0,0", "--b", "3,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "32768/32768 witnesses found\n");
  const auto serial = run({"lemma", "exhaustive", "--k", "2", "--a", "2,0", "--b", "0,2", "--serial"});
  CHECK(serial.code == 0);
  CHECK(serial.out == "256/256 witnesses found\n");
  const auto jobs = run({"lemma", "exhaustive", "--k", "2", "--a", "0,0", "--b", "2,2", "--jobs", "2"});
  CHECK(jobs.out == "256/256 witnesses found\n");
}

TEST_CASE("mean certify") {
  const auto r = run({"mean", "certify", "--map", "first-projection", "--k-list", "8"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["variant"] == "SymmetryViolation");
  CHECK(j["witness"]["deviation"] == 0.5);
  const auto c = run({"mean", "certify", "--map", "constant:0", "--k-list", "8", "--tol", "1e-9"});
  CHECK(Json::parse(c.out)["variant"] == "RetractionViolation");
  const auto gap = run({"mean", "certify", "--map", "shorter-arc-midpoint", "--k-list", "8,16"});
  const Json g = Json::parse(gap.out);
  CHECK(g["variant"] == "ContinuityGap");
  CHECK(g["per_k"].size() == 2);
  CHECK(g["per_k"][1]["k"] == 16);
  CHECK(g["per_k"][1]["cycles"].get<int>() == static_cast<int>(g["per_k"][1]["winding"].size()));
}

TEST_CASE("torus cycles and borsuk certify") {
  const auto t = run({"torus", "cycles", "--k", "8", "--map", "lift-average"});
  REQUIRE(t.code == 0);
  const Json j = Json::parse(t.out);
  CHECK(j["k"] == 8);
  CHECK_FALSE(j["cycles"].empty());
  CHECK(j["cycles"][0]["surface"] == "torus");

  const auto b = run({"borsuk", "certify", "--map", "radial", "--k", "33"});
  REQUIRE(b.code == 0);
  const Json bj = Json::parse(b.out);
  CHECK(bj["variant"] == "ContinuityGap");
  CHECK(bj["witness"]["gap"] == 2.0);
  CHECK(Json::parse(run({"borsuk", "certify", "--map", "radial:0.5,0.5", "--k", "2"}).out)["variant"] ==
        "EvaluationFailure");
  CHECK(run({"borsuk", "certify", "--map", "lift-average", "--k", "5"}).code == 2);
}

TEST_CASE("ls approx") {
  const auto r = run({"ls", "approx", "--inputs", data("points_a.json"), data("points_b.json"), data("points_a.json"),
                      "--epsilon", "0.1", "--k-ref", "20"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["reference_resolution"] == 20);
  // tail is sets 2..3 (b, a); each neighbourhood holds 13 grid points
  CHECK(j["count"] == 26);
  const auto dflt = run({"ls", "approx", "--inputs", data("points_a.json"), "--epsilon", "0.25"});
  CHECK(Json::parse(dflt.out)["reference_resolution"] == 32);
}

TEST_CASE("render writes a deterministic SVG") {
  const auto dir = std::filesystem::temp_directory_path() / "chaintrace_cli_test";
  std::filesystem::create_directories(dir);
  const auto chain_path = (dir / "chain.json").string();
  const auto trace = run({"chain", "trace", "--k", "2", "--coloring", data("vertical_split_k2.json"), "--start",
                          "bottom:0"});
  std::ofstream(chain_path) << trace.out;

  const auto svg1 = (dir / "a.svg").string();
  const auto svg2 = (dir / "b.svg").string();
  CHECK(run({"render", "--input", data("vertical_split_k2.json"), "--input", chain_path, "--out", svg1}).code == 0);
  CHECK(run({"render", "--input", data("vertical_split_k2.json"), "--input", chain_path, "--out", svg2}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(svg1) == slurp(svg2));
  CHECK(slurp(svg1).find("class=\"simplex\"") != std::string::npos);

  const auto cycles_path = (dir / "cycles.json").string();
  std::ofstream(cycles_path) << run({"torus", "cycles", "--k", "8", "--map", "lift-average"}).out;
  CHECK(run({"render", "--input", cycles_path, "--out", (dir / "c.svg").string()}).code == 0);
  CHECK(slurp((dir / "c.svg").string()).find("class=\"seam\"") != std::string::npos);

  CHECK(run({"render", "--input", data("points_a.json"), "--out", (dir / "d.svg").string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("same argv gives the same output") {
  const std::vector<std::string> args{"mean", "certify", "--map", "lift-average", "--k-list", "8,16"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}
