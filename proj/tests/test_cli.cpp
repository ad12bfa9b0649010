#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ybe/cli.hpp"
#include "ybe/enumeration.hpp"
#include "ybe/json_io.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

const std::string kData = YBE_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t k = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++k;
  return k;
}

// Report JSON with the timing fields removed.
Json without_timing(Json j) {
  if (j.is_object()) {
    j.erase("millis");
    for (auto& [k, v] : j.items()) v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timing(v);
  }
  return j;
}

std::vector<std::string> statuses(const Json& report) {
  std::vector<std::string> out;
  for (const auto& c : report["checks"]) out.push_back(c["status"]);
  return out;
}

fs::path catalogue_dir(std::size_t n) {
  const fs::path dir = fs::temp_directory_path() / ("ybe_cli_catalogue_" + std::to_string(n));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const Run r = run({"enumerate", "--n", std::to_string(n), "--json"});
  REQUIRE(r.code == 0);
  for (const auto& s : Json::parse(r.out)) {
    std::ofstream(dir / (s["name"].get<std::string>() + ".json")) << s.dump();
  }
  return dir;
}

}  // namespace

TEST_CASE("verify prints the four-check table") {
  const Run r = run({"verify", kData + "/lyubashenko3.json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(count(r.out, "PASS") == 4);
  for (const char* name : {"nondegenerate", "involutive", "braid", "C1"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("enumerate emits a JSON array") {
  const Run r = run({"enumerate", "--n", "2", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(run({"enumerate", "--n", "5"}).code == cli::kExitInput);
  CHECK(run({"enumerate"}).code == cli::kExitInput);
}

TEST_CASE("exit codes") {
  const Run bad = run({"conjecture", kData + "/bad.json"});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("braid") != std::string::npos);
  CHECK(run({"verify", kData + "/bad.json"}).code == cli::kExitFail);
  CHECK(run({"frobnicate", kData + "/bad.json"}).code == cli::kExitInput);
  CHECK(run({"verify", kData + "/does-not-exist.json"}).code == cli::kExitInput);
  CHECK(run({"verify"}).code == cli::kExitInput);
  CHECK(run({}).code == cli::kExitInput);
  const fs::path junk = fs::temp_directory_path() / "ybe_cli_junk.json";
  std::ofstream(junk) << "{\"n\": 2, \"sigma\": [[0, 1]]";
  CHECK(run({"verify", junk.string()}).code == cli::kExitInput);
  std::ofstream(junk) << "{\"n\": 2, \"sigma\": [[0, 1], [0, 7]]}";
  CHECK(run({"verify", junk.string()}).code == cli::kExitInput);
  CHECK(run({"quasi", kData + "/permutation3.json"}).code == cli::kExitOk);
  CHECK(run({"qdeform", "--window", "1"}).code == cli::kExitInput);
  CHECK(run({"qdeform", "--window", "4"}).code == cli::kExitOk);
  CHECK(run({"qdeform", "--n", "2"}).code == cli::kExitOk);
}

TEST_CASE("quasi refuses non-Lyubashenko input") {
  const auto cat = enumerate_involutive(3);
  for (const auto& s : cat.solutions) {
    if (is_lyubashenko_type(s)) continue;
    const fs::path f = fs::temp_directory_path() / "ybe_cli_nonlyub.json";
    std::ofstream(f) << solution_to_json(s).dump();
    const Run r = run({"quasi", f.string()});
    CHECK(r.code == cli::kExitInput);
    CHECK(r.err.find("Lyubashenko") != std::string::npos);
    break;
  }
}

TEST_CASE("conjecture JSON") {
  const Run r = run({"conjecture", kData + "/lyubashenko3.json", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["invertible"] == true);
  CHECK(j["commutes_r"] == true);
  CHECK(j["commutes_rcheck"] == true);
  REQUIRE(j.contains("phi"));
  CHECK(j["phi"]["dim"] == 27);
  CHECK(j["phi"]["entries"].size() == 27);
}

TEST_CASE("report JSON shape") {
  const Run r = run({"baxter", kData + "/lyubashenko3.json", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["solution"] == "lyubashenko3");
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("millis"));
  }
  const Json v = Json::parse(run({"verify", kData + "/bad.json", "--json"}).out);
  bool failed_has_witness = false;
  for (const auto& c : v["checks"])
    if (c["status"] == "fail") failed_has_witness = c.contains("witness");
  CHECK(failed_has_witness);
}

TEST_CASE("enumerated solutions round-trip through every command") {
  const fs::path dir = catalogue_dir(3);
  for (const char* cmd : {"verify", "twist", "baxter", "conjecture", "qdeform"}) {
    const Run r = run({cmd, dir.string(), "--json"});
    CHECK_MESSAGE(r.code == 0, cmd);
    const Json j = Json::parse(r.out);
    CHECK(j.size() == enumerate_involutive(3).solutions.size());
  }
  for (const auto& e : fs::directory_iterator(dir)) {
    const SetSolution s = load_solution(e.path());
    CHECK(run({"quasi", e.path().string()}).code ==
          (is_lyubashenko_type(s) ? cli::kExitOk : cli::kExitInput));
  }
}

TEST_CASE("reports are deterministic given --seed") {
  const std::vector<std::string> args = {"baxter", kData + "/lyubashenko3.json", "--json", "--seed", "11"};
  CHECK(without_timing(Json::parse(run(args).out)) == without_timing(Json::parse(run(args).out)));
  const fs::path dir = catalogue_dir(2);
  const std::vector<std::string> dargs = {"verify", dir.string(), "--json", "--seed", "3"};
  CHECK(without_timing(Json::parse(run(dargs).out)) == without_timing(Json::parse(run(dargs).out)));
}

TEST_CASE("--fast verdicts match exact verdicts across the catalogue") {
  const fs::path dir = catalogue_dir(3);
  for (const char* cmd : {"verify", "twist", "baxter", "qdeform"}) {
    const Json exact = Json::parse(run({cmd, dir.string(), "--json"}).out);
    const Json fast = Json::parse(run({cmd, dir.string(), "--json", "--fast", "--seed", "5"}).out);
    REQUIRE(exact.size() == fast.size());
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(statuses(exact[i]) == statuses(fast[i]));
  }
  const Json e = Json::parse(run({"quasi", kData + "/lyubashenko3.json", "--json"}).out);
  const Json f = Json::parse(run({"quasi", kData + "/lyubashenko3.json", "--json", "--fast"}).out);
  for (const auto& c : f["checks"]) CHECK(c["status"] != "fail");
  CHECK(e["checks"].size() > 0);
  const Json bad_e = Json::parse(run({"verify", kData + "/bad.json", "--json"}).out);
  const Json bad_f = Json::parse(run({"verify", kData + "/bad.json", "--json", "--fast"}).out);
  CHECK(statuses(bad_e) == statuses(bad_f));
}

TEST_CASE("standalone binary") {
  const char* bin = std::getenv("YBE_BIN");
  if (bin == nullptr) return;
  auto status_of = [&](const std::string& args) {
    const std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status_of("verify " + kData + "/lyubashenko3.json") == 0);
  CHECK(status_of("verify " + kData + "/bad.json") == 1);
  CHECK(status_of("conjecture " + kData + "/bad.json") == 2);
  CHECK(status_of("enumerate --n 2 --json") == 0);
  CHECK(status_of("--help") == 0);
}
