#include "doctest.h"
#include "mrt/cli.hpp"
#include "mrt/field_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using mrt::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("mrt_cli_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("identities are all exact") {
  const Result r = call({"identities", "--mmax", "2"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "identities");
  CHECK(j["params"]["mmax"] == 2);
  int commutators = 0, corollaries = 0;
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "exact");
    CHECK(c["pass"] == true);
    const std::string id = c["id"];
    commutators += id.rfind("commutator", 0) == 0;
    corollaries += id.rfind("corollary", 0) == 0;
  }
  // n <= 3, k <= 3, l <= 4: 5 * (4 + 15 + 40) tuples; sorted tuples of length <= 2 for the corollary
  CHECK(commutators == 5 * (4 + 15 + 40));
  CHECK(corollaries == 3 + 6 + 10);
}

TEST_CASE("range check on random data passes") {
  const Result r = call({"range-check", "--random", "--m", "0", "--n", "3", "--seed", "7"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  double worst = 0;
  int chains = 0;
  for (const auto& c : j["checks"]) {
    if (std::string(c["id"]).rfind("john", 0) != 0) continue;
    ++chains;
    worst = std::max(worst, c["max_residual"].get<double>());
  }
  CHECK(chains == 3);
  CHECK(worst < 1e-8);
}

TEST_CASE("range check chain selection") {
  const json all = json::parse(call({"range-check", "--random", "--m", "1", "--n", "4", "--max-chains", "7"}).out);
  const json sample = json::parse(
      call({"range-check", "--random", "--m", "1", "--n", "4", "--chains", "sample", "--max-chains", "7"}).out);
  auto count = [](const json& j) {
    int c = 0;
    for (const auto& e : j["checks"]) c += std::string(e["id"]).rfind("john", 0) == 0;
    return c;
  };
  CHECK(count(all) == 7);
  CHECK(count(sample) == 7);
  CHECK(all["checks"] != sample["checks"]);
}

TEST_CASE("range check on perturbed data fails and reports the ratio") {
  const Result r = call({"range-check", "--random", "--m", "0", "--n", "3", "--seed", "2024", "--perturb", "1e-2"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["passed"] == false);
  bool saw = false;
  for (const auto& c : j["checks"]) {
    if (!c.contains("ratio")) continue;
    saw = true;
    CHECK(c["ratio"].get<double>() > 1e3);
    CHECK(c["pass"] == false);
  }
  CHECK(saw);
  // unperturbed data through the same finite-difference path stays at the floor
  const Result clean = call({"range-check", "--random", "--m", "0", "--n", "3", "--seed", "2024", "--perturb", "1e-14"});
  CHECK(clean.code == 0);
}

TEST_CASE("negative control command") {
  const Result r = call({"negative-control"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["params"]["seed"] == 2024);
  CHECK(j["data"]["ratio"].get<double>() >= 1e3);
  CHECK(call({"negative-control", "--min-ratio", "1e9"}).code == 1);
}

TEST_CASE("reduce and moments2d pass on random fields") {
  CHECK(call({"reduce", "--random", "--m", "2", "--n", "3", "--seed", "3"}).code == 0);
  CHECK(call({"reduce", "--random", "--m", "1", "--n", "2", "--seed", "3"}).code == 0);
  const std::string table = temp_path("moments.csv");
  const Result r = call({"moments2d", "--random", "--m", "2", "--n", "2", "--rmax", "2", "--table", table});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["data"]["moments"].size() == 9);
  std::istringstream rows(read_file(table));
  std::string line;
  int lines = 0;
  while (std::getline(rows, line)) ++lines;
  CHECK(lines == 10);
  std::remove(table.c_str());
}

TEST_CASE("transform writes values and passes its checks") {
  const Result r = call({"transform", "--random", "--m", "1", "--n", "3", "--points", "4"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["data"]["values"].size() == 8);
  CHECK(j["checks"].size() == 8);
}

TEST_CASE("field files and random fields give the same checks") {
  const std::string path = temp_path("field.json");
  write_file(path, mrt::field_to_json(mrt::random_field(1, 3, 11)));
  const json a = json::parse(call({"transform", "--field", path, "--seed", "11"}).out);
  const json b = json::parse(call({"transform", "--random", "--m", "1", "--n", "3", "--seed", "11"}).out);
  CHECK(a["checks"] == b["checks"]);
  CHECK(a["data"] == b["data"]);
  CHECK(a["params"]["field"] == path);
  std::remove(path.c_str());
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"reduce", "--random", "--m", "1", "--n", "3", "--seed", "9"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> csv{"moments2d", "--random", "--m", "1", "--n", "2", "--format", "csv"};
  CHECK(call(csv).out == call(csv).out);
}

TEST_CASE("csv flattening") {
  const Result r = call({"range-check", "--random", "--m", "0", "--n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream s(r.out);
  std::string line;
  std::getline(s, line);
  CHECK(line == "command,id,paper_ref,max_residual,tol,pass,status,ratio");
  int rows = 0;
  while (std::getline(s, line)) {
    CHECK(line.rfind("range-check,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("report file output") {
  const std::string path = temp_path("report.json");
  const Result r = call({"identities", "--nmax", "1", "--kmax", "1", "--lmax", "1", "--mmax", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(json::parse(read_file(path))["command"] == "identities");
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"transform"}).code == 2);
  CHECK(call({"transform", "--random", "--field", "x.json"}).code == 2);
  CHECK(call({"transform", "--random", "--format", "xml"}).code == 2);
  CHECK(call({"range-check", "--random", "--n", "2"}).code == 2);
  CHECK(call({"range-check", "--random", "--m", "3", "--perturb", "1e-2"}).code == 2);
  CHECK(call({"moments2d", "--random", "--n", "3"}).code == 2);
  CHECK(call({"range-check", "--random", "--chains", "some"}).code == 2);
  CHECK(call({"transform", "--field", temp_path("does_not_exist.json")}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("malformed field spec reports line and column") {
  const std::string path = temp_path("bad.json");
  write_file(path, "{\n  \"m\": 1,\n  \"n\": 3,\n  \"components\": [ oops ]\n}\n");
  const Result r = call({"transform", "--field", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(path + ":4:") != std::string::npos);
  write_file(path, "{\"m\": 1, \"n\": 3, \"components\": [{\"index\": [7], \"terms\": []}]}");
  const Result semantic = call({"transform", "--field", path});
  CHECK(semantic.code == 2);
  CHECK(!semantic.err.empty());
  std::remove(path.c_str());
}
