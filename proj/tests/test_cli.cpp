#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bchcov::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_manifest(nlohmann::json j) {
  j.erase("manifest");
  return j;
}

}  // namespace

TEST_CASE("cli usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  const Result bad = run({"frobnicate"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown command") != std::string::npos);
  CHECK(run({"field", "--m", "4", "--modulus", "0xzz"}).code == 2);
  CHECK(run({"field", "--m", "4", "--modulus", "0x11"}).code == 2);  // reducible
  CHECK(run({"gcr", "--m", "4"}).code == 2);
  CHECK(run({"gcr", "--m", "2", "--r", "1"}).code == 2);
}

TEST_CASE("cli field and gcr") {
  const Result f = run({"field", "--m", "4"});
  REQUIRE(f.code == 0);
  CHECK(f.json()["size"] == 16);

  const Result g = run({"gcr", "--m", "4", "--r", "2"});
  REQUIRE(g.code == 0);
  CHECK(g.json()["rho"].get<int>() >= 5);
  CHECK(g.err.find("wall time") != std::string::npos);
  CHECK_FALSE(g.json()["manifest"].contains("wall_time_ms"));
  const Result timed = run({"gcr", "--m", "4", "--r", "2", "--timing"});
  CHECK(timed.json()["manifest"].contains("wall_time_ms"));
}

TEST_CASE("cli output is deterministic across runs and job counts") {
  const Result a = run({"gcr", "--m", "4", "--r", "2"});
  const Result b = run({"gcr", "--m", "4", "--r", "2"});
  const Result c = run({"gcr", "--m", "4", "--r", "2", "--jobs", "3"});
  CHECK(a.out == b.out);
  CHECK(strip_manifest(a.json()) == strip_manifest(c.json()));
  CHECK(a.json()["manifest"]["counters"] == c.json()["manifest"]["counters"]);

  const Result x = run({"cover", "--m", "7", "--random", "20", "--k", "2", "--seed", "5"});
  const Result y = run({"cover", "--m", "7", "--random", "20", "--k", "2", "--seed", "5"});
  CHECK(x.code == 0);
  CHECK(x.out == y.out);
}

TEST_CASE("cli verify and certify round trip") {
  CHECK(run({"verify", "--lemma", "y1y2y3", "--m", "4", "--mode", "exhaustive"}).code == 0);
  CHECK(run({"verify", "--lemma", "cube", "--m", "4", "--mode", "exhaustive"}).code == 0);

  const Result cert = run({"certify", "--m", "4", "--t", "6", "--targets-from", "noncube-triple"});
  REQUIRE(cert.code == 0);
  const auto j = cert.json();
  CHECK(j["verdict"] == "no-cover-at-t");
  CHECK(j["subsets_checked"] == 5005);

  const auto path = std::filesystem::temp_directory_path() / "bchcov_cert_test.json";
  {
    std::ofstream o(path);
    o << cert.out;
  }
  const Result re = run({"certify", "--recheck", path.string()});
  CHECK(re.code == 0);
  CHECK(re.json()["valid"] == true);

  auto tampered = j;
  tampered["subsets_checked"] = 17;
  {
    std::ofstream o(path);
    o << tampered.dump();
  }
  CHECK(run({"certify", "--recheck", path.string()}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("cli cover with explicit targets and count") {
  const Result c = run({"cover", "--m", "7", "--targets", "0x3,0x5,0x11,0x7f"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["verified"] == true);
  CHECK(c.json()["columns"].size() <= 5);
  const Result n = run({"count", "--m", "5", "--targets", "0x1,0x1"});
  CHECK(n.code == 0);
  CHECK(run({"cover", "--m", "7", "--targets", "0x3,0x5,0x11"}).code == 2);  // odd list
}
