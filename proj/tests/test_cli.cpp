#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("X0EIS_BIN"); }

CliResult run_cli(const std::string& args) {
  std::string cmd = "env -u X0EIS_CACHE_DIR '" + std::string(cli_path()) + "' " + args +
                    " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

} // namespace

TEST_CASE("command line interface" * doctest::skip(cli_path() == nullptr)) {
  SUBCASE("version") {
    CliResult r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
  }

  SUBCASE("cusp enumeration") {
    CliResult r = run_cli("cusps --D 6");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 4);
    CHECK(j["count_formula"] == 4);
    CHECK(j["index"] == 12);
    CHECK(j["cusps"].size() == 4);
  }

  SUBCASE("invalid shape is a usage error") {
    CHECK(run_cli("cusps --D 4").code == 2);
    CHECK(run_cli("cusps").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
  }

  SUBCASE("basis listing") {
    CliResult r = run_cli("basis --D 15 --C 3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count_all"] == 7);
    CHECK(j["count_quadratic"] == 7);
    CliResult q = run_cli("basis --D 3 --C 3 --quadratic-only");
    REQUIRE(q.code == 0);
    CHECK(json::parse(q.out)["indices"].size() == 3);
  }

  SUBCASE("series coefficients") {
    CliResult r = run_cli("qexp --D 5 --M 5 --T 8");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["level"] == 5);
    CHECK(j["truncation"] == 8);
    std::vector<std::string> a0{"1", "6", "0", "1"};
    std::vector<std::string> a1{"1", "1", "0", "1"};
    CHECK(j["coeffs"][0].get<std::vector<std::string>>() == a0);
    CHECK(j["coeffs"][1].get<std::vector<std::string>>() == a1);
    // byte determinism
    CliResult again = run_cli("qexp --D 5 --M 5 --T 8");
    CHECK(again.out == r.out);
  }

  SUBCASE("constant terms and orders") {
    CliResult closed = run_cli("constants --D 3 --C 3 --M 3 --L 3 --f 3");
    CliResult oracle = run_cli("constants --D 3 --C 3 --M 3 --L 3 --f 3 --oracle");
    REQUIRE(closed.code == 0);
    REQUIRE(oracle.code == 0);
    json jc = json::parse(closed.out);
    json jo = json::parse(oracle.out);
    CHECK(jc["constants"] == jo["constants"]);
    CHECK(jc["route"] == "closed");
    CHECK(jo["route"] == "oracle");

    CliResult r = run_cli("orders --D 11");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["orders"].size() == 1);
    CHECK(j["orders"][0]["order"] == "5");
    CHECK(j["orders"][0]["order_nml"] == "5");
    CHECK(j["orders"][0]["inverted"] == json::array({2}));
  }

  SUBCASE("dedekind sums and period functions") {
    json j = json::parse(run_cli("dedekind --h 1 --k 3").out);
    CHECK(j["value"] == "1/18");
    json jb = json::parse(run_cli("dedekind --h 1 --k 3 --mode brute").out);
    CHECK(jb["value"] == "1/18");
    json jp = json::parse(run_cli("phi --matrix 1,1,0,1").out);
    CHECK(jp["phi"] == "1/1");
    json jx = json::parse(run_cli("xi --D 6 --M 6 --matrix 1,1,0,1").out);
    CHECK(jx["xi"] == "-2/1");
    CHECK(jx["period"] == "-1/12");
  }

  SUBCASE("csv format") {
    CliResult r = run_cli("--format csv qexp --D 5 --M 5 --T 4");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,rat_num,rat_den,irr_num,irr_den,disc\n", 0) == 0);
    CHECK(r.out.find("\n0,1,6,0,1,1") != std::string::npos);
  }

  SUBCASE("request cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "x0eis_cli_cache_test";
    fs::remove_all(dir);
    std::string base = "qexp --D 6 --M 6 --T 12 --cache-dir '" + dir.string() + "'";
    CliResult first = run_cli(base);
    REQUIRE(first.code == 0);
    bool wrote = fs::exists(dir) && !fs::is_empty(dir);
    CHECK(wrote);
    CliResult second = run_cli(base);
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    fs::remove_all(dir);
  }

  SUBCASE("verification entry points") {
    CHECK(run_cli("verify --D 6 --suites cusps,orders --T 20").code == 0);
    CliResult r = run_cli("sweep --max-level 10 --suites cusps");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["failed"] == 0);
    // nine shapes have level at most ten, one cusp record each
    CHECK(j["records"] == 9);
  }

  SUBCASE("randomized property suites") {
    CHECK(run_cli("fuzz --suite reciprocity --n 40 --kmax 200").code == 0);
    CHECK(run_cli("fuzz --suite congruence --n 40 --kmax 200").code == 0);
    CHECK(run_cli("fuzz --suite xi-hom --n 10 --D 6").code == 0);
    CHECK(run_cli("fuzz --suite two-part --n 10 --D 15").code == 0);
    CHECK(run_cli("fuzz --suite xi-hom --n 5").code == 2); // needs a shape
  }
}
