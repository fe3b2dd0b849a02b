#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rho/pochhammer.hpp"
#include "rho/rational.hpp"
#include "rho/roman_harmonic.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the CLI under test (path from RHO_BIN) with stderr folded into stdout.
RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  const char* bin = std::getenv("RHO_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "RHO_BIN must point at the rho executable");
  const std::string cmd = env_prefix + "'" + bin + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("eval prints exact values") {
  CHECK(run("eval c -n 3 -k 2").out == "85/36\n");
  CHECK(run("eval stirling1 -n -2 -k 1").out == "-3/4\n");
  CHECK(run("eval stirling2 -n 4 -k 2").out == "7\n");
  CHECK(run("eval bernoulli -m 3 -j 2").out == "2\n");
  CHECK(run("eval harmonic -n 3 -k 1").out == "11/6\n");
}

TEST_CASE("eval rejects domain errors with exit 2") {
  const RunResult r = run("eval c -n 2 -k -1");
  CHECK(r.status == 2);
  const RunResult missing = run("eval c -n 2");
  CHECK(missing.status == 2);
  CHECK(run("eval nonsense -n 1 -k 1").status == 2);
}

TEST_CASE("table csv matches the expected grid bytes") {
  const RunResult r = run("table --n-min 0 --n-max 1 --k-max 1");
  CHECK(r.status == 0);
  CHECK(r.out == "n,k,value\n0,0,1\n0,1,0\n1,0,1\n1,1,1\n");
  const RunResult neg = run("table --n-min -1 --n-max -1 --k-max 2");
  CHECK(neg.status == 0);
  CHECK(neg.out == "n,k,value\n-1,0,0\n-1,1,-1\n-1,2,0\n");
}

TEST_CASE("table output is deterministic and round-trips") {
  const std::string args = "table --n-min -6 --n-max 8 --k-max 5";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto lines = lines_of(a.out);
  REQUIRE(lines.size() == 1 + 15 * 6);
  CHECK(lines[0] == "n,k,value");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto c1 = lines[i].find(',');
    const auto c2 = lines[i].find(',', c1 + 1);
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 != std::string::npos);
    const long n = std::stol(lines[i].substr(0, c1));
    const long k = std::stol(lines[i].substr(c1 + 1, c2 - c1 - 1));
    const rho::Rational parsed = rho::Rational::parse(lines[i].substr(c2 + 1));
    CHECK(parsed == rho::c(n, k));
  }
}

TEST_CASE("table json is line-oriented and parses as an array") {
  const RunResult r = run("table --n-min -2 --n-max 2 --k-max 3 --format json");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2 + 5 * 4);  // brackets + one record per line
  CHECK(lines.front() == "[");
  CHECK(lines.back() == "]");
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5 * 4);
  for (const auto& rec : doc) {
    const long n = rec.at("n").get<long>();
    const long k = rec.at("k").get<long>();
    CHECK(rho::Rational::parse(rec.at("value").get<std::string>()) == rho::c(n, k));
  }
}

TEST_CASE("table empty range exits 2") {
  const RunResult r = run("table --n-min 3 --n-max 1 --k-max 2");
  CHECK(r.status == 2);
}

TEST_CASE("verify suites") {
  const RunResult ok = run("verify --suite sumrules --n-max 8 --k-max 6");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS") != std::string::npos);
  const RunResult numeric = run("verify --suite numeric --tol 1e-8");
  CHECK(numeric.status == 0);
  CHECK(run("verify --suite bogus").status == 2);
}

TEST_CASE("verify output is deterministic") {
  const RunResult a = run("verify --suite nested");
  const RunResult b = run("verify --suite nested");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify json output is machine readable") {
  const RunResult r = run("verify --suite nested --format json");
  CHECK(r.status == 0);
  for (const auto& line : lines_of(r.out)) {
    const nlohmann::json rec = nlohmann::json::parse(line);
    CHECK(rec.at("pass").get<bool>());
    CHECK(rec.at("suite").get<std::string>() == "nested");
  }
}

TEST_CASE("deriv subcommand") {
  CHECK(run("deriv pochhammer -n 3 -k 1 --at 1").out == "11\n");
  CHECK(run("deriv reciprocal -n 2 -k 1 --at 1").out == "-3/4\n");
  CHECK(run("deriv reciprocal -n 4 -k 0 --at -3/2").out ==
        rho::recip_deriv(4, 0, rho::Rational(-3, 2)).str() + "\n");
  const RunResult pole = run("deriv reciprocal -n 3 -k 0 --at -1");
  CHECK(pole.status == 2);
  CHECK(pole.out.find("pole") != std::string::npos);
  CHECK(run("deriv reciprocal -n 2 -k 1 --at 1/0").status == 2);
  CHECK(run("deriv sideways -n 2 -k 1 --at 1").status == 2);
}

TEST_CASE("moment subcommand") {
  const RunResult r = run("moment -D 2 -p 1");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "value,est_error,evaluations,exact,abs_diff");
  CHECK(std::abs(std::stod(lines[1]) - 0.5) <= 1e-8);
  CHECK(lines[1].find(",1/2,") != std::string::npos);
  CHECK(run("moment -D 1 -p 0").status == 2);
}

TEST_CASE("series subcommand") {
  const RunResult order = run("series order -n 2 --terms 3");
  CHECK(order.status == 0);
  CHECK(order.out == "index,value\n0,1\n1,3/2\n2,7/4\n3,15/8\n");
  const RunResult fk = run("series fk -k 1 --terms 2 --format json");
  CHECK(fk.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(fk.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[2].at("value").get<std::string>() == "3/8");
  CHECK(run("series sideways --terms 2").status == 2);
}

TEST_CASE("cache cap environment variable") {
  const RunResult capped = run("table --n-min 0 --n-max 60 --k-max 20", "RHO_CACHE_CAP=25 ");
  CHECK(capped.status == 2);
  CHECK(capped.out.find("cap") != std::string::npos);
  const RunResult roomy = run("eval c -n 3 -k 2", "RHO_CACHE_CAP=100000 ");
  CHECK(roomy.status == 0);
  CHECK(roomy.out == "85/36\n");
  CHECK(run("eval c -n 3 -k 2", "RHO_CACHE_CAP=abc ").status == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("table --n-min 0").status == 2);
  CHECK(run("--help").status == 0);
}
