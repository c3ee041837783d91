#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef BASILICA_CLI_PATH
#error "BASILICA_CLI_PATH must point at the built command-line binary"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run_cli(const std::string& args) {
  const std::string cmd = std::string(BASILICA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  run_result r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("orders emits the pinned table row") {
  const run_result r = run_cli("orders --max-level 10");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["pass"] == true);
  const auto& row7 = doc["rows"][6];
  CHECK(row7["n"] == 7);
  CHECK(row7["e"] == 43);
  CHECK(row7["b"] == 88);
  CHECK(row7["m"] == 91);
  CHECK(row7["aut"] == 127);
  CHECK(doc["rows"][0]["e"] == 1);
}

TEST_CASE("orders cross-check against sweeps") {
  const run_result r = run_cli("orders --max-level 4 --check");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  for (const auto& row : doc["rows"]) CHECK(row["sweep_check"] == "pass");
  CHECK(doc["rows"][3]["sweep_m"] == 8192);
  CHECK(doc["rows"][3]["sweep_b"] == 4096);
  CHECK(doc["rows"][3]["sweep_e"] == 64);
}

TEST_CASE("sweep reports the depth-4 M count") {
  const run_result r = run_cli("sweep --depth 4 --selector M");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["count"] == 8192);
  CHECK(doc["method"] == "sweep");
  CHECK_FALSE(doc.contains("seconds"));
}

TEST_CASE("closure reports the depth-3 B count") {
  const run_result r = run_cli("closure --depth 3 --generators alpha,beta");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r.out)["count"] == 64);
}

TEST_CASE("condition single point and scan") {
  const run_result single = run_cli("condition --x0 5");
  REQUIRE(single.exit_code == 0);
  CHECK(parse(single.out)["qualifies"] == true);

  const run_result frac = run_cli("condition --x0 1/2");
  REQUIRE(frac.exit_code == 0);
  CHECK(parse(frac.out)["qualifies"] == false);

  const run_result scan = run_cli("condition --scan 1..23");
  REQUIRE(scan.exit_code == 0);
  const auto hits = parse(scan.out)["qualifying"];
  const std::vector<int> expected = {5, 6, 10, 11, 12, 13, 14, 19, 20, 21, 22, 23};
  REQUIRE(hits.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(hits[i] == expected[i]);
}

TEST_CASE("preimage run passes at depth 7") {
  const run_result r = run_cli("preimage --x0 5 --depth 7 --seed 3");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["max_zetaprod_residual"].get<double>() < 1e-7);
}

TEST_CASE("preimage dump carries nodes and the swap log") {
  const run_result r = run_cli("preimage --x0 5 --depth 4 --seed 3 --dump");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["nodes"].size() == 31);
  CHECK(doc["nodes"][0]["address"] == "");
  CHECK(doc.contains("swap_log"));
}

TEST_CASE("byte-identical output for identical configurations") {
  for (const char* cmd :
       {"closure --depth 3 --generators alpha,beta,epsilon --threads 1",
        "preimage --x0 5 --depth 6 --seed 9 --threads 1", "condition --scan -30..30",
        "sweep --depth 3 --selector E --threads 1"}) {
    const run_result a = run_cli(cmd);
    const run_result b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("condition --x0 0").exit_code == 3);               // domain/input
  CHECK(run_cli("condition --x0 5 --scan 1..2").exit_code == 3);   // conflicting args
  CHECK(run_cli("condition").exit_code == 3);
  CHECK(run_cli("sweep --depth 6 --selector M").exit_code == 4);   // resource
  CHECK(run_cli("closure --depth 4 --budget 10").exit_code == 4);  // budget
  CHECK(run_cli("sweep --depth 4 --selector frattini").exit_code == 5);  // precision
  CHECK(run_cli("preimage --x0 5 --depth 12").exit_code == 5);     // needs --extended
  CHECK(run_cli("nonsense").exit_code == 3);
  CHECK(run_cli("sweep --depth 4 --selector M --format csv").exit_code == 3);
  // An unreachable residual threshold is an honest check failure.
  CHECK(run_cli("preimage --x0 5 --depth 7 --max-residual 1e-30").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify-all shallow run passes") {
  const run_result r = run_cli("verify-all --max-depth 3");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["pass"] == true);
  for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("text and csv formats render") {
  CHECK(run_cli("orders --max-level 5 --format text").exit_code == 0);
  CHECK(run_cli("orders --max-level 5 --format csv").out.substr(0, 10) == "n,e,b,m,au");
  CHECK(run_cli("condition --scan 1..10 --format csv").exit_code == 0);
  CHECK(run_cli("sweep --depth 3 --selector M --format text").exit_code == 0);
}

TEST_CASE("generator inspection and hex interchange") {
  const run_result g = run_cli("generator --name beta --depth 3");
  REQUIRE(g.exit_code == 0);
  const auto doc = parse(g.out);
  CHECK(doc["in_b"] == true);
  const std::string hex = doc["hex"].get<std::string>();

  // Feeding the hex form back as a closure generator reproduces <beta>.
  const run_result c = run_cli("closure --depth 3 --generators hex:" + hex);
  REQUIRE(c.exit_code == 0);
  const run_result by_name = run_cli("closure --depth 3 --generators beta");
  CHECK(parse(c.out)["count"] == parse(by_name.out)["count"]);

  CHECK(run_cli("closure --depth 4 --generators hex:" + hex).exit_code == 3);  // depth clash
  CHECK(run_cli("generator --name nonsense --depth 3").exit_code == 3);
}

TEST_CASE("timings flag adds the seconds field") {
  const run_result r = run_cli("sweep --depth 3 --selector M --timings");
  REQUIRE(r.exit_code == 0);
  CHECK(parse(r.out).contains("seconds"));
}

TEST_CASE("thread count comes from the environment when unset") {
  const run_result r = run_cli("sweep --depth 4 --selector B");
  run_result env;
  {
    const std::string cmd =
        std::string("BASILICA_THREADS=3 ") + BASILICA_CLI_PATH + " sweep --depth 4 --selector B";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) env.out.append(buf, n);
    env.exit_code = WEXITSTATUS(pclose(pipe));
  }
  REQUIRE(env.exit_code == 0);
  CHECK(parse(env.out)["count"] == parse(r.out)["count"]);
}

TEST_CASE("frattini subcommand reports the depth-5 structure") {
  const run_result r = run_cli("frattini --depth 5");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse(r.out);
  CHECK(doc["order"] == 2097152);
  CHECK(doc["index"] == 16);
  CHECK(doc["normal"] == true);
  CHECK(doc["cosets_witnessed"] == 16);
  CHECK(doc["pass"] == true);
}
