#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fincat/counterexample.hpp"
#include "fincat/instances.hpp"
#include "fincat/version.hpp"
#include "fincat_cli/cli.hpp"
#include "support.hpp"

using namespace fincat;
using namespace fincat::cli;
using fincat::test::chain;

namespace {

FinSet c(std::size_t n) { return FinSet::canonical(n); }

// Every scalar leaf of j with its path, in field order.
void leaves(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) leaves(it.value(), path + "/" + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], path + "/" + std::to_string(i), out);
  } else {
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) {
      ::setenv("FINCAT_THREADS", value, 1);
    } else {
      ::unsetenv("FINCAT_THREADS");
    }
  }
  ~EnvGuard() { ::unsetenv("FINCAT_THREADS"); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("audit exit codes") {
  CHECK(cmd_audit({"finset", 3, std::nullopt, 1}).exit_code == kExitClean);
  const Output pos = cmd_audit({"finpos", 4, std::nullopt, 1});
  CHECK(pos.exit_code == kExitWitness);
  CHECK(pos.report["verdict"] == "violation found at bound 4");
  CHECK(cmd_audit({"coslice", 2, 1, 1}).exit_code == kExitClean);
  // Defaults come from the instance limits.
  CHECK(cmd_audit({"finset", std::nullopt, std::nullopt, 1}).report["bound"] == limits_for("finset").default_bound);
}

TEST_CASE("out-of-range requests are usage errors") {
  CHECK_THROWS_AS(limits_for("sets"), UsageError);
  CHECK_THROWS_AS(cmd_audit({"sets", 1, std::nullopt, 1}), UsageError);
  CHECK_THROWS_AS(cmd_audit({"finpos", 9, std::nullopt, 1}), UsageError);
  CHECK_THROWS_AS(cmd_audit({"coslice", 2, 7, 1}), UsageError);
  CHECK_THROWS_AS(cmd_audit({"finset", 2, 1, 1}), UsageError);
  CHECK_NOTHROW(cmd_audit({"finset", 2, 0, 1}));
  try {
    cmd_audit({"comma", 6, 1, 1});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("estimated search space") != std::string::npos);
  }
  CHECK_THROWS_AS(cmd_counterexample("nope", 1), UsageError);
  CHECK_THROWS_AS(cmd_counterexample("comma", 9), UsageError);
  CHECK_THROWS_AS(cmd_check(Json::object(), "nope"), UsageError);
  CHECK_THROWS_AS(run_nogo({1, 9, 3, 1}), UsageError);
}

TEST_CASE("estimate grows with the bound") {
  for (const char* inst : {"finset", "finpos", "coslice", "comma"}) {
    const auto lim = limits_for(inst);
    for (std::size_t b = 1; b <= lim.max_bound; ++b)
      CHECK(estimate_squares(inst, b + 1, lim.default_base_size) > estimate_squares(inst, b, lim.default_base_size));
  }
}

TEST_CASE("counterexample targets") {
  const Output pos = cmd_counterexample("pos", 0);
  CHECK(pos.exit_code == kExitClean);
  CHECK(pos.report.dump() == to_json(pos_counterexample()).dump());
  CHECK(cmd_counterexample("coeq-divergence", 0).report.dump() == to_json(cat_vs_pos_divergence_witness()).dump());
}

TEST_CASE("check queries") {
  const Json p = to_json(pos_counterexample().p);
  const Output cls = cmd_check(Json{{"f", p}}, "classify");
  CHECK(cls.report["regular_epi"] == true);
  CHECK(cls.report["verified"] == true);
  const Json sf = to_json(FinFn(c(3), c(2), {0, 1, 1}));
  CHECK(cmd_check(Json{{"f", sf}}, "classify").report["kind"] == "function");

  const Output pb = cmd_check(Json{{"f", sf}, {"g", to_json(FinFn(c(1), c(2), {1}))}}, "pullback");
  CHECK(pb.report["verified"] == true);
  CHECK_THROWS_AS(cmd_check(Json{{"f", sf}, {"g", p}}, "pullback"), UsageError);

  const Json ran{{"k", to_json(FinFn(c(2), c(2), {0, 0}))}, {"h", to_json(FinFn(c(2), c(2), {0, 1}))}};
  const Output r = cmd_check(ran, "ran");
  CHECK(r.report["refines"] == false);
  CHECK(r.report["closing_relation"].is_null());
  CHECK_THROWS_AS(cmd_check(Json{{"k", ran["k"]}}, "ran"), Error);

  const Json fib{{"shape", to_json(static_cast<const FinPreorder&>(chain(2)))}, {"base", to_json(c(1))},
                 {"value_bound", 2}};
  CHECK(cmd_check(fib, "fibers").report["result"]["fiber_objects"] == 13);
  Json big = fib;
  big["value_bound"] = 40;
  CHECK_THROWS_AS(cmd_check(big, "fibers"), UsageError);
}

TEST_CASE("nogo conclusion follows the two audits") {
  const NoGoReport r = run_nogo({1, 2, 1, 1});
  CHECK(r.coslice_audit.clean());
  CHECK(r.comma_audit.clean());
  CHECK(r.conclusion() == Conclusion::inconclusive);
  const Json j = r.to_json();
  CHECK(j["conclusion"] == "inconclusive");
  CHECK(j["engine_version"] == kVersion);
  CHECK(j["bounds"]["comma_bound"] == 1);
  CHECK(cmd_nogo({1, 2, 1, 1}).exit_code == kExitInconclusive);

  // The conclusion is a function of the two verdicts alone.
  NoGoReport fake = r;
  fake.comma_audit = audit_regularity(FinPosCat(4)).report;
  CHECK(fake.conclusion() == Conclusion::obstruction_certified_at_bound);
  fake.coslice_audit = fake.comma_audit;
  CHECK(fake.conclusion() == Conclusion::inconclusive);
}

TEST_CASE("text and JSON renderings agree field for field") {
  const Json reports[] = {cmd_audit({"finpos", 4, std::nullopt, 1}).report, cmd_counterexample("pos", 0).report,
                          cmd_check(Json{{"f", to_json(pos_counterexample().p)}}, "classify").report};
  for (const auto& report : reports) {
    CHECK(Json::parse(render(report, Format::json)) == report);
    const std::string text = render(report, Format::text);
    std::vector<std::pair<std::string, std::string>> fields;
    leaves(report, "", fields);
    // Every scalar value appears in the text in the same order.
    std::size_t pos = 0;
    for (const auto& [path, value] : fields) {
      if (value.empty()) continue;
      const auto at = text.find(value, pos);
      CHECK_MESSAGE(at != std::string::npos, path);
      if (at != std::string::npos) pos = at;
    }
  }
}

TEST_CASE("thread resolution: flag, then environment, then hardware") {
  {
    EnvGuard env("3");
    CHECK(resolve_threads(5) == 5);
    CHECK(resolve_threads(std::nullopt) == 3);
  }
  {
    EnvGuard env("zero");
    CHECK_THROWS_AS(resolve_threads(std::nullopt), UsageError);
    CHECK(resolve_threads(2) == 2);
  }
  {
    EnvGuard env("0");
    CHECK_THROWS_AS(resolve_threads(std::nullopt), UsageError);
  }
  {
    EnvGuard env(nullptr);
    CHECK(resolve_threads(std::nullopt) >= 1);
  }
  CHECK_THROWS_AS(resolve_threads(0), UsageError);
}

TEST_CASE("reports do not depend on the thread count") {
  const std::string one = render(cmd_audit({"coslice", 2, 1, 1}).report, Format::json);
  CHECK(render(cmd_audit({"coslice", 2, 1, 3}).report, Format::json) == one);
  const std::string n1 = render(cmd_nogo({1, 2, 1, 1}).report, Format::json);
  CHECK(render(cmd_nogo({1, 2, 1, 4}).report, Format::json) == n1);
}

} // TEST_SUITE
