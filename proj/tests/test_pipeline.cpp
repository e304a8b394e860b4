#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pp3/cli.hpp"
#include "pp3/pipeline.hpp"

using namespace pp3;
using nlohmann::json;

namespace {

// writes a throwaway fixture and returns its path
std::string write_temp(const std::string& name, const json& j) {
  std::string path = "build/" + name;
  std::ofstream out(path);
  out << j.dump(2);
  return path;
}

json minimal_fixture(long d) {
  return json{{"field_d", d},
              {"forms", json::array({json{{"id", "t.1"},
                                          {"level", "LD"},
                                          {"hecke", {{"kind", "Q"}}},
                                          {"ap", json::array({json{{"p", 2}, {"split", "s0"},
                                                                   {"value", {1}}}})}}})}};
}

struct CoutCapture {
  std::ostringstream buffer;
  std::streambuf* old;
  CoutCapture() : old(std::cout.rdbuf(buffer.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
  std::string text() const { return buffer.str(); }
};

int dispatch(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"pp3"};
  argv.insert(argv.end(), args.begin(), args.end());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("shipped fixtures load and validate") {
  auto d19 = load_newforms("data/newforms_d19.json");
  REQUIRE(d19.size() == 4);
  int at_d = 0, at_ld = 0;
  for (const auto& r : d19) (r.level == LevelTag::D ? at_d : at_ld)++;
  CHECK(at_d == 1);
  CHECK(at_ld == 3);
  CHECK(d19[0].curves_pot_good_at_lambda.has_value());

  CHECK(load_newforms("data/newforms_d7.json").size() == 1);
  CHECK(fixture_empty_levels("data/newforms_d7.json") == std::vector<LevelTag>{LevelTag::D});
  CHECK(load_newforms("data/newforms_d43.json").size() == 8);
  CHECK(load_newforms("data/newforms_d67.json").size() == 8);
}

TEST_CASE("fixture validation rejects bad records") {
  // eigenvalue key of norm >= 50
  json big = minimal_fixture(7);
  big["forms"][0]["ap"][0] = {{"p", 53}, {"split", "s0"}, {"value", {1}}};
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_norm.json", big)),
                       doctest::Contains("norm must be < 50"), std::invalid_argument);

  // split tag contradicting the field
  json tag = minimal_fixture(7);
  tag["forms"][0]["ap"][0]["split"] = "inert";  // 2 splits in Q(sqrt(-7))
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_tag.json", tag)),
                       doctest::Contains("contradicts the splitting"), std::invalid_argument);

  // key at the prime above 3
  json l3 = minimal_fixture(7);
  l3["forms"][0]["ap"][0] = {{"p", 3}, {"split", "inert"}, {"value", {1}}};
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_l3.json", l3)),
                       doctest::Contains("prime above 3"), std::invalid_argument);

  // duplicate form ids
  json dup = minimal_fixture(7);
  dup["forms"].push_back(dup["forms"][0]);
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_dup.json", dup)),
                       doctest::Contains("duplicate form id"), std::invalid_argument);

  // duplicate eigenvalue key inside a form
  json dupk = minimal_fixture(7);
  dupk["forms"][0]["ap"].push_back(dupk["forms"][0]["ap"][0]);
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_dupk.json", dupk)),
                       doctest::Contains("duplicate eigenvalue key"), std::invalid_argument);

  // coordinate count must match the Hecke degree
  json dim = minimal_fixture(7);
  dim["forms"][0]["ap"][0]["value"] = {1, 2};
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_dim.json", dim)),
                       doctest::Contains("coordinate count"), std::invalid_argument);

  // reducible cubic minimal polynomial
  json red = minimal_fixture(7);
  red["forms"][0]["hecke"] = {{"kind", "poly"}, {"min_poly", {-8, 0, 0, 1}}};
  red["forms"][0]["ap"][0]["value"] = {1, 0, 0};
  CHECK_THROWS_WITH_AS(load_newforms(write_temp("bad_poly.json", red)),
                       doctest::Contains("rational root"), std::invalid_argument);
}

TEST_CASE("pipeline reproduces the shipped bounds") {
  PipelineConfig c7;
  c7.d = 7;
  PipelineResult r7 = run_pipeline(c7);
  CHECK(r7.bound.b_k == 11);
  CHECK(r7.bound.conservative_b_k == 24);

  PipelineConfig c19;
  c19.d = 19;
  c19.inertia_p_threshold = 7;
  PipelineResult r19 = run_pipeline(c19);
  CHECK(r19.bound.b_k == 7);
  REQUIRE(r19.outcomes.size() == 4);
  CHECK(r19.outcomes[0].method == EliminationMethod::Inertia);

  PipelineConfig c43;
  c43.d = 43;
  PipelineResult r43 = run_pipeline(c43);
  CHECK(r43.bound.b_k == 2531);

  PipelineConfig c67;
  c67.d = 67;
  PipelineResult r67 = run_pipeline(c67);
  CHECK(r67.bound.b_k == 86338229);

  // per-form C_f values frozen from an independent computation of the
  // gcd-of-norms chain (covers the rational, quadratic, and cubic paths)
  auto cf_of = [](const PipelineResult& r, const std::string& id) -> BigInt {
    for (const FormOutcome& o : r.outcomes)
      if (o.form_id == id) return o.cf.c_f;
    FAIL("missing form ", id);
    return BigInt(0);
  };
  CHECK(cf_of(r43, "43.D.a") == 788480);
  CHECK(cf_of(r43, "43.D.b") == 448);
  CHECK(cf_of(r43, "43.D.c") == 800);
  CHECK(cf_of(r43, "43.LD.a") == 492800);
  CHECK(cf_of(r43, "43.LD.b") == 224);
  CHECK(cf_of(r43, "43.LD.c") == 17600);  // quadratic Hecke field
  CHECK(cf_of(r43, "43.LD.d") == 385);    // cubic Hecke field
  CHECK(cf_of(r43, "43.LD.e") == 320);
  CHECK(cf_of(r67, "67.D.a") == 1740800);
  CHECK(cf_of(r67, "67.LD.a") == 6800);
  CHECK(cf_of(r67, "67.LD.b") == 3808);   // quadratic Hecke field
  CHECK(cf_of(r67, "67.LD.e") == 54454400);
}

TEST_CASE("pipeline rejects unsupported and inconsistent configurations") {
  PipelineConfig bad;
  bad.d = 11;  // not in the supported set, not flagged experimental
  CHECK_THROWS_WITH_AS(run_pipeline(bad), doctest::Contains("outside the supported set"),
                       std::invalid_argument);

  // a required level with no forms and no emptiness attestation
  json lonely = minimal_fixture(7);
  PipelineConfig c;
  c.d = 7;
  c.fixture_path = write_temp("lonely.json", lonely);
  CHECK_THROWS_WITH_AS(run_pipeline(c), doctest::Contains("does not attest emptiness"),
                       std::invalid_argument);

  // a form that survives everything names itself in the error
  json stuck = minimal_fixture(7);
  stuck["empty_levels"] = {"D"};
  stuck["forms"][0]["ap"][0]["value"] = {3};  // B = 0 at norm 2, no curve data
  PipelineConfig cs;
  cs.d = 7;
  cs.fixture_path = write_temp("stuck.json", stuck);
  CHECK_THROWS_WITH_AS(run_pipeline(cs), "form t.1 is not eliminated", std::domain_error);
}

TEST_CASE("a processed level without a torsion constant is an error") {
  PipelineConfig c;
  c.d = 7;
  c.torsion_primes = {{"LD", BigInt(3)}};  // nothing for level D
  CHECK_THROWS_WITH_AS(run_pipeline(c), doctest::Contains("no torsion prime configured"),
                       std::invalid_argument);
}

TEST_CASE("the fixture directory honors the environment override") {
  setenv(kFixtureDirEnv, "/nonexistent-dir-for-test", 1);
  PipelineConfig c;
  c.d = 7;
  CHECK_THROWS_WITH_AS(run_pipeline(c), doctest::Contains("cannot open"), std::invalid_argument);
  unsetenv(kFixtureDirEnv);
  CHECK(run_pipeline(c).bound.b_k == 11);
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  PipelineConfig c;
  c.d = 43;
  PipelineResult a = run_pipeline(c);
  PipelineResult b = run_pipeline(c);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.manifest.at("config_hash") == b.manifest.at("config_hash"));
  json reparsed = json::parse(a.report.dump());
  CHECK(reparsed.dump() == a.report.dump());
  // timing lives in the manifest, never in the report
  CHECK_FALSE(a.report.contains("timing_ms"));
  CHECK(a.manifest.contains("timing_ms"));
}

TEST_CASE("command dispatch exit codes and output") {
  {
    CoutCapture cap;
    CHECK(dispatch({"eliminate", "trace-set", "--norm", "7"}) == 0);
    CHECK(cap.text() == "-4 -1 2 5\n");
  }
  {
    CoutCapture cap;
    CHECK(dispatch({"sunit", "solve", "--d", "7", "--nmax", "50"}) == 0);
    CHECK(cap.text().find("alpha = -9") != std::string::npos);
  }
  {
    CoutCapture cap;
    CHECK(dispatch({"field", "info", "--d", "67"}) == 0);
    CHECK(cap.text().find("h_K = 1") != std::string::npos);
    CHECK(cap.text().find("3 is inert") != std::string::npos);
  }
  {
    CoutCapture cap;
    CHECK(dispatch({"eliminate", "run", "--d", "7"}) == 0);
    CHECK(cap.text().find("\"B_K\": \"11\"") != std::string::npos);
  }
  {
    CoutCapture cap;
    CHECK(dispatch({"frey", "reduction", "--d", "7", "--A", "1", "--B", "1", "--C", "33", "--a",
                    "1", "--b", "2", "--c", "1", "--p", "5", "--q", "2", "--json"}) == 0);
    CHECK(cap.text().find("multiplicative") != std::string::npos);
  }
  // usage errors
  CHECK(dispatch({"eliminate", "trace-set", "--bogus", "1"}) == 2);
  CHECK(dispatch({"nonsense"}) == 2);
  // domain errors: d outside the supported set; 3 not inert for the solver
  CHECK(dispatch({"eliminate", "run", "--d", "11"}) == 1);
  CHECK(dispatch({"sunit", "solve", "--d", "5"}) == 1);
  {
    // check-tk: condition holds for the shipped solutions
    std::ofstream out("build/pairs_ok.json");
    out << R"([["-9","1"],["-1","1"]])";
    out.close();
    CoutCapture cap;
    CHECK(dispatch({"sunit", "check-tk", "--d", "7", "--pairs", "build/pairs_ok.json"}) == 0);
  }
  {
    std::ofstream out("build/pairs_bad.json");
    out << R"([["81","1"]])";
    out.close();
    CoutCapture cap;
    CHECK(dispatch({"sunit", "check-tk", "--d", "7", "--pairs", "build/pairs_bad.json"}) == 1);
  }
  {
    CoutCapture cap;
    CHECK(dispatch({"eliminate", "run", "--d", "7", "--manifest", "build/manifest_t.json"}) == 0);
    std::ifstream in("build/manifest_t.json");
    REQUIRE(in.good());
    json m = json::parse(in);
    CHECK(m.contains("config_hash"));
    CHECK(m.at("fixture_checksums").contains("newforms"));
    CHECK(m.at("versions").contains("pp3"));
  }
}
