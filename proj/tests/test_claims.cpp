#include <doctest.h>

#include <set>
#include <string>

#include <json.hpp>

#include "hmcg/claims.hpp"
#include "hmcg/errors.hpp"

using namespace hmcg;

TEST_SUITE("claims") {

TEST_CASE("registry ids") {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.description.empty());
  }
  for (const char* id :
       {"C-R1", "C-R2", "C-R3", "C-R4", "C-R5", "C-R6", "C-R7", "C-R8", "C-E9", "C-E10", "C-BSHIFT", "C-ORD-B",
        "C-ORD-M", "C-A1BM", "C-L2-ORD", "C-L2-POW", "C-L3-N2", "C-L3-N2M", "C-L3-N2G", "C-L3-ORD", "C-L4",
        "C-L4-G3", "C-T2-CHAIN", "C-T2-G2", "C-L5-RHO", "C-L5-ORD4", "C-L5-THETA", "C-L5-EIG", "C-L6-S",
        "C-L6-F", "C-L6-CONJ", "C-SDELTA", "C-T7-H1", "C-T7-IDX", "C-T7-BINV", "C-T8-TAU", "C-T8-EPS",
        "C-RHO-CENTRAL"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
}

TEST_CASE("guards") {
  const Claim* l4 = find_claim("C-L4");
  REQUIRE(l4);
  CHECK(l4->guard_text == "g >= 4");
  CHECK_FALSE(l4->guard(3));
  CHECK(l4->guard(4));
  CHECK(find_claim("C-L4-G3")->guard(3));
  CHECK_FALSE(find_claim("C-L4-G3")->guard(4));
  CHECK(find_claim("C-T2-G2")->guard(2));
  CHECK_FALSE(find_claim("C-T2-G2")->guard(3));
  CHECK_FALSE(find_claim("C-T2-CHAIN")->guard(2));
  CHECK(find_claim("C-L5-THETA")->guard(4));
  CHECK_FALSE(find_claim("C-L5-THETA")->guard(5));
  CHECK(find_claim("C-NOPE") == nullptr);
}

TEST_CASE("skipped runs") {
  RunOptions o;
  o.genus_min = o.genus_max = 2;
  o.claims = {"C-L4"};
  const RunResult r = run(o);
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0].status == ClaimStatus::Skipped);
  CHECK(r.summary.skipped == 1);
}

TEST_CASE("index claim") {
  RunOptions o;
  o.genus_min = o.genus_max = 3;
  o.claims = {"C-T7-IDX"};
  const RunResult r = run(o);
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0].status == ClaimStatus::Pass);
  CHECK(r.reports[0].expected.find("14") != std::string::npos);
}

TEST_CASE("bad options") {
  RunOptions o;
  o.genus_min = 1;
  CHECK_THROWS_AS(run(o), Error);
  o.genus_min = 4;
  o.genus_max = 3;
  CHECK_THROWS_AS(run(o), Error);
  o.genus_max = 4;
  o.claims = {"C-NOPE"};
  CHECK_THROWS_AS(run(o), Error);
}

TEST_CASE("resource caps become errors") {
  RunOptions o;
  o.genus_min = o.genus_max = 3;
  o.claims = {"C-L4-G3", "C-ORD-B"};
  o.oracle.letter_cap = 30;
  const RunResult r = run(o);
  REQUIRE(r.reports.size() == 2);
  CHECK(r.reports[0].id == "C-L4-G3");
  CHECK(r.reports[0].status == ClaimStatus::Error);
  CHECK(r.reports[0].resource_cap);
  CHECK(r.summary.resource_cap >= 1);
}

TEST_CASE("deterministic and parallel-invariant") {
  RunOptions a;
  a.genus_min = 2;
  a.genus_max = 3;
  RunOptions b = a;
  b.jobs = 4;
  const RunResult x = run(a), y = run(b);
  REQUIRE(x.reports.size() == y.reports.size());
  for (std::size_t i = 0; i < x.reports.size(); ++i) {
    CHECK(x.reports[i].id == y.reports[i].id);
    CHECK(x.reports[i].genus == y.reports[i].genus);
    CHECK(x.reports[i].status == y.reports[i].status);
    CHECK(x.reports[i].expected == y.reports[i].expected);
    CHECK(x.reports[i].actual == y.reports[i].actual);
  }
  for (std::size_t i = 1; i < x.reports.size(); ++i) {
    const auto& p = x.reports[i - 1];
    const auto& q = x.reports[i];
    CHECK((p.id < q.id || (p.id == q.id && p.genus < q.genus)));
  }
}

TEST_CASE("json schema") {
  RunOptions o;
  o.genus_min = 2;
  o.genus_max = 4;
  o.claims = {"C-ORD-B", "C-L4"};
  const RunResult r = run(o);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["range"] == nlohmann::json::array({2, 4}));
  REQUIRE(j["reports"].size() == 6);
  for (const auto& e : j["reports"]) {
    for (const char* k : {"id", "genus", "status", "expected", "actual", "ms"}) CHECK(e.contains(k));
  }
  CHECK(j["summary"]["pass"] == 4);
  CHECK(j["summary"]["skipped"] == 2);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["error"] == 0);

  // The text form carries the same verdicts.
  const std::string text = to_text(r);
  for (const auto& e : j["reports"]) {
    const std::string line = e["id"].get<std::string>() + " g=" + std::to_string(e["genus"].get<int>()) + " " +
                             e["status"].get<std::string>();
    CHECK(text.find(line) != std::string::npos);
  }
}

TEST_CASE("master run at genus 2 and 3") {
  RunOptions o;
  o.genus_min = 2;
  o.genus_max = 3;
  const RunResult r = run(o);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.error == 0);
  for (const auto& rep : r.reports) {
    CHECK_MESSAGE((rep.status == ClaimStatus::Pass || rep.status == ClaimStatus::Skipped),
                  rep.id << " g=" << rep.genus << ": " << rep.actual);
  }
}

}
