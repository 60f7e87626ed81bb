#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hmcg/hmcg.h"

namespace {

struct Handles {
  hmcg_oracle* o = nullptr;
  std::vector<hmcg_element*> elems;

  explicit Handles(int g) { REQUIRE(hmcg_oracle_create(g, 0, &o) == HMCG_OK); }
  ~Handles() {
    for (auto* e : elems) hmcg_element_destroy(e);
    hmcg_oracle_destroy(o);
  }
  hmcg_element* eval(const char* w) {
    hmcg_element* e = nullptr;
    REQUIRE(hmcg_evaluate(o, w, &e) == HMCG_OK);
    elems.push_back(e);
    return e;
  }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("oracle lifecycle and genus errors") {
  hmcg_oracle* o = nullptr;
  CHECK(hmcg_oracle_create(1, 0, &o) == HMCG_ERR_GENUS);
  CHECK(o == nullptr);
  CHECK(std::string(hmcg_last_error()).find("genus") != std::string::npos);
  CHECK(hmcg_oracle_create(2, 0, nullptr) == HMCG_ERR_NULL_ARG);
  REQUIRE(hmcg_oracle_create(3, 0, &o) == HMCG_OK);
  CHECK(hmcg_oracle_genus(o) == 3);
  hmcg_oracle_destroy(o);
  hmcg_oracle_destroy(nullptr);
  hmcg_element_destroy(nullptr);
}

TEST_CASE("evaluation and queries") {
  Handles h(2);
  hmcg_element* rho = h.eval("rho");
  hmcg_element* word = h.eval("A1 A2 A3 A4 A5 A5 A4 A3 A2 A1");
  hmcg_element* sigma = h.eval("sigma");

  int flag = -1;
  CHECK(hmcg_equal(h.o, rho, word, &flag) == HMCG_OK);
  CHECK(flag == 1);
  CHECK(hmcg_is_identity(h.o, rho, &flag) == HMCG_OK);
  CHECK(flag == 0);
  CHECK(hmcg_is_central(h.o, rho, &flag) == HMCG_OK);
  CHECK(flag == 1);
  CHECK(hmcg_element_orientation(sigma) == -1);
  CHECK(hmcg_element_orientation(rho) == 1);

  REQUIRE(hmcg_element_dimension(rho) == 4);
  std::vector<int64_t> m(16);
  CHECK(hmcg_element_matrix(rho, m.data(), m.size()) == HMCG_OK);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(m[i * 4 + j] == (i == j ? -1 : 0));
  CHECK(hmcg_element_matrix(rho, m.data(), 3) == HMCG_ERR_USAGE);
}

TEST_CASE("parse and index errors") {
  Handles h(2);
  hmcg_element* e = nullptr;
  CHECK(hmcg_evaluate(h.o, "A7", &e) == HMCG_ERR_INDEX);
  CHECK(e == nullptr);
  CHECK(hmcg_evaluate(h.o, "A1 ^", &e) == HMCG_ERR_PARSE);
  CHECK(std::string(hmcg_last_error()).find("position") != std::string::npos);
  CHECK(hmcg_evaluate(h.o, nullptr, &e) == HMCG_ERR_NULL_ARG);
}

TEST_CASE("orders") {
  Handles h(2);
  int64_t k = 0;
  CHECK(hmcg_order(h.o, h.eval("B"), 0, &k) == HMCG_OK);
  CHECK(k == 6);
  CHECK(hmcg_order(h.o, h.eval("M"), 0, &k) == HMCG_OK);
  CHECK(k == 10);
  CHECK(hmcg_order(h.o, h.eval("B"), 4, &k) == HMCG_ERR_ORDER_EXCEEDS_CAP);
  CHECK(std::string(hmcg_last_error()) == "order exceeds cap 4");
}

TEST_CASE("letter cap") {
  hmcg_oracle* o = nullptr;
  REQUIRE(hmcg_oracle_create(2, 20, &o) == HMCG_OK);
  hmcg_element* e = nullptr;
  CHECK(hmcg_evaluate(o, "N^20", &e) == HMCG_ERR_RESOURCE_CAP);
  hmcg_oracle_destroy(o);
}

TEST_CASE("homology and index") {
  int64_t f[4] = {0};
  std::size_t n = 0;
  CHECK(hmcg_h1(3, f, 4, &n) == HMCG_OK);
  REQUIRE(n == 1);
  CHECK(f[0] == 28);
  CHECK(hmcg_h1(3, f, 0, &n) == HMCG_ERR_USAGE);
  CHECK(hmcg_h1(1, f, 4, &n) == HMCG_ERR_GENUS);
  int64_t idx = 0;
  CHECK(hmcg_involution_index(2, &idx) == HMCG_OK);
  CHECK(idx == 5);
  CHECK(hmcg_involution_index(5, &idx) == HMCG_OK);
  CHECK(idx == 22);
}

TEST_CASE("selftest json") {
  Handles h(2);
  char* json = nullptr;
  int ok = 0;
  REQUIRE(hmcg_selftest_json(h.o, &json, &ok) == HMCG_OK);
  const auto j = nlohmann::json::parse(json);
  hmcg_string_free(json);
  CHECK(ok == 1);
  CHECK(j["passed"] == true);
  CHECK(j["genus"] == 2);
  CHECK(j["checks"].size() > 10);
}

TEST_CASE("verify") {
  const char* ids[] = {"C-ORD-M", "C-L4"};
  hmcg_verify_options opts{2, 4, ids, 2, 2, 0};
  char* report = nullptr;
  hmcg_verify_summary sum{};
  REQUIRE(hmcg_verify(&opts, 1, &report, &sum) == HMCG_OK);
  const auto j = nlohmann::json::parse(report);
  hmcg_string_free(report);
  CHECK(j["reports"].size() == 6);
  CHECK(sum.pass == 4);
  CHECK(sum.skipped == 2);
  CHECK(sum.fail == 0);

  const char* bad[] = {"C-NOPE"};
  hmcg_verify_options wrong{2, 2, bad, 1, 1, 0};
  CHECK(hmcg_verify(&wrong, 0, &report, &sum) == HMCG_ERR_USAGE);
  CHECK(report == nullptr);
  hmcg_verify_options low{1, 2, nullptr, 0, 1, 0};
  CHECK(hmcg_verify(&low, 0, &report, &sum) == HMCG_ERR_GENUS);
}

TEST_CASE("claim listing") {
  char* json = nullptr;
  REQUIRE(hmcg_list_claims(&json) == HMCG_OK);
  const auto j = nlohmann::json::parse(json);
  hmcg_string_free(json);
  CHECK(j.size() >= 38);
  bool found = false;
  for (const auto& c : j) found = found || (c["id"] == "C-L4" && c["guard"] == "g >= 4");
  CHECK(found);
}

TEST_CASE("status names") {
  CHECK(std::string(hmcg_status_name(HMCG_OK)) == "ok");
  CHECK(std::string(hmcg_status_name(HMCG_ERR_ORDER_EXCEEDS_CAP)) == "order exceeds cap");
}

}
