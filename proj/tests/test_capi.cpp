// Exercises the shared-library C interface end to end: status codes, handle
// lifetime, thread-local error messages, and JSON passthrough.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <hbo.h>

#include "json.hpp"

using nlohmann::json;

namespace {

// Wraps a char* out-parameter call and frees the buffer.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  hbo_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error slots") {
  CHECK(std::strlen(hbo_version()) > 0);
  CHECK(std::string(hbo_last_error()).empty());

  // Freeing null handles is a no-op.
  hbo_string_free(nullptr);
  hbo_element_free(nullptr);
  hbo_poset_free(nullptr);
}

TEST_CASE("element construction, leq, and JSON round trip") {
  hbo_element* min = nullptr;
  hbo_element* max = nullptr;
  REQUIRE(hbo_element_minimal(3, 1, &min) == HBO_OK);
  REQUIRE(hbo_element_maximal(3, 1, &max) == HBO_OK);

  int le = -1;
  REQUIRE(hbo_element_leq(min, max, &le) == HBO_OK);
  CHECK(le == 1);
  REQUIRE(hbo_element_leq(max, min, &le) == HBO_OK);
  CHECK(le == 0);

  char* dumped = nullptr;
  REQUIRE(hbo_element_to_json(max, &dumped) == HBO_OK);
  const std::string text = take(dumped);
  const json parsed = json::parse(text);
  CHECK(parsed["n"] == 3);
  CHECK(parsed["d"] == 1);
  CHECK(parsed["inv"].size() == 3);

  hbo_element* again = nullptr;
  REQUIRE(hbo_element_parse(text.c_str(), &again) == HBO_OK);
  REQUIRE(hbo_element_leq(max, again, &le) == HBO_OK);
  CHECK(le == 1);
  REQUIRE(hbo_element_leq(again, max, &le) == HBO_OK);
  CHECK(le == 1);

  hbo_element_free(min);
  hbo_element_free(max);
  hbo_element_free(again);
}

TEST_CASE("insertion through handles and through JSON") {
  hbo_element* a = nullptr;
  hbo_element* b = nullptr;
  REQUIRE(hbo_element_maximal(2, 1, &a) == HBO_OK);
  REQUIRE(hbo_element_minimal(2, 1, &b) == HBO_OK);

  hbo_element* out = nullptr;
  REQUIRE(hbo_insert(a, b, 0, &out) == HBO_OK);
  char* dumped = nullptr;
  REQUIRE(hbo_element_to_json(out, &dumped) == HBO_OK);
  const json direct = json::parse(take(dumped));
  CHECK(direct["inv"] == json::parse("[[1,3],[2,3]]"));

  const json request = {
      {"lhs", {{"n", 2}, {"d", 1}, {"inv", json::array({json::array({1, 2})})}}},
      {"rhs", {{"n", 2}, {"d", 1}, {"inv", json::array()}}},
      {"j", 0}};
  char* via_json = nullptr;
  REQUIRE(hbo_insert_json(request.dump().c_str(), &via_json) == HBO_OK);
  CHECK(json::parse(take(via_json)) == direct);

  // Offset out of range surfaces as invalid-argument with a message.
  hbo_element* bad = nullptr;
  CHECK(hbo_insert(a, b, 5, &bad) == HBO_ERROR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(hbo_last_error()) > 0);

  hbo_element_free(a);
  hbo_element_free(b);
  hbo_element_free(out);
}

TEST_CASE("compose JSON request") {
  const json request = {
      {"mode", "sym"},
      {"head", json::array({2, 1})},
      {"parts", json::array({json::array({1, 2}), json::array({1, 2})})}};
  char* out = nullptr;
  REQUIRE(hbo_compose_json(request.dump().c_str(), &out) == HBO_OK);
  CHECK(json::parse(take(out)) == json::array({3, 4, 1, 2}));
}

TEST_CASE("poset enumeration handles") {
  hbo_poset* p = nullptr;
  REQUIRE(hbo_poset_enumerate(4, 2, 0, &p) == HBO_OK);
  CHECK(hbo_poset_size(p) == 8);

  hbo_element* first = nullptr;
  REQUIRE(hbo_poset_element(p, 0, &first) == HBO_OK);
  char* dumped = nullptr;
  REQUIRE(hbo_element_to_json(first, &dumped) == HBO_OK);
  CHECK(json::parse(take(dumped))["inv"].empty());
  hbo_element_free(first);

  hbo_element* off_end = nullptr;
  CHECK(hbo_poset_element(p, 8, &off_end) == HBO_ERROR_INVALID_ARGUMENT);
  CHECK(off_end == nullptr);
  CHECK(std::strlen(hbo_last_error()) > 0);

  hbo_poset_free(p);
}

TEST_CASE("summary services emit valid JSON") {
  char* out = nullptr;
  REQUIRE(hbo_enumerate_json(4, 2, 0, &out) == HBO_OK);
  CHECK(json::parse(take(out))["count"] == 8);

  REQUIRE(hbo_oracle_json(4, 2, 0, &out) == HBO_OK);
  const json oracle = json::parse(take(out));
  CHECK(oracle["match"] == true);
  CHECK(oracle["admissible_orders"] == 16);

  REQUIRE(hbo_hasse_json(3, 1, 0, &out) == HBO_OK);
  CHECK(json::parse(take(out))["edges"].size() == 6);

  REQUIRE(hbo_hasse_dot(3, 1, 0, &out) == HBO_OK);
  CHECK(take(out).find("digraph bruhat") == 0);

  REQUIRE(hbo_chains_json(3, 1, 0, &out) == HBO_OK);
  CHECK(json::parse(take(out))["count"] == 2);
}

TEST_CASE("validation keeps HBO_OK for invalid sets") {
  char* report = nullptr;
  REQUIRE(hbo_validate_json(R"({"n":3,"d":1,"inv":[[1,3]]})", &report) == HBO_OK);
  const json parsed = json::parse(take(report));
  CHECK(parsed["ok"] == false);
  CHECK(parsed["violations"] == json::array({json::array({1, 2, 3})}));

  REQUIRE(hbo_validate_json(R"({"n":3,"d":1,"inv":[]})", &report) == HBO_OK);
  CHECK(json::parse(take(report))["ok"] == true);
}

TEST_CASE("status codes for the failure families") {
  char* out = nullptr;

  CHECK(hbo_enumerate_json(-1, 1, 0, &out) == HBO_ERROR_INVALID_ARGUMENT);
  CHECK(out == nullptr);

  // A tiny budget trips the budget error.
  CHECK(hbo_enumerate_json(6, 2, 10, &out) == HBO_ERROR_BUDGET_EXCEEDED);
  CHECK(out == nullptr);
  CHECK(std::string(hbo_last_error()).find("budget") != std::string::npos);

  hbo_element* e = nullptr;
  CHECK(hbo_element_parse("{ not json", &e) == HBO_ERROR_PARSE);
  CHECK(hbo_element_parse(R"({"n":2,"d":1})", &e) == HBO_ERROR_PARSE);
  CHECK(e == nullptr);

  // Null arguments are rejected, not dereferenced.
  CHECK(hbo_element_parse(nullptr, &e) == HBO_ERROR_INVALID_ARGUMENT);
  CHECK(hbo_element_parse(R"({"n":2,"d":1,"inv":[]})", nullptr) ==
        HBO_ERROR_INVALID_ARGUMENT);
  CHECK(hbo_element_to_json(nullptr, &out) == HBO_ERROR_INVALID_ARGUMENT);
  int le = 0;
  CHECK(hbo_element_leq(nullptr, nullptr, &le) == HBO_ERROR_INVALID_ARGUMENT);
  CHECK(hbo_poset_element(nullptr, 0, &e) == HBO_ERROR_INVALID_ARGUMENT);

  // The error slot resets after the next success.
  CHECK(std::strlen(hbo_last_error()) > 0);
  REQUIRE(hbo_element_minimal(2, 1, &e) == HBO_OK);
  CHECK(std::string(hbo_last_error()).empty());
  hbo_element_free(e);
}

TEST_CASE("law suites through the C interface") {
  char* csv = nullptr;
  REQUIRE(hbo_law_suite_names(&csv) == HBO_OK);
  const std::string names = take(csv);
  CHECK(names.find("master") != std::string::npos);
  CHECK(names.find("sym") != std::string::npos);
  CHECK(names.find(',') != std::string::npos);

  char* text = nullptr;
  REQUIRE(hbo_laws_text("sym", 42, 0, &text) == HBO_OK);
  CHECK(take(text).find("all laws hold") != std::string::npos);

  char* report = nullptr;
  REQUIRE(hbo_laws_json("sym", 42, 0, &report) == HBO_OK);
  const json parsed = json::parse(take(report));
  CHECK(parsed["ok"] == true);
  CHECK(parsed["seed"] == 42);

  CHECK(hbo_laws_json("banana", 0, 0, &report) == HBO_ERROR_INVALID_ARGUMENT);
}
