#include "hbo.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hbo/error.hpp"
#include "hbo/json_io.hpp"
#include "hbo/orders.hpp"
#include "hbo/suites.hpp"

struct hbo_element {
  hbo::BruhatElement value;
};

struct hbo_poset {
  int n = 0;
  int d = 0;
  std::vector<hbo::BruhatElement> elements;
};

namespace {

thread_local std::string t_last_error;

template <typename F>
hbo_status guarded(F&& body) {
  try {
    t_last_error.clear();
    body();
    return HBO_OK;
  } catch (const hbo::Error& e) {
    t_last_error = e.what();
    return static_cast<hbo_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return HBO_ERROR_PARSE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return HBO_ERROR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return HBO_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) hbo::fail(hbo::ErrorCode::internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) hbo::fail(hbo::ErrorCode::invalid_argument, what);
}

hbo::Budget make_budget(uint64_t limit) {
  return hbo::Budget(limit ? limit : hbo::Budget::kDefaultLimit);
}

std::string json_line(const hbo::Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<hbo::LawReport> run_suites(const char* names_csv, uint64_t seed,
                                       hbo::Budget& budget) {
  hbo::SuiteOptions options;
  options.seed = seed;
  options.budget = &budget;
  const auto names = split_csv(names_csv);
  if (names.empty()) return hbo::run_all_law_suites(options);
  std::vector<hbo::LawReport> reports;
  for (const std::string& name : names) {
    auto part = hbo::run_law_suite(name, options);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  return reports;
}

}  // namespace

extern "C" {

const char* hbo_version(void) { return "0.1.0"; }

const char* hbo_last_error(void) { return t_last_error.c_str(); }

void hbo_string_free(char* s) { std::free(s); }

hbo_status hbo_element_parse(const char* json, hbo_element** out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto parsed = hbo::element_from_json(hbo::Json::parse(json));
    *out = new hbo_element{std::move(parsed)};
  });
}

hbo_status hbo_element_minimal(int n, int d, hbo_element** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new hbo_element{hbo::minimal_element(n, d)};
  });
}

hbo_status hbo_element_maximal(int n, int d, hbo_element** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new hbo_element{hbo::maximal_element(n, d)};
  });
}

hbo_status hbo_element_to_json(const hbo_element* e, char** out) {
  return guarded([&] {
    require(e && out, "null argument");
    *out = dup_string(json_line(hbo::to_json(e->value)));
  });
}

hbo_status hbo_element_leq(const hbo_element* a, const hbo_element* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = hbo::leq(a->value, b->value) ? 1 : 0;
  });
}

void hbo_element_free(hbo_element* e) { delete e; }

hbo_status hbo_validate_json(const char* element_json, char** out_report) {
  return guarded([&] {
    require(element_json && out_report, "null argument");
    *out_report =
        dup_string(json_line(hbo::validate_to_json(hbo::Json::parse(element_json))));
  });
}

hbo_status hbo_insert(const hbo_element* lhs, const hbo_element* rhs, int j,
                      hbo_element** out) {
  return guarded([&] {
    require(lhs && rhs && out, "null argument");
    *out = new hbo_element{hbo::insert(lhs->value, rhs->value, j)};
  });
}

hbo_status hbo_insert_json(const char* request_json, char** out_element_json) {
  return guarded([&] {
    require(request_json && out_element_json, "null argument");
    *out_element_json =
        dup_string(json_line(hbo::insert_request(hbo::Json::parse(request_json))));
  });
}

hbo_status hbo_compose_json(const char* request_json, char** out_json) {
  return guarded([&] {
    require(request_json && out_json, "null argument");
    *out_json =
        dup_string(json_line(hbo::compose_request(hbo::Json::parse(request_json))));
  });
}

hbo_status hbo_poset_enumerate(int n, int d, uint64_t budget, hbo_poset** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    auto elements = hbo::enumerate_bruhat(n, d, tracker);
    *out = new hbo_poset{n, d, std::move(elements)};
  });
}

size_t hbo_poset_size(const hbo_poset* p) { return p ? p->elements.size() : 0; }

hbo_status hbo_poset_element(const hbo_poset* p, size_t index, hbo_element** out) {
  return guarded([&] {
    require(p && out, "null argument");
    require(index < p->elements.size(), "element index out of range");
    *out = new hbo_element{p->elements[index]};
  });
}

void hbo_poset_free(hbo_poset* p) { delete p; }

hbo_status hbo_enumerate_json(int n, int d, uint64_t budget, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(json_line(hbo::enumerate_to_json(n, d, tracker)));
  });
}

hbo_status hbo_oracle_json(int n, int d, uint64_t budget, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(json_line(hbo::oracle_to_json(n, d, tracker)));
  });
}

hbo_status hbo_hasse_json(int n, int d, uint64_t budget, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(json_line(hbo::hasse_to_json(hbo::hasse(n, d, tracker))));
  });
}

hbo_status hbo_hasse_dot(int n, int d, uint64_t budget, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(hbo::hasse_to_dot(hbo::hasse(n, d, tracker)));
  });
}

hbo_status hbo_chains_json(int n, int d, uint64_t budget, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(json_line(hbo::chains_to_json(n, d, tracker)));
  });
}

hbo_status hbo_law_suite_names(char** out_csv) {
  return guarded([&] {
    require(out_csv != nullptr, "null argument");
    std::string csv;
    for (const std::string& name : hbo::law_suite_names()) {
      if (!csv.empty()) csv += ',';
      csv += name;
    }
    *out_csv = dup_string(csv);
  });
}

hbo_status hbo_laws_json(const char* names_csv, uint64_t seed, uint64_t budget,
                         char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    const auto names = split_csv(names_csv);
    *out = dup_string(json_line(hbo::laws_to_json(names, seed, tracker)));
  });
}

hbo_status hbo_laws_text(const char* names_csv, uint64_t seed, uint64_t budget,
                         char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hbo::Budget tracker = make_budget(budget);
    *out = dup_string(hbo::laws_to_text(run_suites(names_csv, seed, tracker)));
  });
}

}  // extern "C"
