#include "hbo/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "hbo/suites.hpp"

namespace hbo {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::parse_error, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    fail(ErrorCode::parse_error, std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::parse_error, what + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      fail(ErrorCode::parse_error, what + " must contain only integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const InversionSet& inv) {
  Json members = Json::array();
  for (const Subset& s : inv.members()) {
    members.push_back(Json(s.elems()));
  }
  return Json{{"n", inv.n()}, {"d", inv.d()}, {"inv", members}};
}

Json to_json(const BruhatElement& b) { return to_json(b.inv()); }

Json to_json(const MoleculeType& type) {
  return Json{{"d", type.d()}, {"electrons", type.electrons()}};
}

Json to_json(const Perm& p) { return Json(p.images()); }

Json to_json(const FElement& f) {
  return Json{{"type", to_json(f.type())}, {"realized", to_json(f.realized())}};
}

Json to_json(const BigElement& b) {
  return Json{{"m", b.m()}, {"type", to_json(b.type())}, {"bruhat", to_json(b.bruhat())}};
}

Json to_json(const LawReport& report) {
  return Json{{"name", report.name},
              {"checks", report.checks},
              {"failures", report.failure_count},
              {"failure_samples", report.failures},
              {"ok", report.ok()}};
}

InversionSet inversion_set_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  const Json& inv = field(j, "inv");
  if (!inv.is_array()) fail(ErrorCode::parse_error, "\"inv\" must be an array");
  std::vector<Subset> members;
  members.reserve(inv.size());
  for (const Json& entry : inv) {
    members.emplace_back(int_array(entry, "inversion"));
  }
  return InversionSet(n, d, std::move(members));
}

BruhatElement element_from_json(const Json& j) {
  return BruhatElement::checked(inversion_set_from_json(j));
}

MoleculeType molecule_from_json(const Json& j) {
  return MoleculeType(int_field(j, "d"), int_array(field(j, "electrons"), "\"electrons\""));
}

Perm perm_from_json(const Json& j) {
  return Perm(int_array(j, "permutation"));
}

FElement f_element_from_json(const Json& j) {
  return FElement(molecule_from_json(field(j, "type")),
                  perm_from_json(field(j, "realized")));
}

BigElement big_element_from_json(const Json& j) {
  BigElement out(element_from_json(field(j, "bruhat")),
                 molecule_from_json(field(j, "type")));
  if (j.contains("m") && int_field(j, "m") != out.m()) {
    fail(ErrorCode::parse_error, "\"m\" disagrees with the ground size of \"bruhat\"");
  }
  return out;
}

Json enumerate_to_json(int n, int d, Budget& budget) {
  const auto elements = enumerate_bruhat(n, d, budget);
  Json list = Json::array();
  for (const BruhatElement& b : elements) list.push_back(to_json(b));
  return Json{{"n", n}, {"d", d}, {"count", elements.size()}, {"elements", list}};
}

Json oracle_to_json(int n, int d, Budget& budget) {
  const auto direct = enumerate_bruhat(n, d, budget);
  const OracleResult oracle = enumerate_admissible_classes(n, d, budget);
  bool match = direct.size() == oracle.classes.size();
  if (match) {
    for (std::size_t i = 0; i < direct.size(); ++i) {
      if (!(direct[i].inv() == oracle.classes[i])) {
        match = false;
        break;
      }
    }
  }
  return Json{{"n", n},
              {"d", d},
              {"enumerated", direct.size()},
              {"classes", oracle.classes.size()},
              {"admissible_orders", oracle.admissible_orders},
              {"match", match}};
}

Json validate_to_json(const Json& element) {
  const InversionSet inv = inversion_set_from_json(element);
  const ZieglerResult result = ziegler_check(inv);
  Json violations = Json::array();
  for (const Subset& q : result.violations) violations.push_back(Json(q.elems()));
  return Json{{"n", inv.n()},
              {"d", inv.d()},
              {"size", inv.size()},
              {"ok", result.ok()},
              {"violations", violations}};
}

Json insert_request(const Json& request) {
  const BruhatElement lhs = element_from_json(field(request, "lhs"));
  const BruhatElement rhs = element_from_json(field(request, "rhs"));
  const int j = int_field(request, "j");
  return to_json(insert(lhs, rhs, j));
}

Json compose_request(const Json& request) {
  const Json& mode_json = field(request, "mode");
  if (!mode_json.is_string()) fail(ErrorCode::parse_error, "\"mode\" must be a string");
  const std::string mode = mode_json.get<std::string>();
  const Json& head = field(request, "head");
  const Json& parts = field(request, "parts");
  if (!parts.is_array()) fail(ErrorCode::parse_error, "\"parts\" must be an array");

  if (mode == "master") {
    std::vector<MoleculeType> ps;
    for (const Json& p : parts) ps.push_back(molecule_from_json(p));
    return to_json(master_compose(molecule_from_json(head), ps));
  }
  if (mode == "sym") {
    std::vector<Perm> ps;
    for (const Json& p : parts) ps.push_back(perm_from_json(p));
    return to_json(sym_compose(perm_from_json(head), ps));
  }
  if (mode == "team") {
    std::vector<FElement> ps;
    for (const Json& p : parts) ps.push_back(f_element_from_json(p));
    return to_json(f_compose(f_element_from_json(head), ps));
  }
  if (mode == "small") {
    std::vector<BruhatElement> ps;
    for (const Json& p : parts) ps.push_back(element_from_json(p));
    return to_json(small_compose(element_from_json(head), ps));
  }
  if (mode == "big") {
    std::vector<BigElement> ps;
    for (const Json& p : parts) ps.push_back(big_element_from_json(p));
    return to_json(big_compose(big_element_from_json(head), ps));
  }
  fail(ErrorCode::parse_error, "unknown compose mode: " + mode);
}

Json hasse_to_json(const HasseDiagram& diagram) {
  Json nodes = Json::array();
  for (const BruhatElement& b : diagram.nodes) nodes.push_back(to_json(b));
  Json edges = Json::array();
  for (const auto& [a, b] : diagram.edges) edges.push_back(Json::array({a, b}));
  return Json{{"n", diagram.n}, {"d", diagram.d}, {"nodes", nodes}, {"edges", edges}};
}

std::string hasse_to_dot(const HasseDiagram& diagram) {
  std::ostringstream os;
  os << "digraph bruhat {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    os << "  " << i << " [label=\"" << diagram.nodes[i].inv().str() << "\"];\n";
  }
  for (const auto& [a, b] : diagram.edges) {
    os << "  " << a << " -> " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

int node_index(const HasseDiagram& diagram, const BruhatElement& b) {
  const auto it = std::lower_bound(
      diagram.nodes.begin(), diagram.nodes.end(), b,
      [](const BruhatElement& x, const BruhatElement& y) {
        return canonical_less(x.inv(), y.inv());
      });
  if (it == diagram.nodes.end() || !(*it == b)) {
    fail(ErrorCode::internal, "chain step is not a diagram node");
  }
  return static_cast<int>(it - diagram.nodes.begin());
}

}  // namespace

Json chains_to_json(int n, int d, Budget& budget) {
  const HasseDiagram diagram = hasse(n, d, budget);
  Json chains = Json::array();
  Json orders = Json::array();
  std::uint64_t count = 0;
  for_each_maximal_chain(diagram, budget, [&](const MaximalChain& chain) {
    ++count;
    Json steps = Json::array();
    for (const BruhatElement& b : chain.steps) steps.push_back(node_index(diagram, b));
    chains.push_back(steps);
    Json order = Json::array();
    const LinearOrder induced = chain_to_order(chain);
    for (const Subset& s : induced.sequence()) {
      order.push_back(Json(s.elems()));
    }
    orders.push_back(order);
  });
  return Json{{"n", n}, {"d", d}, {"count", count},
              {"chains", chains}, {"orders", orders}};
}

Json laws_to_json(const std::vector<std::string>& suites, std::uint64_t seed,
                  Budget& budget) {
  SuiteOptions options;
  options.seed = seed;
  options.budget = &budget;
  std::vector<LawReport> reports;
  if (suites.empty()) {
    reports = run_all_law_suites(options);
  } else {
    for (const std::string& name : suites) {
      auto part = run_law_suite(name, options);
      reports.insert(reports.end(), part.begin(), part.end());
    }
  }
  Json list = Json::array();
  bool all_ok = true;
  std::uint64_t checks = 0;
  for (const LawReport& r : reports) {
    list.push_back(to_json(r));
    all_ok = all_ok && r.ok();
    checks += r.checks;
  }
  return Json{{"seed", seed}, {"checks", checks}, {"ok", all_ok}, {"suites", list}};
}

std::string laws_to_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  bool all_ok = true;
  std::uint64_t checks = 0;
  for (const LawReport& r : reports) {
    os << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checks
       << " checks, " << r.failure_count << " failures\n";
    for (const std::string& f : r.failures) os << "     " << f << "\n";
    all_ok = all_ok && r.ok();
    checks += r.checks;
  }
  os << (all_ok ? "all laws hold" : "law failures found") << " (" << checks
     << " checks)\n";
  return os.str();
}

Json error_to_json(ErrorCode code, const std::string& message) {
  return Json{{"error",
               Json{{"code", static_cast<int>(code)},
                    {"kind", error_kind(code)},
                    {"message", message}}}};
}

std::string error_kind(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace hbo
