// Command-line front end.  All domain work goes through the C API in hbo.h;
// this file only parses arguments, moves strings around and sets exit codes.
//
// Exit codes: 0 success, 1 validation failure (including failed law checks
// and oracle mismatches), 2 search budget exhausted, 3 malformed input,
// 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbo.h"

namespace {

using Json = nlohmann::json;

const char* kind_for(hbo_status status) {
  switch (status) {
    case HBO_OK: return "ok";
    case HBO_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case HBO_ERROR_BUDGET_EXCEEDED: return "budget_exceeded";
    case HBO_ERROR_PARSE: return "parse_error";
    case HBO_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

int report_error(hbo_status status, const std::string& message) {
  const Json error = {{"error",
                       {{"code", static_cast<int>(status)},
                        {"kind", kind_for(status)},
                        {"message", message}}}};
  std::cerr << error.dump(2) << "\n";
  return static_cast<int>(status);
}

int report_error(hbo_status status) { return report_error(status, hbo_last_error()); }

int emit_str(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << payload).flush()) {
    return report_error(HBO_ERROR_INTERNAL, "cannot write " + out_path);
  }
  return 0;
}

// Takes ownership of the C string and writes it to --out or stdout.
int emit(char* owned, const std::string& out_path) {
  const std::string payload = owned ? owned : "";
  hbo_string_free(owned);
  return emit_str(payload, out_path);
}

// Request payload: --file wins, then a literal --json string, then stdin.
std::string read_request(const std::string& file, const std::string& inline_json) {
  if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return "";
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (!inline_json.empty()) return inline_json;
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

struct CommonArgs {
  int n = 0;
  int d = 1;
  std::uint64_t budget = 0;  // 0 = library default
  std::string format = "json";
  std::string out;
};

void add_shape(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--n", args.n, "ground set size")->required();
  cmd->add_option("--d", args.d, "order dimension")->required();
}

void add_budget(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--budget", args.budget, "search node limit (0 = default)");
}

void add_out(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--out", args.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher Bruhat orders: enumeration, insertion, operads"};
  app.set_version_flag("--version", []() { return std::string(hbo_version()); });
  app.require_subcommand(1);

  CommonArgs args;
  std::string request_file;
  std::string request_json;
  int offset = 0;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string what = "enumerate";

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all elements of B(n,d)");
  add_shape(enumerate, args);
  add_budget(enumerate, args);
  add_out(enumerate, args);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "cross-check enumeration against the admissible-order oracle");
  add_shape(oracle, args);
  add_budget(oracle, args);
  add_out(oracle, args);

  CLI::App* validate = app.add_subcommand(
      "validate", "run the interval criterion on an element (JSON via stdin/--file)");
  validate->add_option("--file", request_file, "read the element from a file");
  validate->add_option("--json", request_json, "element as a literal JSON string");
  add_out(validate, args);

  CLI::App* insert_cmd = app.add_subcommand(
      "insert", "insert one element into another at an offset");
  insert_cmd->add_option("--file", request_file,
                         "read {\"lhs\",\"rhs\",\"j\"} from a file");
  insert_cmd->add_option("--json", request_json, "request as a literal JSON string");
  insert_cmd->add_option("--j", offset, "override the offset in the request");
  add_out(insert_cmd, args);

  CLI::App* compose = app.add_subcommand(
      "compose", "operadic composition (modes: master, sym, team, small, big)");
  compose->add_option("--file", request_file, "read the request from a file");
  compose->add_option("--json", request_json, "request as a literal JSON string");
  add_out(compose, args);

  CLI::App* hasse = app.add_subcommand("hasse", "covering diagram of B(n,d)");
  add_shape(hasse, args);
  add_budget(hasse, args);
  hasse->add_option("--format", args.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  add_out(hasse, args);

  CLI::App* chains = app.add_subcommand(
      "chains", "maximal chains and the linear orders they induce");
  add_shape(chains, args);
  add_budget(chains, args);
  add_out(chains, args);

  CLI::App* laws = app.add_subcommand("laws", "run the algebraic-law suites");
  laws->add_option("--suite", suites, "suite name (repeatable; default all)");
  laws->add_option("--seed", seed, "seed for the randomized suite");
  laws->add_option("--format", args.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  laws->add_flag("--list", "list suite names and exit");
  add_budget(laws, args);
  add_out(laws, args);

  CLI::App* export_cmd = app.add_subcommand("export", "write a dataset to a file");
  export_cmd->add_option("--what", what, "enumerate, hasse or chains")
      ->check(CLI::IsMember({"enumerate", "hasse", "chains"}));
  add_shape(export_cmd, args);
  add_budget(export_cmd, args);
  export_cmd->add_option("--format", args.format, "json or dot (dot: hasse only)")
      ->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--out", args.out, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  char* text = nullptr;
  hbo_status status = HBO_OK;

  if (enumerate->parsed()) {
    status = hbo_enumerate_json(args.n, args.d, args.budget, &text);
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  if (oracle->parsed()) {
    status = hbo_oracle_json(args.n, args.d, args.budget, &text);
    if (status != HBO_OK) return report_error(status);
    const bool match = Json::parse(text).at("match").get<bool>();
    const int rc = emit(text, args.out);
    if (rc != 0) return rc;
    return match ? 0 : report_error(HBO_ERROR_INVALID_ARGUMENT,
                                    "enumeration disagrees with the oracle");
  }

  if (validate->parsed()) {
    const std::string payload = read_request(request_file, request_json);
    if (payload.empty()) return report_error(HBO_ERROR_PARSE, "empty input");
    status = hbo_validate_json(payload.c_str(), &text);
    if (status != HBO_OK) return report_error(status);
    const bool ok = Json::parse(text).at("ok").get<bool>();
    const int rc = emit(text, args.out);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
  }

  if (insert_cmd->parsed()) {
    std::string payload = read_request(request_file, request_json);
    if (payload.empty()) return report_error(HBO_ERROR_PARSE, "empty input");
    if (insert_cmd->count("--j") > 0) {
      try {
        Json request = Json::parse(payload);
        request["j"] = offset;
        payload = request.dump();
      } catch (const Json::exception& e) {
        return report_error(HBO_ERROR_PARSE, e.what());
      }
    }
    status = hbo_insert_json(payload.c_str(), &text);
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  if (compose->parsed()) {
    const std::string payload = read_request(request_file, request_json);
    if (payload.empty()) return report_error(HBO_ERROR_PARSE, "empty input");
    status = hbo_compose_json(payload.c_str(), &text);
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  if (hasse->parsed()) {
    status = args.format == "dot"
                 ? hbo_hasse_dot(args.n, args.d, args.budget, &text)
                 : hbo_hasse_json(args.n, args.d, args.budget, &text);
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  if (chains->parsed()) {
    status = hbo_chains_json(args.n, args.d, args.budget, &text);
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  if (laws->parsed()) {
    if (laws->count("--list") > 0) {
      status = hbo_law_suite_names(&text);
      if (status != HBO_OK) return report_error(status);
      std::string csv = text ? text : "";
      hbo_string_free(text);
      for (auto& c : csv) {
        if (c == ',') c = '\n';
      }
      csv += '\n';
      return emit_str(csv, args.out);
    }
    std::string csv;
    for (const std::string& s : suites) {
      if (!csv.empty()) csv += ',';
      csv += s;
    }
    const char* names = csv.empty() ? nullptr : csv.c_str();
    if (args.format == "json") {
      status = hbo_laws_json(names, seed, args.budget, &text);
      if (status != HBO_OK) return report_error(status);
      const bool ok = Json::parse(text).at("ok").get<bool>();
      const int rc = emit(text, args.out);
      if (rc != 0) return rc;
      return ok ? 0 : 1;
    }
    status = hbo_laws_text(names, seed, args.budget, &text);
    if (status != HBO_OK) return report_error(status);
    const std::string payload = text ? text : "";
    const int rc = emit(text, args.out);
    if (rc != 0) return rc;
    return payload.find("law failures found") == std::string::npos ? 0 : 1;
  }

  if (export_cmd->parsed()) {
    if (what == "hasse") {
      status = args.format == "dot"
                   ? hbo_hasse_dot(args.n, args.d, args.budget, &text)
                   : hbo_hasse_json(args.n, args.d, args.budget, &text);
    } else if (what == "chains") {
      if (args.format == "dot") {
        return report_error(HBO_ERROR_INVALID_ARGUMENT,
                            "chains export supports only --format json");
      }
      status = hbo_chains_json(args.n, args.d, args.budget, &text);
    } else {
      if (args.format == "dot") {
        return report_error(HBO_ERROR_INVALID_ARGUMENT,
                            "enumerate export supports only --format json");
      }
      status = hbo_enumerate_json(args.n, args.d, args.budget, &text);
    }
    if (status != HBO_OK) return report_error(status);
    return emit(text, args.out);
  }

  return report_error(HBO_ERROR_INVALID_ARGUMENT, "no subcommand given");
}
