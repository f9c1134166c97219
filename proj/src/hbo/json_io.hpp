#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hbo/budget.hpp"
#include "hbo/error.hpp"
#include "hbo/insertion.hpp"
#include "hbo/operads.hpp"
#include "hbo/orders.hpp"
#include "hbo/report.hpp"

// JSON encodings and the request-level services behind the public API.
//
// Schemas (all keys lowercase, arrays of ints are 1-based ground elements):
//   element   {"n": int, "d": int, "inv": [[int...] ...]}
//   molecule  {"d": int, "electrons": [int...]}
//   team      {"type": molecule, "realized": [int...]}
//   big       {"m": int, "type": molecule, "bruhat": element}
//   perm      [int...]                       (one-line notation)
//   insert    {"lhs": element, "rhs": element, "j": int}
//   compose   {"mode": "master"|"sym"|"team"|"small"|"big",
//              "head": <mode element>, "parts": [<mode element>...]}
// nlohmann's default object keeps keys sorted, so every dump is
// deterministic byte for byte.

namespace hbo {

using Json = nlohmann::json;

Json to_json(const InversionSet& inv);
Json to_json(const BruhatElement& b);
Json to_json(const MoleculeType& type);
Json to_json(const Perm& p);
Json to_json(const FElement& f);
Json to_json(const BigElement& b);
Json to_json(const LawReport& report);

// Parsers throw Error(parse_error) on shape problems and propagate the
// domain validation errors of the constructed objects.
InversionSet inversion_set_from_json(const Json& j);  // no interval check
BruhatElement element_from_json(const Json& j);       // checked
MoleculeType molecule_from_json(const Json& j);
Perm perm_from_json(const Json& j);
FElement f_element_from_json(const Json& j);
BigElement big_element_from_json(const Json& j);

// Command services.
Json enumerate_to_json(int n, int d, Budget& budget);
Json oracle_to_json(int n, int d, Budget& budget);
Json validate_to_json(const Json& element);
Json insert_request(const Json& request);
Json compose_request(const Json& request);
Json hasse_to_json(const HasseDiagram& diagram);
std::string hasse_to_dot(const HasseDiagram& diagram);
Json chains_to_json(int n, int d, Budget& budget);
Json laws_to_json(const std::vector<std::string>& suites, std::uint64_t seed,
                  Budget& budget);
std::string laws_to_text(const std::vector<LawReport>& reports);

// {"error": {"code": int, "kind": str, "message": str}}
Json error_to_json(ErrorCode code, const std::string& message);
std::string error_kind(ErrorCode code);

}  // namespace hbo
