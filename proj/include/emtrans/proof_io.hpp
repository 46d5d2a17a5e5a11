#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "emtrans/g3cp.hpp"
#include "emtrans/g3ip.hpp"

namespace emtrans {

using Json = nlohmann::ordered_json;

// Interchange schema shared by both systems:
//   { "system": "g3cp"|"g3ip", "rule": string,
//     "conclusion": {"ante": [string...], "succ": [string...] | string},
//     "principal": string?, "cut_formula": string?, "premises": [node...] }
Json to_json(const CProof& p);
Json to_json(const IProof& p);
Json to_json(const Valuation& v);

/// Rebuilds a proof from its JSON form; the root "system" field selects the
/// calculus. Throws std::invalid_argument on malformed input. The result is
/// not checked; run check_c / check_i afterwards.
std::variant<CProof, IProof> proof_from_json(const Json& j);

std::string render_proof(const CProof& p, Style style);
std::string render_proof(const IProof& p, Style style);

}  // namespace emtrans
