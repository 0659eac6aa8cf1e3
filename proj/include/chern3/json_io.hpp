#pragma once

// JSON encodings. Rationals are always written as strings ("n" or "p/q");
// integer JSON numbers are accepted on input. Readers are strict: unknown keys
// raise SchemaError naming the key.

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chern3/ci.hpp"
#include "chern3/dzero.hpp"
#include "chern3/moduli.hpp"
#include "chern3/sheaf.hpp"
#include "chern3/splitting.hpp"

namespace chern3::json_io {

using json = nlohmann::ordered_json;

/// Throws SchemaError for keys of `obj` outside `allowed`; `where` names the object.
void require_keys_subset(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where);
const json& require(const json& obj, std::string_view key, const std::string& where);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& where);
long long_from_json(const json& j, const std::string& where);

json div_to_json(const DivClass& d);
DivClass div_from_json(const json& j, const std::string& where);
json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const json& j, const std::string& where);

json threefold_to_json(const Threefold& X);
Threefold threefold_from_json(const json& j);

json preset_to_json(const CIPreset& p);
CIPreset preset_from_json(const json& j);

json chern_to_json(const ChernData& F);
/// Reads {"rank", "c1", "c2", "c3"}; c1/c2 default to zero, c3 to 0.
ChernData chern_from_json(const Threefold& X, const json& j, const std::string& where);

json ledger_to_json(const CohomologyLedger& l);
CohomologyLedger ledger_from_json(const json& j);

json moduli_to_json(const ModuliReport& r);
json dzero_to_json(const DZeroReport& r);
json claims_to_json(const PaperClaimsReport& r);
json tensor_report_to_json(const TensorVerifyReport& r);

}  // namespace chern3::json_io
