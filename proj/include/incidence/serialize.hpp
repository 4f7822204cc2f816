#pragma once

#include <string>

#include <json.hpp>

#include "incidence/hanmonsky.hpp"
#include "incidence/lefschetz.hpp"
#include "incidence/pparts.hpp"
#include "incidence/symfunc.hpp"

namespace incidence {

inline constexpr const char* kEngineVersion = "incidence 0.1.0";

/// {"n": int, "terms": [{"lambda": [ints], "coeff": int}]},
/// terms sorted lexicographically descending by lambda.
nlohmann::json to_json(const SymLaurent& f);
SymLaurent symlaurent_from_json(const nlohmann::json& j);

/// {"summands": [{"u":, "v":, "i":, "mult":}]} sorted lexicographically.
nlohmann::json to_json(const SplitType& s);
SplitType splittype_from_json(const nlohmann::json& j);

/// {"terms": [{"u":, "v":, "coeff":}]} sorted lexicographically.
nlohmann::json to_json(const BiChar& b);
BiChar bichar_from_json(const nlohmann::json& j);

/// {"summands": [{"c":, "j":, "mult":}], "dim": int}.
nlohmann::json to_json(const HMClass& h);
HMClass hmclass_from_json(const nlohmann::json& j);

/// {"wlp": bool, "witness": {"q": int} | {"monomial": [ints]}} (witness only
/// when the method produced one).
nlohmann::json to_json(const WlpResult& r);

/// {"command":, "parameters":, "result":, "version":, "elapsed_ms":}.
/// Deterministic except for the timing field.
nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json result, long elapsed_ms);

}  // namespace incidence
