#include "incidence/serialize.hpp"

#include <stdexcept>

namespace incidence {

namespace {

long long coeff_to_int64(const Int& c) {
    if (!c.fits_slong_p())
        throw std::domain_error("serialize: coefficient exceeds 64-bit range");
    return c.get_si();
}

}  // namespace

nlohmann::json to_json(const SymLaurent& f) {
    nlohmann::json terms = nlohmann::json::array();
    // std::map iterates ascending lex; the schema wants descending.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({{"lambda", it->first}, {"coeff", coeff_to_int64(it->second)}});
    return {{"n", f.vars()}, {"terms", std::move(terms)}};
}

SymLaurent symlaurent_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<Exponents, Int>> raw;
    for (const auto& t : j.at("terms"))
        raw.emplace_back(t.at("lambda").get<Exponents>(),
                         Int(t.at("coeff").get<long>()));
    return SymLaurent::canonicalize(n, std::move(raw));
}

nlohmann::json to_json(const SplitType& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, m] : s.summands())
        arr.push_back({{"u", std::get<0>(k)},
                       {"v", std::get<1>(k)},
                       {"i", std::get<2>(k)},
                       {"mult", m}});
    return {{"summands", std::move(arr)}};
}

SplitType splittype_from_json(const nlohmann::json& j) {
    SplitType s;
    for (const auto& t : j.at("summands"))
        s.add(t.at("u").get<long>(), t.at("v").get<long>(), t.at("i").get<long>(),
              t.at("mult").get<long>());
    return s;
}

nlohmann::json to_json(const BiChar& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : b.terms())
        arr.push_back({{"u", k.first}, {"v", k.second}, {"coeff", c}});
    return {{"terms", std::move(arr)}};
}

BiChar bichar_from_json(const nlohmann::json& j) {
    BiChar b;
    for (const auto& t : j.at("terms"))
        b.add_term(t.at("u").get<long>(), t.at("v").get<long>(),
                   t.at("coeff").get<long long>());
    return b;
}

nlohmann::json to_json(const HMClass& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, m] : h.summands)
        arr.push_back({{"c", k.first}, {"j", k.second}, {"mult", m}});
    return {{"summands", std::move(arr)}, {"dim", h.total_dimension()}};
}

HMClass hmclass_from_json(const nlohmann::json& j) {
    HMClass h;
    for (const auto& t : j.at("summands"))
        h.add(t.at("c").get<long>(), t.at("j").get<long>(), t.at("mult").get<long>());
    return h;
}

nlohmann::json to_json(const WlpResult& r) {
    nlohmann::json out = {{"wlp", r.wlp}};
    if (r.witness_q) out["witness"] = {{"q", *r.witness_q}};
    else if (r.witness_monomial) out["witness"] = {{"monomial", *r.witness_monomial}};
    return out;
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters,
                             nlohmann::json result, long elapsed_ms) {
    return {{"command", command},
            {"parameters", std::move(parameters)},
            {"result", std::move(result)},
            {"version", kEngineVersion},
            {"elapsed_ms", elapsed_ms}};
}

}  // namespace incidence
