#include "statel/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

#include "statel/errors.hpp"

namespace statel {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json model_to_json(const Interpretation& i) {
    ordered_json out;
    out["domain"] = i.domain_size();

    std::map<std::string, const ElementSet*> concepts;
    for (const auto& [name, members] : i.concepts()) concepts[name.text()] = &members;
    ordered_json jc = ordered_json::object();
    for (const auto& [name, members] : concepts) {
        ordered_json arr = ordered_json::array();
        for (auto d = members->find_first(); d != ElementSet::npos; d = members->find_next(d))
            arr.push_back(static_cast<std::uint32_t>(d));
        jc[name] = std::move(arr);
    }
    out["concepts"] = std::move(jc);

    std::map<std::string, const RoleGraph*> roles;
    for (const auto& [name, graph] : i.roles()) roles[name.text()] = &graph;
    ordered_json jr = ordered_json::object();
    for (const auto& [name, graph] : roles) {
        ordered_json arr = ordered_json::array();
        for (std::uint32_t d = 0; d < graph->succ.size(); ++d)
            for (auto e = graph->succ[d].find_first(); e != ElementSet::npos;
                 e = graph->succ[d].find_next(e))
                arr.push_back(ordered_json::array({d, static_cast<std::uint32_t>(e)}));
        jr[name] = std::move(arr);
    }
    out["roles"] = std::move(jr);
    return out;
}

std::string render_model(const Interpretation& i) {
    return model_to_json(i).dump();
}

Interpretation model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("domain") || !j["domain"].is_number_unsigned())
        throw ParseError({}, "model JSON must be an object with a positive \"domain\"");
    std::uint64_t n = j["domain"].get<std::uint64_t>();
    if (n == 0) throw ParseError({}, "model domain must be non-empty");

    Interpretation out(static_cast<std::uint32_t>(n));
    if (j.contains("concepts")) {
        if (!j["concepts"].is_object()) throw ParseError({}, "\"concepts\" must be an object");
        for (auto it = j["concepts"].begin(); it != j["concepts"].end(); ++it) {
            ElementSet members(static_cast<std::uint32_t>(n));
            for (const auto& idx : it.value()) {
                if (!idx.is_number_unsigned() || idx.get<std::uint64_t>() >= n)
                    throw ParseError({}, "concept '" + it.key() + "': index out of domain");
                members.set(idx.get<std::uint32_t>());
            }
            out.set_concept(Symbol::intern(it.key()), std::move(members));
        }
    }
    if (j.contains("roles")) {
        if (!j["roles"].is_object()) throw ParseError({}, "\"roles\" must be an object");
        for (auto it = j["roles"].begin(); it != j["roles"].end(); ++it) {
            Symbol role = Symbol::intern(it.key());
            out.ensure_role(role);
            for (const auto& pair : it.value()) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                    !pair[1].is_number_unsigned() || pair[0].get<std::uint64_t>() >= n ||
                    pair[1].get<std::uint64_t>() >= n)
                    throw ParseError({}, "role '" + it.key() + "': malformed edge");
                out.add_edge(role, pair[0].get<std::uint32_t>(), pair[1].get<std::uint32_t>());
            }
        }
    }
    return out;
}

Interpretation parse_model(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError({}, "malformed model JSON");
    return model_from_json(j);
}

}  // namespace statel
