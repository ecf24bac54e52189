#include "qws/json_io.hpp"

#include <json.hpp>

#include "qws/layout.hpp"

namespace qws {

using nlohmann::json;

namespace {

json circuit_json(const Circuit& c) {
    json j;
    j["n"] = c.num_qubits();
    json moments = json::array();
    for (const auto& m : c.moments()) {
        json ops = json::array();
        for (const auto& op : m.ops) {
            json o;
            o["kind"] = gate_name(op.kind);
            if (op.q1 >= 0)
                o["qubits"] = {op.q0, op.q1};
            else
                o["qubits"] = {op.q0};
            ops.push_back(std::move(o));
        }
        moments.push_back(std::move(ops));
    }
    j["moments"] = std::move(moments);
    json roles = json::array();
    for (uint32_t b = 0; b < c.num_boundaries(); ++b) {
        json row = json::array();
        for (uint32_t p = 0; p < c.num_qubits(); ++p) row.push_back(role_name(c.tag_at(b, p)));
        roles.push_back(std::move(row));
    }
    j["roles"] = std::move(roles);
    json tags = json::array();
    for (RoleTag t : c.initial_tags()) tags.push_back(role_name(t));
    j["initial_roles"] = std::move(tags);
    j["initial_positions"] = c.entity_at(0);
    return j;
}

} // namespace

std::string circuit_to_json(const Circuit& c) { return circuit_json(c).dump(2); }

std::string code_circuit_to_json(const CodeCircuit& code) {
    json j = circuit_json(code.circuit);
    j["family"] = code.family;
    j["variant"] = variant_name(code.variant);
    if (code.logical_z) j["logicals"]["z"] = code.logical_z->str();
    if (code.logical_x) j["logicals"]["x"] = code.logical_x->str();
    json pos = json::array();
    for (const auto& p : code.positions) pos.push_back({p.x, p.y});
    j["layout"]["positions"] = std::move(pos);
    json edges = json::array();
    for (const auto& e : connectivity_graph(code.circuit)) edges.push_back({e.first, e.second});
    j["layout"]["edges"] = std::move(edges);
    return j.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
    json j = json::parse(text);
    uint32_t n = j.at("n").get<uint32_t>();
    std::vector<RoleTag> tags(n, RoleTag::Data);
    if (j.contains("initial_roles")) {
        auto names = j["initial_roles"].get<std::vector<std::string>>();
        if (names.size() != n) throw std::invalid_argument("circuit_from_json: bad initial_roles");
        for (uint32_t q = 0; q < n; ++q) tags[q] = role_from_name(names[q]);
    }
    Circuit c(n, tags);
    if (j.contains("initial_positions")) {
        c.set_initial_positions(j["initial_positions"].get<std::vector<uint32_t>>());
    }
    for (const auto& jm : j.at("moments")) {
        Moment m;
        for (const auto& jo : jm) {
            GateKind k = gate_from_name(jo.at("kind").get<std::string>());
            auto qs = jo.at("qubits").get<std::vector<int>>();
            if (qs.size() == 1)
                m.ops.push_back(GateOp(k, qs[0]));
            else if (qs.size() == 2)
                m.ops.push_back(GateOp(k, qs[0], qs[1]));
            else
                throw std::invalid_argument("circuit_from_json: bad qubit list");
        }
        c.append(std::move(m));
    }
    return c;
}

} // namespace qws
