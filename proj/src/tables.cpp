#include "qws/tables.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qws {

int syndrome_value(int m1, int m2, int m3, int m4) { return m1 + 2 * m2 + 4 * m3 + 8 * m4; }

PauliString decode(const LookupTable& t, uint8_t s1, uint8_t s2) {
    auto it = t.rows.find({s1, s2});
    if (it == t.rows.end()) return PauliString(9);
    return it->second;
}

namespace {

LookupTable make_table(CheckType check, Parity parity,
                       std::initializer_list<std::tuple<int, int, const char*>> rows) {
    LookupTable t;
    t.check = check;
    t.parity = parity;
    for (const auto& [s1, s2, rec] : rows)
        t.rows[{static_cast<uint8_t>(s1), static_cast<uint8_t>(s2)}] = PauliString::parse(9, rec);
    return t;
}

} // namespace

LookupTable builtin_table(CheckType check, Parity parity) {
    // The published tables label the data qubit that sits in only the
    // right-boundary X check as "9"; in slot indexing that qubit is 0.
    if (check == CheckType::Z && parity == Parity::Odd)
        return make_table(check, parity,
                          {{1, 1, "X3"},
                           {2, 2, "X1"},
                           {0, 3, "X2"},
                           {1, 3, "X2"},
                           {3, 3, "X2"},
                           {4, 4, "X6"},
                           {1, 5, "X3X6"},
                           {0, 6, "X5"},
                           {2, 6, "X5"},
                           {6, 6, "X5"},
                           {8, 8, "X7"},
                           {2, 10, "X5X8"},
                           {1, 12, "X8"},
                           {4, 12, "X8"},
                           {12, 12, "X8"},
                           {0, 13, "X3X8"}});
    if (check == CheckType::Z && parity == Parity::Even)
        return make_table(check, parity,
                          {{1, 1, "X3"},
                           {2, 2, "X1"},
                           {0, 3, "X2"},
                           {2, 3, "X2"},
                           {4, 4, "X6"},
                           {4, 5, "X3X6"},
                           {0, 6, "X5"},
                           {4, 6, "X5"},
                           {8, 8, "X7"},
                           {8, 10, "X5X8"},
                           {0, 12, "X8"},
                           {8, 12, "X8"},
                           {12, 12, "X8"},
                           {12, 13, "X3X8"}});
    if (check == CheckType::X && parity == Parity::Odd)
        return make_table(check, parity,
                          {{1, 1, "Z1"},
                           {2, 2, "Z2"},
                           {1, 3, "Z1Z2"},
                           {4, 4, "Z7"},
                           {0, 5, "Z4"},
                           {1, 5, "Z4"},
                           {5, 5, "Z4"},
                           {0, 6, "Z5"},
                           {4, 6, "Z5"},
                           {6, 6, "Z5"},
                           {8, 8, "Z0"},
                           {0, 10, "Z6"},
                           {2, 10, "Z6"},
                           {10, 10, "Z6"},
                           {4, 12, "Z8Z0"}});
    return make_table(check, parity,
                      {{1, 1, "Z1"},
                       {2, 2, "Z2"},
                       {2, 3, "Z1Z2"},
                       {4, 4, "Z7"},
                       {0, 5, "Z4"},
                       {4, 5, "Z4"},
                       {0, 6, "Z5"},
                       {2, 6, "Z5"},
                       {8, 8, "Z0"},
                       {0, 10, "Z6"},
                       {8, 10, "Z6"},
                       {8, 12, "Z8Z0"}});
}

std::vector<PauliString> rotated_stabilizers() {
    std::vector<PauliString> gens;
    auto zface = [&](std::initializer_list<uint32_t> qs) {
        PauliString p(9);
        for (uint32_t q : qs) p.set_pauli(q, 2);
        gens.push_back(p);
    };
    auto xface = [&](std::initializer_list<uint32_t> qs) {
        PauliString p(9);
        for (uint32_t q : qs) p.set_pauli(q, 1);
        gens.push_back(p);
    };
    zface({2, 3});
    zface({1, 2, 4, 5});
    zface({5, 6, 8, 0});
    zface({7, 8});
    xface({1, 4});
    xface({2, 3, 5, 6});
    xface({4, 5, 7, 8});
    xface({6, 0});
    return gens;
}

PauliString rotated_logical_z() {
    PauliString p(9);
    for (uint32_t q : {1u, 4u, 7u}) p.set_pauli(q, 2);
    return p;
}

PauliString rotated_logical_x() {
    PauliString p(9);
    for (uint32_t q : {7u, 8u, 0u}) p.set_pauli(q, 1);
    return p;
}

bool logically_equivalent(const PauliString& a, const PauliString& b,
                          const std::vector<PauliString>& stabilizers) {
    if (a.num_qubits() != b.num_qubits()) return false;
    // Reduce a*b over the stabilizer masks (signs are irrelevant: recovery
    // operators are applied as Paulis, a global sign has no effect).
    PauliString d = a * b;
    std::vector<PauliString> work = stabilizers;
    uint32_t n = a.num_qubits();
    uint32_t row = 0;
    for (uint32_t q = 0; q < n && row < work.size(); ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            auto has = [&](const PauliString& s) { return bit == 0 ? s.x_bit(q) : s.z_bit(q); };
            uint32_t piv = row;
            while (piv < work.size() && !has(work[piv])) ++piv;
            if (piv == work.size()) continue;
            std::swap(work[row], work[piv]);
            for (uint32_t j = 0; j < work.size(); ++j)
                if (j != row && has(work[j])) work[j] = work[j] * work[row];
            if (has(d)) d = d * work[row];
            ++row;
        }
    }
    return d.weight() == 0;
}

std::string table_to_csv(const LookupTable& t) {
    std::ostringstream out;
    out << "s1,s2,recovery\n";
    for (const auto& [key, rec] : t.rows)
        out << static_cast<int>(key.first) << "," << static_cast<int>(key.second) << ","
            << rec.str() << "\n";
    return out.str();
}

LookupTable table_from_csv(const std::string& csv, CheckType check, Parity parity) {
    LookupTable t;
    t.check = check;
    t.parity = parity;
    std::istringstream in(csv);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("s1,", 0) == 0) continue;
        }
        std::istringstream ls(line);
        std::string a, b, rec;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, rec))
            throw std::invalid_argument("table_from_csv: malformed row '" + line + "'");
        t.rows[{static_cast<uint8_t>(std::stoi(a)), static_cast<uint8_t>(std::stoi(b))}] =
            PauliString::parse(9, rec);
    }
    return t;
}

std::string diff_tables_json(const LookupTable& builtin, const GeneratedTable& generated) {
    nlohmann::json j;
    j["check"] = check_name(builtin.check);
    j["parity"] = builtin.parity == Parity::Odd ? "odd" : "even";
    auto stabs = rotated_stabilizers();
    int match = 0, equivalent = 0, mismatch = 0, missing = 0, extra = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, rec] : builtin.rows) {
        nlohmann::json row;
        row["s1"] = key.first;
        row["s2"] = key.second;
        row["published"] = rec.str();
        auto it = generated.table.rows.find(key);
        if (it == generated.table.rows.end()) {
            row["status"] = "missing-in-generated";
            ++missing;
        } else {
            row["generated"] = it->second.str();
            if (it->second == rec) {
                row["status"] = "match";
                ++match;
            } else if (logically_equivalent(it->second, rec, stabs)) {
                row["status"] = "logical-equivalent";
                ++equivalent;
            } else {
                row["status"] = "mismatch";
                ++mismatch;
            }
        }
        rows.push_back(std::move(row));
    }
    for (const auto& [key, rec] : generated.table.rows) {
        if (builtin.rows.count(key)) continue;
        nlohmann::json row;
        row["s1"] = key.first;
        row["s2"] = key.second;
        row["generated"] = rec.str();
        row["status"] = "extra-in-generated";
        ++extra;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["summary"] = {{"match", match},
                    {"logical_equivalent", equivalent},
                    {"mismatch", mismatch},
                    {"missing_in_generated", missing},
                    {"extra_in_generated", extra},
                    {"conflicts", generated.conflicts.size()}};
    nlohmann::json confs = nlohmann::json::array();
    for (const auto& c : generated.conflicts)
        confs.push_back({{"s1", c.s1}, {"s2", c.s2}, {"kept", c.kept}, {"dropped", c.dropped}});
    j["conflicts"] = std::move(confs);
    return j.dump(2);
}

} // namespace qws
