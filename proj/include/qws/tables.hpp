#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qws/codes.hpp"
#include "qws/pauli.hpp"

namespace qws {

/// Two-round syndrome lookup table for the rotated distance-3 code.
/// Recoveries are Paulis over the nine data slots; keys absent from the
/// table decode to identity.
struct LookupTable {
    CheckType check = CheckType::Z;
    Parity parity = Parity::Odd;
    std::map<std::pair<uint8_t, uint8_t>, PauliString> rows;
};

/// m1 + 2 m2 + 4 m3 + 8 m4.
int syndrome_value(int m1, int m2, int m3, int m4);

/// The table's recovery if the key exists; identity otherwise.
PauliString decode(const LookupTable& t, uint8_t s1, uint8_t s2);

/// Verbatim transcription of the published lookup tables.
LookupTable builtin_table(CheckType check, Parity parity);

struct TableConflict {
    uint8_t s1, s2;
    std::string kept, dropped; // logically inequivalent residuals
};

struct GeneratedTable {
    LookupTable table;
    std::vector<TableConflict> conflicts;
};

/// Exhaustive single-fault enumeration over one (parity-matched) round
/// pair of the rotated code; every fault's two-round signature is mapped
/// to its residual data error. Signatures whose residuals disagree in
/// logical class are reported, not silently resolved.
GeneratedTable generate_table_bruteforce(bool cut, CheckType check, Parity parity);

std::string table_to_csv(const LookupTable& t);
LookupTable table_from_csv(const std::string& csv, CheckType check, Parity parity);

/// Machine-readable comparison of a generated table against the built-in
/// one: per-row status match / logical-equivalent / mismatch / missing /
/// extra.
std::string diff_tables_json(const LookupTable& builtin, const GeneratedTable& generated);

/// True iff a*b is a product of the given stabilizer generators (i.e. the
/// recoveries act identically on the code space).
bool logically_equivalent(const PauliString& a, const PauliString& b,
                          const std::vector<PauliString>& stabilizers);

/// The rotated code's stabilizers / logicals over the nine data slots.
std::vector<PauliString> rotated_stabilizers();
PauliString rotated_logical_z();
PauliString rotated_logical_x();

} // namespace qws
