#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qws/gate.hpp"

namespace qws {

enum class RoleTag : uint8_t { Data, Syndrome, Ancilla };

const char* role_name(RoleTag t);
RoleTag role_from_name(const std::string& s);

/// Set of gate operations with pairwise disjoint supports.
struct Moment {
    std::vector<GateOp> ops;

    bool disjoint() const;
    bool touches(int q) const;
};

/// Ordered list of moments plus work-sharing bookkeeping.
///
/// Each physical qubit initially carries an "entity" (a data, syndrome or
/// ancilla role, identified by its starting position). Gates with a SWAP
/// component migrate entities; the circuit records, for every moment
/// boundary, which entity sits on which physical qubit.
class Circuit {
  public:
    Circuit() = default;
    Circuit(uint32_t n, std::vector<RoleTag> initial_tags);
    explicit Circuit(uint32_t n);

    uint32_t num_qubits() const { return n_; }
    const std::vector<Moment>& moments() const { return moments_; }
    const std::vector<RoleTag>& initial_tags() const { return tags_; }

    void append(Moment m);
    void append_gate(const GateOp& g) { append(Moment{{g}}); }

    /// Start from a non-identity arrangement (e.g. an X-check that runs
    /// after a Z-check left entities permuted).
    void set_initial_positions(std::vector<uint32_t> entity_at_pos);

    /// entity_at_pos / pos_of_entity at moment boundary k (0 = before the
    /// first moment, moments().size() = after the last).
    const std::vector<uint32_t>& entity_at(uint32_t boundary) const;
    std::vector<uint32_t> pos_of_entity(uint32_t boundary) const;
    RoleTag tag_at(uint32_t boundary, uint32_t pos) const;

    const std::vector<uint32_t>& final_entity_at() const { return entity_at(num_boundaries() - 1); }
    uint32_t num_boundaries() const { return static_cast<uint32_t>(moments_.size()) + 1; }

    bool contains_measurement() const;

    bool operator==(const Circuit& other) const;

  private:
    uint32_t n_ = 0;
    std::vector<Moment> moments_;
    std::vector<RoleTag> tags_;                     // by entity id
    std::vector<std::vector<uint32_t>> boundaries_; // entity_at_pos per boundary
};

/// Moments in reverse order with every two-qubit gate's direction
/// reversed; for CNOT+SWAP circuits this is exactly the inverse circuit.
/// Starts from c's final arrangement so roles migrate back. Rejects
/// circuits containing measurement moments.
Circuit reverse_schedule(const Circuit& c);

} // namespace qws
