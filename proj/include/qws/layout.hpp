#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qws/codes.hpp"

namespace qws {

/// Straight-line plane embedding: per-qubit positions plus coupling edges.
struct Layout {
    std::vector<Vec2> positions;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
};

struct AccessibilityReport {
    uint32_t total = 0;
    std::vector<uint32_t> inaccessible;
    uint32_t accessible = 0;
};

/// One edge per unordered qubit pair sharing any two-qubit gate.
std::vector<std::pair<uint32_t, uint32_t>> connectivity_graph(const Circuit& c);

Layout layout_of(const CodeCircuit& code);

/// True iff no two edges cross except at shared endpoints.
bool embedding_is_planar(const Layout& l);

/// A qubit is accessible iff some ray from it to infinity crosses no
/// coupling edge (sampled at 1-degree steps plus rays aimed past every
/// segment endpoint; degenerate hits perturbed by 1e-6 rad).
/// Throws std::invalid_argument on a non-planar embedding.
AccessibilityReport accessibility(const Layout& l);

/// ((2d-3)^2, (2d-3)*(2d-5)) for odd d >= 3.
std::pair<uint64_t, uint64_t> formula_counts(uint32_t d);

std::string layout_svg(const Layout& l, const AccessibilityReport& rep);

} // namespace qws
