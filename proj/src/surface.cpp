#include "qws/codes.hpp"

#include <stdexcept>

namespace qws {

namespace {

enum Dir { N = 0, W = 1, E = 2, S = 3 };

struct GridSpec {
    uint32_t d;
    uint32_t side;
    uint32_t idx(uint32_t r, uint32_t c) const { return r * side + c; }
    bool is_data(uint32_t r, uint32_t c) const { return ((r + c) & 1) == 0; }
    bool is_zanc(uint32_t r, uint32_t c) const { return ((r + c) & 1) == 1 && (r & 1) == 1; }
};

int neighbor(const GridSpec& g, uint32_t r, uint32_t c, Dir dir, uint32_t* nr, uint32_t* nc) {
    int rr = static_cast<int>(r), cc = static_cast<int>(c);
    switch (dir) {
        case N: rr -= 1; break;
        case S: rr += 1; break;
        case W: cc -= 1; break;
        case E: cc += 1; break;
    }
    if (rr < 0 || cc < 0 || rr >= static_cast<int>(g.side) || cc >= static_cast<int>(g.side)) return 0;
    *nr = static_cast<uint32_t>(rr);
    *nc = static_cast<uint32_t>(cc);
    return 1;
}

} // namespace

CodeCircuit build_surface_standard(uint32_t d, Variant variant) {
    if (d != 3 && d != 5 && d != 7)
        throw std::invalid_argument("build_surface_standard: d must be 3, 5 or 7");
    GridSpec g{d, 2 * d - 1};
    uint32_t n = g.side * g.side;

    std::vector<RoleTag> tags(n, RoleTag::Data);
    CodeCircuit code;
    code.family = "surface-standard";
    code.variant = variant;
    code.positions.resize(n);

    // Four compass steps; Z checks sweep (N, W, E, S), X checks (N, E, W, S).
    // Each step pairs a vertical Z direction with a vertical X direction
    // (or horizontal with horizontal), which keeps the moments disjoint.
    const Dir zorder[4] = {N, W, E, S};
    const Dir xorder[4] = {N, E, W, S};

    for (uint32_t r = 0; r < g.side; ++r) {
        for (uint32_t c = 0; c < g.side; ++c) {
            uint32_t p = g.idx(r, c);
            code.positions[p] = {static_cast<double>(c), static_cast<double>(r)};
            if (g.is_data(r, c)) {
                code.data_slots.push_back(p);
                continue;
            }
            tags[p] = RoleTag::Syndrome;
            Face f;
            f.type = g.is_zanc(r, c) ? CheckType::Z : CheckType::X;
            f.anc = p;
            const Dir* order = f.type == CheckType::Z ? zorder : xorder;
            for (int s = 0; s < 4; ++s) {
                uint32_t nr, nc;
                if (!neighbor(g, r, c, order[s], &nr, &nc)) continue;
                f.slots.push_back(g.idx(nr, nc));
                f.steps.push_back(s);
            }
            code.faces.push_back(std::move(f));
        }
    }

    code.circuit = Circuit(n, tags);
    append_check_rounds(code.circuit, code.faces, 4, variant);

    // Logical Z along the top data row, logical X down the left column.
    PauliString lz(n), lx(n);
    for (uint32_t c = 0; c < g.side; c += 2) lz.set_pauli(g.idx(0, c), 2);
    for (uint32_t r = 0; r < g.side; r += 2) lx.set_pauli(g.idx(r, 0), 1);
    code.logical_z = lz;
    code.logical_x = lx;
    return code;
}

} // namespace qws
