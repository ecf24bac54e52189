#include "qws/layout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qws {

namespace {

constexpr double kEps = 1e-9;

struct Seg {
    double ax, ay, bx, by;
};

// Does the ray from (ox,oy) in direction (dx,dy) strictly cross segment s?
// Returns: 0 = no hit, 1 = proper crossing, 2 = degenerate (endpoint or
// collinear graze; caller should perturb the angle and retry).
int ray_hits(double ox, double oy, double dx, double dy, const Seg& s) {
    double ex = s.bx - s.ax, ey = s.by - s.ay;
    double denom = dx * ey - dy * ex;
    double qx = s.ax - ox, qy = s.ay - oy;
    if (std::abs(denom) < kEps) {
        // Parallel; collinear overlap counts as degenerate.
        double cross = qx * dy - qy * dx;
        if (std::abs(cross) < kEps) {
            double t0 = (qx * dx + qy * dy);
            double t1 = ((s.bx - ox) * dx + (s.by - oy) * dy);
            if (t0 > kEps || t1 > kEps) return 2;
        }
        return 0;
    }
    double t = (qx * ey - qy * ex) / denom; // along ray
    double u = (qx * dy - qy * dx) / denom; // along segment
    if (t < -kEps) return 0;
    if (u < -kEps || u > 1 + kEps) return 0;
    if (t < kEps) return 2; // ray starts on the segment
    if (u < kEps || u > 1 - kEps) return 2;
    return 1;
}

} // namespace

std::vector<std::pair<uint32_t, uint32_t>> connectivity_graph(const Circuit& c) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const auto& m : c.moments()) {
        for (const auto& op : m.ops) {
            if (!is_two_qubit(op.kind)) continue;
            uint32_t a = static_cast<uint32_t>(std::min(op.q0, op.q1));
            uint32_t b = static_cast<uint32_t>(std::max(op.q0, op.q1));
            if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) == edges.end())
                edges.push_back({a, b});
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

Layout layout_of(const CodeCircuit& code) {
    Layout l;
    l.positions = code.positions;
    l.edges = connectivity_graph(code.circuit);
    return l;
}

bool embedding_is_planar(const Layout& l) {
    auto seg = [&](const std::pair<uint32_t, uint32_t>& e) {
        return Seg{l.positions[e.first].x, l.positions[e.first].y, l.positions[e.second].x,
                   l.positions[e.second].y};
    };
    for (size_t i = 0; i < l.edges.size(); ++i) {
        for (size_t j = i + 1; j < l.edges.size(); ++j) {
            const auto& e1 = l.edges[i];
            const auto& e2 = l.edges[j];
            if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
                e1.second == e2.second)
                continue; // shared endpoint allowed
            Seg s1 = seg(e1), s2 = seg(e2);
            // Proper segment intersection test via orientations.
            auto orient = [](double ax, double ay, double bx, double by, double cx, double cy) {
                double v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
                if (v > kEps) return 1;
                if (v < -kEps) return -1;
                return 0;
            };
            int o1 = orient(s1.ax, s1.ay, s1.bx, s1.by, s2.ax, s2.ay);
            int o2 = orient(s1.ax, s1.ay, s1.bx, s1.by, s2.bx, s2.by);
            int o3 = orient(s2.ax, s2.ay, s2.bx, s2.by, s1.ax, s1.ay);
            int o4 = orient(s2.ax, s2.ay, s2.bx, s2.by, s1.bx, s1.by);
            if (o1 * o2 < 0 && o3 * o4 < 0) return false;
            // Collinear overlap of distinct edges counts as a crossing.
            if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
                double lox = std::max(std::min(s1.ax, s1.bx), std::min(s2.ax, s2.bx));
                double hix = std::min(std::max(s1.ax, s1.bx), std::max(s2.ax, s2.bx));
                double loy = std::max(std::min(s1.ay, s1.by), std::min(s2.ay, s2.by));
                double hiy = std::min(std::max(s1.ay, s1.by), std::max(s2.ay, s2.by));
                if (lox < hix - kEps || loy < hiy - kEps) return false;
            }
        }
    }
    return true;
}

AccessibilityReport accessibility(const Layout& l) {
    if (!embedding_is_planar(l))
        throw std::invalid_argument("accessibility: embedding is not planar");
    AccessibilityReport rep;
    rep.total = static_cast<uint32_t>(l.positions.size());

    std::vector<Seg> segs;
    for (const auto& e : l.edges)
        segs.push_back({l.positions[e.first].x, l.positions[e.first].y, l.positions[e.second].x,
                        l.positions[e.second].y});

    const double pi = std::acos(-1.0);
    for (uint32_t q = 0; q < rep.total; ++q) {
        double ox = l.positions[q].x, oy = l.positions[q].y;

        // Candidate directions: 360 one-degree steps plus rays aimed at
        // every segment endpoint (the tightest gaps pass next to
        // endpoints).
        std::vector<double> angles;
        for (int d = 0; d < 360; ++d) angles.push_back(d * pi / 180.0);
        for (const auto& s : segs) {
            angles.push_back(std::atan2(s.ay - oy, s.ax - ox));
            angles.push_back(std::atan2(s.by - oy, s.bx - ox));
        }

        bool found = false;
        for (double base : angles) {
            for (int pert = 0; pert < 4 && !found; ++pert) {
                // Resolve degenerate hits by nudging the angle.
                static const double nudge[4] = {0.0, 1e-6, -1e-6, 3e-6};
                double a = base + nudge[pert];
                double dx = std::cos(a), dy = std::sin(a);
                bool clear = true;
                bool degenerate = false;
                for (const auto& s : segs) {
                    // A qubit's own incident edges never block it: the ray
                    // starts at their endpoint, which reads as degenerate,
                    // so nudging handles that case too.
                    bool incident = (std::abs(s.ax - ox) < kEps && std::abs(s.ay - oy) < kEps) ||
                                    (std::abs(s.bx - ox) < kEps && std::abs(s.by - oy) < kEps);
                    int h = ray_hits(ox, oy, dx, dy, s);
                    if (h == 1 && !incident) {
                        clear = false;
                        break;
                    }
                    if (h == 2) {
                        if (incident) continue;
                        degenerate = true;
                        break;
                    }
                }
                if (clear && !degenerate) found = true;
                if (!clear) break; // proper block: try next base angle
            }
            if (found) break;
        }
        if (!found) rep.inaccessible.push_back(q);
    }
    rep.accessible = rep.total - static_cast<uint32_t>(rep.inaccessible.size());
    return rep;
}

std::pair<uint64_t, uint64_t> formula_counts(uint32_t d) {
    if (d < 3 || (d % 2) == 0) throw std::invalid_argument("formula_counts: d must be odd, >= 3");
    uint64_t a = 2ULL * d - 3, b = 2ULL * d - 5;
    return {a * a, a * b};
}

std::string layout_svg(const Layout& l, const AccessibilityReport& rep) {
    double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
    for (const auto& p : l.positions) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double scale = 48, margin = 40;
    auto X = [&](double x) { return margin + (x - minx) * scale; };
    auto Y = [&](double y) { return margin + (y - miny) * scale; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << X(maxx) + margin << "\" height=\"" << Y(maxy) + margin << "\">\n";
    for (const auto& e : l.edges) {
        out << "  <line x1=\"" << X(l.positions[e.first].x) << "\" y1=\"" << Y(l.positions[e.first].y)
            << "\" x2=\"" << X(l.positions[e.second].x) << "\" y2=\"" << Y(l.positions[e.second].y)
            << "\" stroke=\"#555\" stroke-width=\"2\"/>\n";
    }
    for (uint32_t q = 0; q < l.positions.size(); ++q) {
        bool blocked =
            std::find(rep.inaccessible.begin(), rep.inaccessible.end(), q) != rep.inaccessible.end();
        out << "  <circle cx=\"" << X(l.positions[q].x) << "\" cy=\"" << Y(l.positions[q].y)
            << "\" r=\"10\" fill=\"" << (blocked ? "#d33" : "#fff") << "\" stroke=\"#000\"/>\n";
        out << "  <text x=\"" << X(l.positions[q].x) << "\" y=\"" << Y(l.positions[q].y) + 4
            << "\" font-size=\"9\" text-anchor=\"middle\">" << q << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace qws
