#pragma once

#include "msd/diagram.hpp"

namespace msd {

struct RemapResult {
    CombinatorialMap map;
    std::vector<int> remap;  // old dart -> new dart, -1 when deleted
};

// Remove whole edges (all their darts); vertices left dartless disappear.
// Curves must not use the removed edges.
inline RemapResult remove_edges(const CombinatorialMap& m, const std::vector<int>& edges) {
    std::vector<char> kill(m.dart_count(), 0);
    std::vector<char> kill_edge(m.edge_count(), 0);
    for (int e : edges) kill_edge[e] = 1;
    for (int d = 0; d < m.dart_count(); ++d)
        if (kill_edge[m.edge_of(d)]) kill[d] = 1;
    RemapResult out;
    out.remap.assign(m.dart_count(), -1);
    int nn = 0;
    for (int d = 0; d < m.dart_count(); ++d)
        if (!kill[d]) out.remap[d] = nn++;
    std::vector<int> alpha(nn), rot(nn);
    for (int d = 0; d < m.dart_count(); ++d) {
        if (kill[d]) continue;
        require(!kill[m.alpha[d]], "BadSurgery", "edge removal out of sync");
        alpha[out.remap[d]] = out.remap[m.alpha[d]];
        int y = m.rot[d];
        while (kill[y]) {
            y = m.rot[y];
            require(y != d, "BadSurgery", "vertex left without darts unexpectedly");
        }
        rot[out.remap[d]] = out.remap[y];
    }
    out.map = CombinatorialMap(std::move(alpha), std::move(rot));
    return out;
}

// Merge the two edges at a degree-2 vertex into one (inverse of edge
// subdivision). Curves passing through lose the second dart of the pair.
inline RemapResult dissolve_vertex_at(const CombinatorialMap& m, int dart_at_v) {
    int x = dart_at_v, y = m.rot[x];
    require(m.rot[y] == x && x != y, "BadSurgery", "dissolve needs a degree-2 vertex");
    require(m.edge_of(x) != m.edge_of(y), "BadSurgery", "dissolve needs two distinct edges");
    int xp = m.alpha[x], yp = m.alpha[y];
    RemapResult out;
    out.remap.assign(m.dart_count(), -1);
    int nn = 0;
    for (int d = 0; d < m.dart_count(); ++d)
        if (d != x && d != y) out.remap[d] = nn++;
    std::vector<int> alpha(nn), rot(nn);
    for (int d = 0; d < m.dart_count(); ++d) {
        if (out.remap[d] < 0) continue;
        int a = m.alpha[d];
        if (d == xp)
            a = yp;
        else if (d == yp)
            a = xp;
        alpha[out.remap[d]] = out.remap[a];
        int r = m.rot[d];
        require(r != x && r != y, "BadSurgery", "unexpected rot into dissolved vertex");
        rot[out.remap[d]] = out.remap[r];
    }
    out.map = CombinatorialMap(std::move(alpha), std::move(rot));
    return out;
}

inline Curve remap_curve(const Curve& c, const std::vector<int>& remap) {
    Curve out;
    for (int d : c.walk)
        if (remap[d] >= 0) out.walk.push_back(remap[d]);
    return out;
}

inline void remap_families(std::vector<std::vector<Curve>>& fams, const std::vector<int>& remap) {
    for (auto& fam : fams)
        for (auto& c : fam) c = remap_curve(c, remap);
}

// A face is a removable pendant bigon when it has exactly two darts on two
// distinct curve-free parallel edges, its far endpoint has degree 2, its
// near endpoint keeps darts after removal, and both outer sides lie on one
// face. Collapsing it undoes a pendant-bigon refinement.
inline bool bigon_collapsible(const CombinatorialMap& m, int face,
                              const std::vector<char>& edge_on_curve) {
    if (m.face_size(face) != 2) return false;
    auto cyc = m.face_cycle(face);
    int a = cyc[0], b = cyc[1];
    if (m.edge_of(a) == m.edge_of(b)) return false;
    if (edge_on_curve[m.edge_of(a)] || edge_on_curve[m.edge_of(b)]) return false;
    int va = m.vertex_of(a), vb = m.vertex_of(b);
    if (va == vb) return false;
    int deg_a = static_cast<int>(m.vertex_darts(va).size());
    int deg_b = static_cast<int>(m.vertex_darts(vb).size());
    bool far_a = deg_a == 2, far_b = deg_b == 2;
    if (!far_a && !far_b) return false;
    if (far_a && far_b) return false;  // terminal sphere, keep it
    int near_deg = far_a ? deg_b : deg_a;
    if (near_deg < 3) return false;
    return m.face_of(m.alpha[a]) == m.face_of(m.alpha[b]);
}

inline std::vector<char> curve_edge_mask(const CombinatorialMap& m,
                                         const std::vector<std::vector<Curve>>& fams) {
    std::vector<char> mask(m.edge_count(), 0);
    for (const auto& fam : fams)
        for (const auto& c : fam)
            for (int d : c.walk) mask[m.edge_of(d)] = 1;
    return mask;
}

}  // namespace msd
