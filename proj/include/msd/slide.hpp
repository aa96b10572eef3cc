#pragma once

#include "msd/moves.hpp"
#include "msd/router.hpp"

namespace msd {

namespace detail {

// darts strictly between `from` and `to` in rot order at their common vertex
inline std::vector<int> rot_arc(const CombinatorialMap& m, int from, int to) {
    std::vector<int> out;
    int x = m.rot[from];
    while (x != to) {
        out.push_back(x);
        x = m.rot[x];
        require(x != from, "BadSurgery", "rot arc wrapped");
    }
    return out;
}

}  // namespace detail

// Replace `curve` of family `fam` by its band sum with `over` along `band`
// (an embedded dart path from a vertex of `curve` to a vertex of `over`).
// The slid curve is rebuilt as a pushed-off detour running around the band
// and the over-curve, so the family stays disjoint.
inline MultisectionDiagram handleslide(const MultisectionDiagram& d, int fam, int curve_idx,
                                       int over_idx, std::vector<int> band) {
    require(fam >= 0 && fam < d.n, "NotSameFamily", "family out of range");
    require(curve_idx != over_idx, "NotSameFamily", "cannot slide a curve over itself");
    require(curve_idx >= 0 && curve_idx < (int)d.families[fam].size() && over_idx >= 0 &&
                over_idx < (int)d.families[fam].size(),
            "NotSameFamily", "curve index out of range");

    MultisectionDiagram out = d;
    CombinatorialMap& m = out.map;
    Curve c = out.families[fam][curve_idx];
    const Curve& over = out.families[fam][over_idx];
    require(disjoint(m, c, over), "CurvesIntersect", "slide needs disjoint curves");

    // vet the band
    require(!band.empty(), "BandBlocked", "empty band");
    std::vector<char> fam_vertex(m.vertex_count(), 0);
    for (const auto& fc : out.families[fam])
        for (int dart : fc.walk) fam_vertex[m.vertex_of(dart)] = 1;
    std::vector<char> fam_edge(m.edge_count(), 0);
    for (const auto& fc : out.families[fam])
        for (int dart : fc.walk) fam_edge[m.edge_of(dart)] = 1;
    {
        auto cv = c.vertices(m);
        auto ov = over.vertices(m);
        int u = m.vertex_of(band.front());
        int v = m.head(band.back());
        require(std::binary_search(cv.begin(), cv.end(), u), "BandBlocked",
                "band must start on the slid curve");
        require(std::binary_search(ov.begin(), ov.end(), v), "BandBlocked",
                "band must end on the over curve");
        std::set<int> seen_vertices{u};
        for (size_t i = 0; i < band.size(); ++i) {
            int b = band[i];
            require(b >= 0 && b < m.dart_count(), "BandBlocked", "band dart range");
            require(!fam_edge[m.edge_of(b)], "BandBlocked", "band runs along the family");
            if (i + 1 < band.size())
                require(m.head(b) == m.vertex_of(band[i + 1]), "BandBlocked",
                        "band is not a dart path");
            int interior = m.head(b);
            if (i + 1 < band.size()) {
                require(!fam_vertex[interior], "BandBlocked",
                        "band interior touches the family");
                require(seen_vertices.insert(interior).second, "BandBlocked",
                        "band revisits a vertex");
            }
        }
    }

    // passage of c at the band foot
    int u = m.vertex_of(band.front());
    int pos = -1;
    for (int i = 0; i < c.length(); ++i)
        if (m.vertex_of(c.walk[i]) == u) pos = i;
    require(pos >= 0, "BandBlocked", "band foot not on the curve");
    {
        // orient c so the band leaves on its left: beta1 strictly between the
        // in-dart and the out-dart in rot order
        int in_dart = m.alpha[c.walk[(pos + c.length() - 1) % c.length()]];
        auto left = detail::rot_arc(m, in_dart, c.walk[pos]);
        bool on_left = std::count(left.begin(), left.end(), band.front()) > 0;
        if (!on_left) {
            c = reversed(m, c);
            pos = -1;
            for (int i = 0; i < c.length(); ++i)
                if (m.vertex_of(c.walk[i]) == u) pos = i;
        }
    }
    std::rotate(c.walk.begin(), c.walk.begin() + pos, c.walk.end());
    // now c.walk[0] leaves u; in-dart is alpha of the last dart
    int w_out = c.walk[0];
    int w_in = c.walk.back();

    // subdivide the in and out edges next to u
    std::vector<Curve*> reg;
    for (auto& fml : out.families)
        for (auto& cc : fml) reg.push_back(&cc);
    reg.push_back(&c);
    auto [n1, n2] = subdivide_with_walks(m, reg, m.alpha[w_in]);
    auto [m1, m2] = subdivide_with_walks(m, reg, w_out);

    int t_in = m.alpha[n1];  // in-edge stub dart at u (w_in arrives via u1)
    // orient over so the walk order matches the wrap direction we take
    Curve ov = over;

    std::vector<int> crossings;

    auto push_arc = [&](int from, int to) {
        for (int s : detail::rot_arc(m, from, to)) crossings.push_back(s);
    };

    // outbound: left of the band walk
    push_arc(t_in, band.front());
    for (size_t j = 0; j + 1 < band.size(); ++j)
        push_arc(m.alpha[band[j]], band[j + 1]);

    // wrap the over curve on the side where the band arrives
    int v = m.head(band.back());
    int opos = -1;
    for (int i = 0; i < ov.length(); ++i)
        if (m.vertex_of(ov.walk[i]) == v) opos = i;
    require(opos >= 0, "BandBlocked", "band head not on over");
    int o_out = ov.walk[opos];
    int o_in = m.alpha[ov.walk[(opos + ov.length() - 1) % ov.length()]];
    int beta_back = m.alpha[band.back()];  // band dart at v
    {
        auto left_of_o = detail::rot_arc(m, o_in, o_out);
        bool band_left = std::count(left_of_o.begin(), left_of_o.end(), beta_back) > 0;
        if (!band_left) {
            ov = reversed(m, ov);
            opos = -1;
            for (int i = 0; i < ov.length(); ++i)
                if (m.vertex_of(ov.walk[i]) == v) opos = i;
            o_out = ov.walk[opos];
            o_in = m.alpha[ov.walk[(opos + ov.length() - 1) % ov.length()]];
        }
    }
    std::rotate(ov.walk.begin(), ov.walk.begin() + opos, ov.walk.end());
    // circuit: left side of over, starting and ending at the band dart
    push_arc(beta_back, o_out);
    for (int i = 1; i < ov.length(); ++i) {
        int a = m.alpha[ov.walk[i - 1]];
        push_arc(a, ov.walk[i]);
    }
    push_arc(m.alpha[ov.walk.back()], beta_back);

    // inbound: left of the reversed band walk
    for (size_t j = band.size() - 1; j > 0; --j)
        push_arc(band[j], m.alpha[band[j - 1]]);
    push_arc(band.front(), w_out);

    // crossing specs with lane discipline: the detour crosses each spoke at
    // most once near either end; near the low end lanes ascend, near the
    // high end they descend, keeping the crossings ordered along each edge
    std::vector<RouterCrossing> rcs;
    std::map<int, int> low_seen, high_seen;
    for (size_t i = 0; i < crossings.size(); ++i) {
        int dart = crossings[i];
        int rep = std::min(dart, m.alpha[dart]);
        bool near_low = (dart == rep);  // crossing sits near vertex_of(dart)
        long long lane;
        if (near_low)
            lane = low_seen[rep]++;
        else
            lane = 1000000LL - (high_seen[rep]++);
        rcs.push_back({dart, lane});
    }
    // The strands leave u1 and re-enter u2 on the left of the curve: those
    // are the corner tokens n2 (between n2 and n1) and m1 (between m1 and
    // m2).
    ThreadSpec spec;
    spec.start_corner = n2;
    spec.end_corner = m1;
    spec.crossings = rcs;

    auto walks = route_threads(m, reg, {spec});
    const Curve& detour = walks[0];

    // assemble c': detour followed by c from u2 back to u1
    Curve cp;
    cp.walk = detour.walk;
    {
        // c (patched) passes ..., w_in, n1, w_out, m2, ...; drop n1 and w_out
        std::vector<int> cyc = c.walk;
        int iy = -1;
        for (int i = 0; i < (int)cyc.size(); ++i)
            if (cyc[i] == w_out) iy = i;
        require(iy >= 0, "BadSurgery", "lost the out dart");
        for (int i = 1; i < (int)cyc.size(); ++i) {
            int dart = cyc[(iy + i) % cyc.size()];
            if (dart == n1) break;
            cp.walk.push_back(dart);
        }
    }
    check_simple(m, cp);
    for (int i = 0; i < (int)out.families[fam].size(); ++i)
        if (i != curve_idx)
            require(disjoint(m, cp, out.families[fam][i]), "BandBlocked",
                    "slid curve hits its own family");
    out.families[fam][curve_idx] = cp;
    return out;
}

// Deterministic band search: shortest dart path from `curve` to `over`
// avoiding the family's edges and vertices in its interior.
inline std::vector<int> find_band(const MultisectionDiagram& d, int fam, int curve_idx,
                                  int over_idx) {
    const CombinatorialMap& m = d.map;
    const Curve& c = d.families[fam][curve_idx];
    const Curve& over = d.families[fam][over_idx];
    std::vector<char> fam_vertex(m.vertex_count(), 0), fam_edge(m.edge_count(), 0);
    for (const auto& fc : d.families[fam])
        for (int dart : fc.walk) {
            fam_vertex[m.vertex_of(dart)] = 1;
            fam_edge[m.edge_of(dart)] = 1;
        }
    std::vector<char> target(m.vertex_count(), 0), source(m.vertex_count(), 0);
    for (int dart : over.walk) target[m.vertex_of(dart)] = 1;
    for (int dart : c.walk) source[m.vertex_of(dart)] = 1;

    std::vector<int> parent_dart(m.vertex_count(), -1);
    std::vector<int> dist(m.vertex_count(), -1);
    std::vector<int> queue;
    for (int dart = 0; dart < m.dart_count(); ++dart) {
        int v = m.vertex_of(dart);
        if (source[v] && dist[v] < 0) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        if (target[v]) {
            std::vector<int> band;
            int x = v;
            while (parent_dart[x] >= 0) {
                band.push_back(parent_dart[x]);
                x = m.vertex_of(parent_dart[x]);
            }
            std::reverse(band.begin(), band.end());
            if (!band.empty()) return band;
        }
        for (int dart : m.vertex_darts(v)) {
            if (fam_edge[m.edge_of(dart)]) continue;
            int w = m.head(dart);
            if (dist[w] >= 0) continue;
            // interior vertices must avoid the family entirely
            if (fam_vertex[w] && !target[w]) continue;
            dist[w] = dist[v] + 1;
            parent_dart[w] = dart;
            queue.push_back(w);
        }
    }
    fail("BandBlocked", "no admissible band found");
    return {};
}

inline MultisectionDiagram handleslide_auto(const MultisectionDiagram& d, int fam, int curve_idx,
                                            int over_idx) {
    return handleslide(d, fam, curve_idx, over_idx, find_band(d, fam, curve_idx, over_idx));
}

}  // namespace msd
