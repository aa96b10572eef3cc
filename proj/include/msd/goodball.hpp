#pragma once

#include "msd/simplicial.hpp"

namespace msd {

// One connected component of a stratum intersection.
struct StratumComponent {
    int dim = 0;
    int chi = 1;
    std::vector<int> points;  // ids of full-intersection points it contains
    // backing cells when the decomposition is simplicial
    std::vector<std::vector<int>> cells;
};

// The colored graph extracted from a good ball decomposition: vertices are
// the full-intersection points, edges the interval components of the
// (d-1)-fold intersections, colored by the omitted piece.
struct BaseGraph {
    int v = 0;
    int colors = 0;
    struct Edge {
        int color;
        int p, q;
    };
    std::vector<Edge> edges;
    bool simple = true;
    std::vector<std::string> issues;

    bool connected() const {
        if (v == 0) return false;
        std::vector<int> root(v);
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& e : edges) root[find(e.p)] = find(e.q);
        for (int i = 1; i < v; ++i)
            if (find(i) != find(0)) return false;
        return true;
    }
};

struct GoodBallDecomposition {
    std::string base;  // description tag
    int d = 0;         // dimension of the base manifold
    int pieces = 0;    // number of pieces (d+1 for star decompositions)
    int base_euler = 0;
    // strata[mask] for every non-empty subset of pieces
    std::map<uint32_t, std::vector<StratumComponent>> strata;
    int num_points = 0;  // components of the full intersection
    bool simplicial_backed = false;

    const std::vector<StratumComponent>& stratum(uint32_t mask) const {
        auto it = strata.find(mask);
        require(it != strata.end(), "BadStratum", "missing stratum");
        return it->second;
    }

    uint32_t full_mask() const { return (1u << pieces) - 1; }
};

inline int predicted_genus(const BaseGraph& g, int fiber_genus) {
    return g.v * fiber_genus + static_cast<int>(g.edges.size()) - g.v + 1;
}

inline BaseGraph extract_base_graph(const GoodBallDecomposition& gbd) {
    BaseGraph g;
    g.v = gbd.num_points;
    g.colors = gbd.pieces;
    for (int i = 0; i < gbd.pieces; ++i) {
        uint32_t mask = gbd.full_mask() & ~(1u << i);
        for (const auto& comp : gbd.stratum(mask)) {
            if (comp.dim != 1) {
                g.simple = false;
                g.issues.push_back("color " + std::to_string(i + 1) +
                                   " has a non-interval component");
                continue;
            }
            if (comp.points.size() != 2) {
                g.simple = false;
                g.issues.push_back("color " + std::to_string(i + 1) + " interval with " +
                                   std::to_string(comp.points.size()) + " endpoints");
                continue;
            }
            g.edges.push_back({i, comp.points[0], comp.points[1]});
        }
    }
    // simple: one incident edge end of each color at every point
    std::vector<std::vector<int>> ends(g.v, std::vector<int>(g.colors, 0));
    for (const auto& e : g.edges) {
        ends[e.p][e.color]++;
        ends[e.q][e.color]++;
    }
    for (int p = 0; p < g.v && g.simple; ++p)
        for (int c = 0; c < g.colors; ++c)
            if (ends[p][c] != 1) {
                g.simple = false;
                g.issues.push_back("point " + std::to_string(p) + " has " +
                                   std::to_string(ends[p][c]) + " ends of color " +
                                   std::to_string(c + 1));
            }
    return g;
}

// --- closed-form decompositions -------------------------------------------

// S^m cut into m+1 cones over the faces of an m-simplex: every proper
// intersection is one ball, the full intersection two points.
inline GoodBallDecomposition sphere_decomposition(int m) {
    require(m >= 1, "BadBase", "sphere_decomposition needs m >= 1");
    GoodBallDecomposition g;
    g.base = "sphere(" + std::to_string(m) + ")";
    g.d = m;
    g.pieces = m + 1;
    g.base_euler = 1 + ((m % 2 == 0) ? 1 : -1);
    g.num_points = 2;
    for (uint32_t mask = 1; mask < (1u << g.pieces); ++mask) {
        int k = __builtin_popcount(mask);
        if (mask == g.full_mask()) {
            g.strata[mask] = {StratumComponent{0, 1, {0}, {}}, StratumComponent{0, 1, {1}, {}}};
        } else {
            StratumComponent c;
            c.dim = g.pieces - k;  // (n-|I|)-ball
            c.chi = 1;
            if (c.dim == 1) c.points = {0, 1};
            g.strata[mask] = {c};
        }
    }
    return g;
}

// RP^n with pieces M_i = {|x_i| maximal}, modeled on sign vectors modulo the
// global flip. Components of M_I correspond to the signs of the I-coordinates.
inline GoodBallDecomposition rpn_decomposition(int n) {
    require(n >= 2, "BadBase", "rpn_decomposition needs n >= 2");
    require(n <= 20, "BadBase", "rpn_decomposition size cap");
    GoodBallDecomposition g;
    g.base = "rpn(" + std::to_string(n) + ")";
    g.d = n;
    g.pieces = n + 1;
    g.base_euler = (n % 2 == 0) ? 1 : 0;
    g.num_points = 1 << n;
    // point ids: sign vectors with s_0 = +1 dropped, remaining bits little-endian
    auto point_id = [&](uint32_t signs) {  // bit i = 1 means s_i = -1, i in 0..n
        if (signs & 1u) signs = ~signs;    // normalize global flip
        uint32_t bits = 0;
        for (int i = 1; i <= n; ++i)
            if (signs & (1u << i)) bits |= 1u << (i - 1);
        return (int)bits;
    };
    for (uint32_t mask = 1; mask < (1u << g.pieces); ++mask) {
        int k = __builtin_popcount(mask);
        std::vector<int> idx;
        for (int i = 0; i <= n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<StratumComponent> comps;
        // components: sign patterns on the I coordinates modulo global flip;
        // fix the sign of the smallest I coordinate to +.
        for (uint32_t pat = 0; pat < (1u << (k - 1)); ++pat) {
            StratumComponent c;
            c.dim = n - k + 1;
            if (mask == g.full_mask()) c.dim = 0;
            c.chi = 1;
            if (c.dim == 0) {
                uint32_t signs = 0;
                for (int j = 1; j < k; ++j)
                    if (pat & (1u << (j - 1))) signs |= 1u << idx[j];
                c.points = {point_id(signs)};
            } else if (c.dim == 1) {
                // interval of an omit-one stratum: endpoints fill the missing
                // coordinate with both signs
                int missing = -1;
                for (int i = 0; i <= n; ++i)
                    if (!(mask & (1u << i))) missing = i;
                uint32_t signs = 0;
                for (int j = 1; j < k; ++j)
                    if (pat & (1u << (j - 1))) signs |= 1u << idx[j];
                c.points = {point_id(signs), point_id(signs | (1u << missing))};
            }
            comps.push_back(std::move(c));
        }
        g.strata[mask] = std::move(comps);
    }
    return g;
}

// The quadrisection decomposition of S^2 x S^1: two solid tori, each cut by
// two meridian disks whose boundaries wave across the common torus so that
// every pairwise intersection is two disks. Cell data below reproduces the
// crossing pattern of the interface curves.
inline GoodBallDecomposition s2xs1_decomposition() {
    GoodBallDecomposition g;
    g.base = "s2xs1";
    g.d = 3;
    g.pieces = 4;
    g.base_euler = 0;
    g.num_points = 8;
    auto mask_of = [](std::initializer_list<int> pieces) {
        uint32_t m = 0;
        for (int p : pieces) m |= 1u << (p - 1);
        return m;
    };
    // pieces: 3-balls
    for (int i = 1; i <= 4; ++i) g.strata[mask_of({i})] = {StratumComponent{3, 1, {}, {}}};
    // pairs: two disks each
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            g.strata[mask_of({i, j})] = {StratumComponent{2, 1, {}, {}},
                                         StratumComponent{2, 1, {}, {}}};
    // crossing points A..H = 0..7 of the interface curves on the torus
    enum { A, B, C, D, E, F, G3, H };
    auto iv = [&](int p, int q) {
        StratumComponent c;
        c.dim = 1;
        c.chi = 1;
        c.points = {p, q};
        return c;
    };
    // triples: four intervals each (arcs of one interface curve inside one
    // side of the other)
    g.strata[mask_of({2, 3, 4})] = {iv(E, F), iv(D, A), iv(G3, B), iv(C, H)};  // color 1
    g.strata[mask_of({1, 3, 4})] = {iv(F, D), iv(A, E), iv(B, C), iv(G3, H)};  // color 2
    g.strata[mask_of({1, 2, 4})] = {iv(A, B), iv(C, D), iv(E, F), iv(G3, H)};  // color 3
    g.strata[mask_of({1, 2, 3})] = {iv(B, C), iv(A, D), iv(E, G3), iv(F, H)};  // color 4
    // full intersection: eight points
    std::vector<StratumComponent> pts;
    for (int p = 0; p < 8; ++p) pts.push_back(StratumComponent{0, 1, {p}, {}});
    g.strata[g.full_mask()] = pts;
    return g;
}

// --- barycentric star decomposition ----------------------------------------

struct StarDecomposition {
    GoodBallDecomposition gbd;
    SimplicialComplex t2;
    // label set per top cell of t2 (which piece it belongs to)
    std::map<std::vector<int>, int> piece_of_top;
};

// M_i = union of the stars, in the second subdivision, of the barycenters of
// the i-faces of T. Each top cell of T^2 lies in exactly one piece: the one
// named by the dimension type of its minimal chain element.
inline StarDecomposition star_decomposition(const SimplicialComplex& T) {
    check_closed_manifold(T);
    int d = T.dimension();
    require(d <= 3, "BadBase", "star decomposition implemented for d <= 3");

    std::map<std::vector<int>, int> name1;  // T-simplex -> T1 vertex id
    auto T1 = barycentric_subdivision(T, &name1);
    std::vector<int> type_of_t1_vertex(name1.size());
    for (auto& [simplex, id] : name1) type_of_t1_vertex[id] = (int)simplex.size() - 1;
    std::map<std::vector<int>, int> name2;  // T1-simplex -> T2 vertex id
    auto T2 = barycentric_subdivision(T1, &name2);
    // T2 vertex -> if it is a T1 vertex barycenter, its type; else -1
    std::map<int, int> t2_vertex_type;
    for (auto& [s1, id2] : name2)
        if (s1.size() == 1) t2_vertex_type[id2] = type_of_t1_vertex[s1[0]];

    StarDecomposition sd;
    sd.t2 = T2;
    auto& g = sd.gbd;
    g.base = "star";
    g.d = d;
    g.pieces = d + 1;
    g.base_euler = T.euler();
    g.simplicial_backed = true;

    // piece label per top cell: type of its unique minimal (T1-vertex) vertex
    for (const auto& top : T2.top_cells()) {
        int label = -1;
        for (int v : top) {
            auto it = t2_vertex_type.find(v);
            if (it != t2_vertex_type.end()) {
                require(label < 0, "BadStratum", "top cell with two barycenter vertices");
                label = it->second;
            }
        }
        require(label >= 0, "BadStratum", "top cell without piece label");
        sd.piece_of_top[top] = label;
    }

    // label set per simplex of T2
    std::map<std::vector<int>, uint32_t> labels;
    for (const auto& top : T2.top_cells()) {
        int label = sd.piece_of_top[top];
        int nv = (int)top.size();
        for (int mask = 1; mask < (1 << nv); ++mask) {
            std::vector<int> f;
            for (int i = 0; i < nv; ++i)
                if (mask & (1 << i)) f.push_back(top[i]);
            labels[f] |= 1u << label;
        }
    }

    // full-intersection points get ids first
    std::map<std::vector<int>, int> point_id;
    uint32_t full = g.full_mask();
    for (auto& [s, ls] : labels)
        if (s.size() == 1 && (ls & full) == full) {
            int id = (int)point_id.size();
            point_id[s] = id;
        }
    g.num_points = (int)point_id.size();

    for (uint32_t mask = 1; mask < (1u << g.pieces); ++mask) {
        // subcomplex of simplices whose label set contains mask
        std::vector<std::vector<int>> cells;
        for (auto& [s, ls] : labels)
            if ((ls & mask) == mask) cells.push_back(s);
        // components via union-find over shared vertices
        std::map<int, int> root;
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (auto& s : cells)
            for (int v : s)
                if (!root.count(v)) root[v] = v;
        for (auto& s : cells)
            for (size_t i = 1; i < s.size(); ++i) {
                int a = find(s[0]), b = find(s[i]);
                if (a != b) root[a] = b;
            }
        std::map<int, StratumComponent> comps;
        for (auto& s : cells) {
            int rep = find(s[0]);
            auto& c = comps[rep];
            c.cells.push_back(s);
            c.chi += 0;  // filled below
        }
        for (auto& [rep, c] : comps) {
            c.chi = 0;
            c.dim = 0;
            std::set<int> pts;
            for (auto& s : c.cells) {
                c.chi += (s.size() % 2 == 1) ? 1 : -1;
                c.dim = std::max(c.dim, (int)s.size() - 1);
                if (s.size() == 1) {
                    auto it = point_id.find(s);
                    if (it != point_id.end()) pts.insert(it->second);
                }
            }
            c.points.assign(pts.begin(), pts.end());
        }
        auto& out = g.strata[mask];
        for (auto& [rep, c] : comps) out.push_back(std::move(c));
    }
    return sd;
}

struct BallLikenessReport {
    struct Item {
        uint32_t mask;
        int component;
        int dim;
        int chi;
        bool dim_ok, chi_ok, connected;
        std::string collapse;  // "point" | "inconclusive"
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass = true;
};

// Testable surrogate for "every stratum component is a ball": dimension,
// chi = 1, connectivity and a greedy collapsibility certificate.
inline BallLikenessReport validate_ball_likeness(const GoodBallDecomposition& g) {
    BallLikenessReport rep;
    for (auto& [mask, comps] : g.strata) {
        int k = __builtin_popcount(mask);
        int want_dim = (mask == g.full_mask()) ? 0 : g.d - k + 1;
        int ci = 0;
        for (const auto& c : comps) {
            BallLikenessReport::Item it;
            it.mask = mask;
            it.component = ci++;
            it.dim = c.dim;
            it.chi = c.chi;
            it.dim_ok = (c.dim == want_dim);
            it.chi_ok = (c.chi == 1);
            it.connected = true;
            if (g.simplicial_backed && !c.cells.empty()) {
                auto sub = SimplicialComplex::from_top_cells(c.cells);
                it.collapse = sub.collapses_to_point() ? "point" : "inconclusive";
            } else {
                it.collapse = "closed-form";
            }
            it.pass = it.dim_ok && it.chi_ok && it.connected && it.collapse != "inconclusive";
            rep.all_pass = rep.all_pass && it.pass;
            rep.items.push_back(std::move(it));
        }
    }
    return rep;
}

// inclusion-exclusion over the stratum poset must recover the base manifold
inline int stratum_euler_alternating_sum(const GoodBallDecomposition& g) {
    int total = 0;
    for (auto& [mask, comps] : g.strata) {
        int k = __builtin_popcount(mask);
        int sign = (k % 2 == 1) ? 1 : -1;
        for (const auto& c : comps) total += sign * c.chi;
    }
    return total;
}

}  // namespace msd
