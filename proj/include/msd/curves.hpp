#pragma once

#include <set>
#include <unordered_map>

#include "msd/core.hpp"

namespace msd {

// A closed walk given by its darts in traversal order: the edge of walk[i]
// is traversed from vertex_of(walk[i]) to vertex_of(alpha[walk[i]]).
struct Curve {
    std::vector<int> walk;

    bool empty() const { return walk.empty(); }
    int length() const { return static_cast<int>(walk.size()); }

    // All darts lying on the curve (both directions of each edge).
    std::vector<int> darts(const CombinatorialMap& m) const {
        std::vector<int> out;
        out.reserve(2 * walk.size());
        for (int d : walk) {
            out.push_back(d);
            out.push_back(m.alpha[d]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> edges(const CombinatorialMap& m) const {
        std::vector<int> out;
        for (int d : walk) out.push_back(m.edge_of(d));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> vertices(const CombinatorialMap& m) const {
        std::vector<int> out;
        for (int d : walk) out.push_back(m.vertex_of(d));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Passages (in-dart, out-dart) through each visited vertex.
    std::vector<std::pair<int, int>> passages(const CombinatorialMap& m) const {
        std::vector<std::pair<int, int>> out;
        int n = length();
        for (int i = 0; i < n; ++i) {
            int prev = walk[(i + n - 1) % n];
            out.emplace_back(m.alpha[prev], walk[i]);
        }
        return out;
    }
};

inline void check_closed_walk(const CombinatorialMap& m, const Curve& c) {
    require(!c.walk.empty(), "EmptyCurve", "curve walk is empty");
    int n = c.length();
    for (int i = 0; i < n; ++i) {
        int d = c.walk[i], e = c.walk[(i + 1) % n];
        require(d >= 0 && d < m.dart_count() && e >= 0 && e < m.dart_count(), "BadCurve",
                "dart out of range");
        require(m.vertex_of(m.alpha[d]) == m.vertex_of(e), "BadCurve",
                "walk is not vertex-consecutive");
    }
}

// Simpleness relative to the whole configuration is checked elsewhere; this
// checks the single-curve constraints: edges used once, each vertex visited
// at most twice and a double visit is rejected (a curve never crosses
// itself).
inline void check_simple(const CombinatorialMap& m, const Curve& c) {
    check_closed_walk(m, c);
    std::set<int> edges;
    std::unordered_map<int, int> visits;
    for (int d : c.walk) {
        require(edges.insert(m.edge_of(d)).second, "NotSimple", "edge traversed twice");
        visits[m.vertex_of(d)]++;
    }
    for (auto& [v, k] : visits)
        require(k <= 1, "NotSimple", "curve crosses itself at vertex " + std::to_string(v));
}

// True if the four darts a1,b1 (curve 1) and a2,b2 (curve 2) alternate in the
// rot cycle at their common vertex.
inline bool strands_alternate(const CombinatorialMap& m, int a1, int b1, int a2, int b2) {
    // walk the rot cycle from a1; record the pattern of hits
    std::vector<int> order;
    int x = a1;
    do {
        if (x == a1 || x == b1)
            order.push_back(1);
        else if (x == a2 || x == b2)
            order.push_back(2);
        x = m.rot[x];
    } while (x != a1);
    if (order.size() != 4) return false;
    return order[0] != order[1] && order[1] != order[2] && order[2] != order[3];
}

struct CrossingInfo {
    bool transverse = false;
    std::string reason;
    int count = 0;
};

// Geometric intersection count of the given representatives. Throws
// NotTransverse on shared edges or non-alternating shared vertices.
inline int intersection_count(const CombinatorialMap& m, const Curve& c1, const Curve& c2) {
    check_simple(m, c1);
    check_simple(m, c2);
    {
        auto e1 = c1.edges(m), e2 = c2.edges(m);
        std::vector<int> shared;
        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                              std::back_inserter(shared));
        require(shared.empty(), "NotTransverse", "curves share an edge");
    }
    std::unordered_map<int, std::pair<int, int>> p1, p2;
    for (auto& [a, b] : c1.passages(m)) p1[m.vertex_of(b)] = {a, b};
    for (auto& [a, b] : c2.passages(m)) p2[m.vertex_of(b)] = {a, b};
    int count = 0;
    for (auto& [v, st1] : p1) {
        auto it = p2.find(v);
        if (it == p2.end()) continue;
        auto st2 = it->second;
        require(strands_alternate(m, st1.first, st1.second, st2.first, st2.second),
                "NotTransverse",
                "strands do not alternate at vertex " + std::to_string(v));
        ++count;
    }
    return count;
}

inline bool disjoint(const CombinatorialMap& m, const Curve& c1, const Curve& c2) {
    auto v1 = c1.vertices(m), v2 = c2.vertices(m);
    std::vector<int> shared;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
    return shared.empty();
}

// Reverse traversal of the same unoriented curve.
inline Curve reversed(const CombinatorialMap& m, const Curve& c) {
    Curve r;
    for (auto it = c.walk.rbegin(); it != c.walk.rend(); ++it) r.walk.push_back(m.alpha[*it]);
    return r;
}

}  // namespace msd
