#pragma once

#include "msd/diagram.hpp"

namespace msd {

// One-vertex torus: rot cycle (a b a~ b~). Curve [0] is the meridian, [1]
// the longitude.
inline CombinatorialMap torus_one_vertex() {
    // darts a=0, b=1, a~=2, b~=3
    return CombinatorialMap({2, 3, 0, 1}, {1, 2, 3, 0});
}

// k x r grid torus. Dart layout per vertex (i,j): N,W,S,E in rot order.
// Vertical edges head upward (N of (i,j) pairs S of (i,j+1)); horizontal
// edges head rightward (E of (i,j) pairs W of (i+1,j)).
struct GridTorus {
    CombinatorialMap map;
    int k = 0, r = 0;
    int dart(int i, int j, int dir) const { return 4 * (j * k + i) + dir; }  // dir: 0=N,1=W,2=S,3=E
    Curve meridian(int i) const {
        Curve c;
        for (int j = 0; j < r; ++j) c.walk.push_back(dart(i, j, 0));
        return c;
    }
    Curve longitude(int j) const {
        Curve c;
        for (int i = 0; i < k; ++i) c.walk.push_back(dart(i, j, 3));
        return c;
    }
};

inline GridTorus grid_torus(int k, int r) {
    require(k >= 1 && r >= 1, "BadGrid", "grid needs positive dimensions");
    int n = 4 * k * r;
    std::vector<int> alpha(n), rot(n);
    auto id = [&](int i, int j, int dir) {
        return 4 * (((j % r + r) % r) * k + ((i % k + k) % k)) + dir;
    };
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < k; ++i) {
            rot[id(i, j, 0)] = id(i, j, 1);
            rot[id(i, j, 1)] = id(i, j, 2);
            rot[id(i, j, 2)] = id(i, j, 3);
            rot[id(i, j, 3)] = id(i, j, 0);
            alpha[id(i, j, 0)] = id(i, j + 1, 2);
            alpha[id(i, j, 2)] = id(i, j - 1, 0);
            alpha[id(i, j, 3)] = id(i + 1, j, 1);
            alpha[id(i, j, 1)] = id(i - 1, j, 3);
        }
    GridTorus g;
    g.map = CombinatorialMap(std::move(alpha), std::move(rot));
    g.k = k;
    g.r = r;
    return g;
}

// Genus-1 diagram of the sphere S^{n+1}: k parallel meridians dual to n-k
// parallel longitudes on a grid torus, one curve per family, plus one
// refined curve-free face for later sums.
inline MultisectionDiagram gen1_sphere_diagram(int n, int k) {
    require(0 < k && k < n, "KOutOfRange", "gen1_sphere_diagram needs 0<k<n");
    auto g = grid_torus(k, n - k);
    MultisectionDiagram d;
    d.map = g.map;
    d.n = n;
    for (int i = 0; i < k; ++i) d.families.push_back({g.meridian(i)});
    for (int j = 0; j < n - k; ++j) d.families.push_back({g.longitude(j)});
    // pendant bigon in the face at the corner after dart 0 gives the
    // canonical curve-free face
    d.map.insert_bigon(0);
    d.meta["name"] = "gen1-sphere(" + std::to_string(n) + "," + std::to_string(k) + ")";
    d.meta["generator"] = "gen1-sphere";
    return d;
}

}  // namespace msd
