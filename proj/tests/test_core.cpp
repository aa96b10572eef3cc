#include "catch_amalgamated.hpp"

#include "msd/canonical.hpp"
#include "msd/core.hpp"
#include "msd/curves.hpp"
#include "msd/gen1.hpp"

using namespace msd;

static CombinatorialMap theta_sphere() {
    // two vertices, three parallel edges; rotations reversed so faces close to
    // three bigons
    return CombinatorialMap({3, 4, 5, 0, 1, 2}, {1, 2, 0, 5, 3, 4});
}

TEST_CASE("one-vertex torus") {
    auto m = torus_one_vertex();
    CHECK(m.vertex_count() == 1);
    CHECK(m.edge_count() == 2);
    CHECK(m.face_count() == 1);
    CHECK(m.euler() == 0);
    CHECK(m.genus() == 1);
}

TEST_CASE("theta graph on the sphere") {
    auto m = theta_sphere();
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 3);
    CHECK(m.face_count() == 3);
    CHECK(m.genus() == 0);
}

TEST_CASE("alpha with a fixed dart is rejected") {
    CHECK_THROWS_AS(CombinatorialMap({0, 1}, {1, 0}), error);
    try {
        CombinatorialMap({0, 1}, {1, 0});
    } catch (const error& e) {
        CHECK(e.code == "AlphaFixedPoint");
    }
}

TEST_CASE("build_map rejects disconnected unless allowed") {
    // two disjoint one-vertex tori
    std::vector<int> alpha{2, 3, 0, 1, 6, 7, 4, 5};
    std::vector<int> rot{1, 2, 3, 0, 5, 6, 7, 4};
    CHECK_THROWS_AS(build_map(alpha, rot), error);
    auto m = build_map(alpha, rot, true);
    CHECK(m.component_count() == 2);
}

TEST_CASE("refine keeps genus and mints a curve-free face") {
    auto m = torus_one_vertex();
    int faces_before = m.face_count();
    m.insert_bigon(0);
    CHECK(m.genus() == 1);
    CHECK(m.face_count() == faces_before + 1);
    m.insert_bigon(m.alpha[0]);
    CHECK(m.genus() == 1);
    CHECK(m.face_count() == faces_before + 2);
}

TEST_CASE("edge subdivision re-expresses curves and keeps counts") {
    auto g = grid_torus(2, 3);
    Curve mer = g.meridian(0), lon = g.longitude(1);
    auto m = g.map;
    CHECK(intersection_count(m, mer, lon) == 1);
    // subdivide an edge on the meridian
    int d = mer.walk[1];
    auto [n1, n2] = m.subdivide_edge(d);
    (void)n1;
    Curve mer2 = mer;
    mer2.walk.insert(mer2.walk.begin() + 2, n2);
    check_simple(m, mer2);
    CHECK(m.genus() == 1);
    CHECK(intersection_count(m, mer2, lon) == 1);
}

TEST_CASE("intersection counts on the grid torus") {
    auto g = grid_torus(2, 3);
    CHECK(g.map.genus() == 1);
    CHECK(intersection_count(g.map, g.meridian(0), g.meridian(1)) == 0);
    CHECK(intersection_count(g.map, g.meridian(0), g.longitude(2)) == 1);
    CHECK(intersection_count(g.map, g.longitude(0), g.longitude(1)) == 0);
    // shared edge -> NotTransverse
    CHECK_THROWS_AS(intersection_count(g.map, g.meridian(0), g.meridian(0)), error);
}

TEST_CASE("map isomorphism: renumbering and non-isomorphic pairs") {
    auto g = grid_torus(1, 2);
    // relabel darts by a rotation of indices
    int n = g.map.dart_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 5) % n;
    std::vector<int> alpha(n), rot(n);
    for (int d = 0; d < n; ++d) {
        alpha[perm[d]] = perm[g.map.alpha[d]];
        rot[perm[d]] = perm[g.map.rot[d]];
    }
    CombinatorialMap h(alpha, rot);
    CHECK(map_isomorphic(g.map, h));
    CHECK(!map_isomorphic(g.map, theta_sphere()));
    CHECK(!map_isomorphic(torus_one_vertex(), grid_torus(2, 2).map));
}

TEST_CASE("isomorphism respects curve families") {
    auto g1 = gen1_sphere_diagram(3, 1);
    CHECK(map_isomorphic(g1.map, g1.families, g1.map, g1.families));
    auto permuted = g1.families;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    CHECK(!map_isomorphic(g1.map, g1.families, g1.map, permuted));
    CHECK(map_isomorphic(g1.map, g1.families, g1.map, permuted, true));
}
