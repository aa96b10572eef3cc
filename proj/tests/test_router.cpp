#include "catch_amalgamated.hpp"

#include "msd/cut.hpp"
#include "msd/gen1.hpp"
#include "msd/router.hpp"

using namespace msd;

// corner token of vertex v on face f (unique for the cells used here)
static int corner_on_face(const CombinatorialMap& m, int v, int f) {
    for (int d : m.vertex_darts(v))
        if (m.corner_face(d) == f) return d;
    FAIL("no corner of vertex on face");
    return -1;
}

TEST_CASE("two crossing chords keep the Euler characteristic") {
    auto g = grid_torus(2, 2);
    auto m = g.map;
    int f = m.face_of(0);
    auto cyc = m.face_cycle(f);
    REQUIRE(cyc.size() == 4);
    std::vector<int> tok;
    for (int d : cyc) tok.push_back(m.alpha[d]);
    ThreadSpec t1{tok[0], {}, tok[2]};
    ThreadSpec t2{tok[1], {}, tok[3]};
    auto walks = route_threads(m, {}, {t1, t2});
    CHECK(m.genus() == 1);
    CHECK(m.dart_count() == g.map.dart_count() + 8);
    REQUIRE(walks[0].walk.size() == 2);
    REQUIRE(walks[1].walk.size() == 2);
    // the two chords cross transversally at the new vertex
    int z = m.vertex_of(m.alpha[walks[0].walk[0]]);
    CHECK(m.vertex_darts(z).size() == 4);
    CHECK(strands_alternate(m, m.alpha[walks[0].walk[0]], walks[0].walk[1],
                            m.alpha[walks[1].walk[0]], walks[1].walk[1]));
}

TEST_CASE("routed parallel meridian crosses a longitude once") {
    auto g = grid_torus(2, 2);
    auto m = g.map;
    Curve m0 = g.meridian(0), lon = g.longitude(0);
    // loop based at vertex (1,0) crossing the row-1 horizontal edge
    int v10 = m.vertex_of(g.dart(1, 0, 0));
    int fa = m.face_of(g.dart(1, 0, 1));          // face of W(1,0): left strip, row 0
    int fb = m.corner_face(g.dart(1, 0, 1));      // corner after W(1,0): row-1 strip face
    int start = corner_on_face(m, v10, fa);
    int end = corner_on_face(m, v10, fb);
    REQUIRE(start != end);
    int cross_dart = g.dart(0, 1, 3);  // E(0,1), row-1 horizontal edge
    REQUIRE(m.face_of(cross_dart) == fa);
    REQUIRE(m.face_of(m.alpha[cross_dart]) == fb);
    std::vector<Curve*> reg{&m0, &lon};
    ThreadSpec t{start, {{cross_dart, 0}}, end};
    auto walks = route_threads(m, reg, {t});
    Curve loop = walks[0];
    check_simple(m, loop);
    CHECK(m.genus() == 1);
    check_simple(m, m0);
    check_simple(m, lon);
    CHECK(intersection_count(m, loop, m0) == 0);
    CHECK(are_parallel(m, loop, m0));
    CHECK(intersection_count(m, loop, lon) == 1);
}

TEST_CASE("a thread crossing a curve-carrying edge meets it transversally") {
    auto g = grid_torus(2, 3);
    auto m = g.map;
    Curve m1 = g.meridian(1);
    std::vector<Curve*> reg{&m1};
    // cross the vertical edge of meridian 1 at row 0: dart N(1,0)
    int cd = g.dart(1, 0, 0);
    int fa = m.face_of(cd);
    int fb = m.face_of(m.alpha[cd]);
    // anchor corners on both sides
    int va = m.vertex_of(g.dart(0, 0, 0));
    int vb = m.vertex_of(g.dart(0, 1, 0));
    int start = corner_on_face(m, va, fa);
    int end = corner_on_face(m, vb, fb);
    ThreadSpec t{start, {{cd, 0}}, end};
    auto walks = route_threads(m, reg, {t});
    check_simple(m, m1);
    CHECK(m.genus() == 1);
    // strands alternate at the subdivision vertex
    const Curve& w = walks[0];
    REQUIRE(w.walk.size() >= 2);
    int z = m.vertex_of(w.walk[1]);
    auto zds = m.vertex_darts(z);
    REQUIRE(zds.size() == 4);
    // find the meridian's two darts at z
    std::vector<int> mer_darts, thr_darts;
    std::set<int> mer_set(m1.walk.begin(), m1.walk.end());
    for (int d : m1.walk) mer_set.insert(m.alpha[d]);
    for (int d : zds) (mer_set.count(d) ? mer_darts : thr_darts).push_back(d);
    REQUIRE(mer_darts.size() == 2);
    REQUIRE(thr_darts.size() == 2);
    CHECK(strands_alternate(m, mer_darts[0], mer_darts[1], thr_darts[0], thr_darts[1]));
}
