#include "catch_amalgamated.hpp"

#include "msd/cut.hpp"
#include "msd/gen1.hpp"
#include "msd/moves.hpp"

using namespace msd;

TEST_CASE("torus cut along a meridian gives a 2-holed sphere") {
    auto m = torus_one_vertex();
    Curve mer{{0}};
    auto cut = cut_along(m, {mer});
    REQUIRE(cut.pieces.size() == 1);
    CHECK(cut.pieces[0].capped_genus == 0);
    CHECK(cut.pieces[0].hole_count() == 2);
    CHECK(cut.pieces[0].hole_src[0] == std::vector<int>{0});
}

TEST_CASE("torus cut along two parallel meridians gives two annuli") {
    auto g = grid_torus(2, 2);
    auto cut = cut_along(g.map, {g.meridian(0), g.meridian(1)});
    REQUIRE(cut.pieces.size() == 2);
    for (const auto& p : cut.pieces) {
        CHECK(p.capped_genus == 0);
        CHECK(p.hole_count() == 2);
        CHECK(p.hole_src[0].size() == 1);
        CHECK(p.hole_src[1].size() == 1);
        CHECK(p.hole_src[0][0] != p.hole_src[1][0]);
    }
}

TEST_CASE("chi conservation under cutting") {
    auto g = grid_torus(3, 2);
    auto cut = cut_along(g.map, {g.meridian(0), g.meridian(2)});
    int total_chi = 0, holes = 0;
    for (const auto& p : cut.pieces) {
        total_chi += 2 - 2 * p.capped_genus - p.hole_count();
        holes += p.hole_count();
    }
    CHECK(total_chi == g.map.euler());
    CHECK(holes == 4);
}

TEST_CASE("genus-2 surface cut along the two handle meridians") {
    // explicit genus-2 map via connected sum of two tori carrying their
    // meridians
    MultisectionDiagram t1, t2;
    t1.map = torus_one_vertex();
    t1.n = 1;
    t1.families = {{Curve{{0}}}};
    t1.map.insert_bigon(1);
    t2 = t1;
    auto cf1 = curve_free_faces(t1);
    REQUIRE(cf1.size() == 1);
    auto s = connected_sum(t1, t2, cf1[0], cf1[0]);
    REQUIRE(s.map.genus() == 2);
    REQUIRE(s.families[0].size() == 2);
    auto cut = cut_along(s.map, s.families[0]);
    REQUIRE(cut.pieces.size() == 1);
    CHECK(cut.pieces[0].capped_genus == 0);
    CHECK(cut.pieces[0].hole_count() == 4);

    SECTION("meridians of different handles are not parallel") {
        CHECK(!are_parallel(s.map, s.families[0][0], s.families[0][1]));
    }
}

TEST_CASE("is_cut_system on the torus") {
    auto m = torus_one_vertex();
    CHECK(is_cut_system(m, {Curve{{0}}}).ok);
    CHECK(!is_cut_system(m, {}).ok);           // wrong count
    CHECK(!is_cut_system(m, {Curve{{0}}, Curve{{1}}}).ok);
}

TEST_CASE("contractible curve is not a cut system") {
    // bigon boundary on a refined torus bounds a disk; cutting disconnects
    auto m = torus_one_vertex();
    auto nd = m.insert_bigon(0);
    Curve bigon{{nd[0], m.alpha[nd[1]]}};  // p1 then q2: w->u->w
    check_simple(m, bigon);
    auto chk = is_cut_system(m, {bigon});
    CHECK(!chk.ok);
}

TEST_CASE("parallel meridians on the grid torus") {
    auto g = grid_torus(3, 2);
    CHECK(are_parallel(g.map, g.meridian(0), g.meridian(1)));
    CHECK(are_parallel(g.map, g.meridian(0), g.meridian(2)));
    CHECK_THROWS_AS(are_parallel(g.map, g.meridian(0), g.longitude(0)), error);
}

TEST_CASE("tracked curves survive cutting") {
    auto g = grid_torus(2, 3);
    auto cut = cut_along(g.map, {g.meridian(0)}, {g.meridian(1)});
    REQUIRE(cut.pieces.size() == 1);
    REQUIRE(cut.pieces[0].tracked.size() == 1);
    check_simple(cut.pieces[0].map, cut.pieces[0].tracked[0]);
}

TEST_CASE("tracked curve on the locus is rejected") {
    auto g = grid_torus(2, 3);
    CHECK_THROWS_AS(cut_along(g.map, {g.meridian(0)}, {g.longitude(0)}), error);
}
