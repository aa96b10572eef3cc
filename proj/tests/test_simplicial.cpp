#include "catch_amalgamated.hpp"

#include "msd/simplicial.hpp"

using namespace msd;

TEST_CASE("subdivision of a single 2-simplex has 6 triangles") {
    auto k = SimplicialComplex::from_top_cells({{0, 1, 2}});
    auto sd = barycentric_subdivision(k);
    CHECK(sd.top_cells().size() == 6);
    CHECK(sd.euler() == k.euler());
}

TEST_CASE("subdivision preserves chi of the 2-sphere") {
    auto s2 = boundary_of_simplex(2);
    CHECK(s2.euler() == 2);
    auto sd = barycentric_subdivision(s2);
    CHECK(sd.euler() == 2);
    CHECK(sd.top_cells().size() == 4 * 6);
    auto sd2 = barycentric_subdivision(sd);
    CHECK(sd2.top_cells().size() == 144);
    CHECK(sd2.euler() == 2);
}

TEST_CASE("closed manifold checks") {
    CHECK_NOTHROW(check_closed_manifold(boundary_of_simplex(1)));
    CHECK_NOTHROW(check_closed_manifold(boundary_of_simplex(2)));
    // a single triangle is not closed
    CHECK_THROWS_AS(check_closed_manifold(SimplicialComplex::from_top_cells({{0, 1, 2}})),
                    error);
}

TEST_CASE("collapsibility certificates") {
    CHECK(SimplicialComplex::from_top_cells({{0, 1, 2}}).collapses_to_point());
    CHECK(SimplicialComplex::from_top_cells({{0, 1}, {1, 2}, {2, 3}}).collapses_to_point());
    CHECK(!boundary_of_simplex(1).collapses_to_point());  // a circle
}

TEST_CASE("complex text round trip") {
    auto s2 = boundary_of_simplex(2);
    auto text = serialize_complex(s2);
    auto back = parse_complex(text);
    CHECK(back.simplices() == s2.simplices());
    CHECK_THROWS_AS(parse_complex("1 2 x\n"), error);
    auto commented = parse_complex("# sphere\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    CHECK(commented.euler() == 2);
}
