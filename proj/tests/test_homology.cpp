#include "catch_amalgamated.hpp"

#include "msd/gen1.hpp"
#include "msd/homology.hpp"
#include "msd/moves.hpp"

using namespace msd;

TEST_CASE("face boundaries are null-homologous") {
    auto g = grid_torus(2, 2);
    // boundary walk of face containing dart phi-orbit of 0
    Curve face_walk{g.map.face_cycle(g.map.face_of(0))};
    CHECK(is_zero(h1_class_vector(g.map, face_walk)));
}

TEST_CASE("meridian and longitude are independent") {
    auto g = grid_torus(2, 2);
    H1Basis basis(g.map);
    auto vm = basis.class_vector(g.meridian(0));
    auto vl = basis.class_vector(g.longitude(0));
    CHECK(!is_zero(vm));
    CHECK(!is_zero(vl));
    CHECK(vm != vl);
    CHECK(h1_span_rank(g.map, {g.meridian(0), g.longitude(0)}) == 2);
}

TEST_CASE("parallel curves have equal classes") {
    auto g = grid_torus(3, 2);
    H1Basis basis(g.map);
    CHECK(basis.class_vector(g.meridian(0)) == basis.class_vector(g.meridian(2)));
}

TEST_CASE("a cut system spans a g-dimensional subspace") {
    auto a = gen1_sphere_diagram(3, 1);
    auto b = gen1_sphere_diagram(3, 2);
    auto s = connected_sum(a, b, curve_free_faces(a)[0], curve_free_faces(b)[0]);
    REQUIRE(s.map.genus() == 2);
    for (int i = 0; i < 3; ++i) CHECK(h1_span_rank(s.map, s.families[i]) == 2);
    // and the rank is preserved under stabilization
    auto st = stabilize(s, 1, curve_free_faces(s)[0]);
    for (int i = 0; i < 3; ++i) CHECK(h1_span_rank(st.map, st.families[i]) == 3);
}
