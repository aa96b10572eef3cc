#include "catch_amalgamated.hpp"

#include "msd/diagram.hpp"
#include "msd/gen1.hpp"

using namespace msd;

TEST_CASE("gen1 sphere diagrams validate for 2<=n<=7") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            auto d = gen1_sphere_diagram(n, k);
            auto rep = validate_diagram(d);
            INFO("n=" << n << " k=" << k);
            for (auto& f : rep.failures) INFO(f);
            CHECK(rep.valid);
            CHECK(rep.genus == 1);
            CHECK(curve_free_faces(d).size() == 1);
        }
}

TEST_CASE("gen1 sphere rejects k=0 and k=n") {
    CHECK_THROWS_AS(gen1_sphere_diagram(4, 0), error);
    CHECK_THROWS_AS(gen1_sphere_diagram(4, 4), error);
}

TEST_CASE("deleting a curve invalidates") {
    auto d = gen1_sphere_diagram(3, 1);
    d.families[1].clear();
    CHECK(!validate_diagram(d).valid);
}

TEST_CASE("replacing a curve by a face boundary invalidates") {
    auto d = gen1_sphere_diagram(3, 1);
    // boundary of the refined bigon: darts p1 then q2
    int p1 = d.map.dart_count() - 4;
    Curve bigon{{p1, d.map.alpha[p1 + 1]}};
    check_simple(d.map, bigon);
    d.families[2] = {bigon};
    CHECK(!validate_diagram(d).valid);
}

TEST_CASE("gen1(4,1): one meridian and three longitudes meeting once") {
    auto d = gen1_sphere_diagram(4, 1);
    auto mx = intersection_matrix(d);
    for (int j = 1; j < 4; ++j) CHECK(mx.value[0][j][0][0] == 1);
    CHECK(mx.value[1][2][0][0] == 0);
    CHECK(mx.value[1][3][0][0] == 0);
    CHECK(mx.value[2][3][0][0] == 0);
}

TEST_CASE("gen1(5,2): block structure of the intersection matrix") {
    auto d = gen1_sphere_diagram(5, 2);
    auto mx = intersection_matrix(d);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            bool i_mer = i < 2, j_mer = j < 2;
            int expect = (i_mer == j_mer) ? 0 : 1;
            CHECK(mx.value[i][j][0][0] == expect);
        }
}

TEST_CASE("gen1(4,2) matrix symmetric under block transpose") {
    auto d = gen1_sphere_diagram(4, 2);
    auto mx = intersection_matrix(d);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(mx.value[i][j][0][0] == mx.value[j][i][0][0]);
}
