#include <doctest.h>
#include "helpers.hpp"

using namespace germ2;
using namespace germ2::testing;

TEST_CASE("blowup_chart1 examples") {
    int N = 8;
    // (x+x^2, y+xy): v is exactly invariant, chart is (x+x^2, v)
    SemiSeries S = blowup_chart1(germ2v({{1, 2, 0}}, {{1, 1, 1}}, N));
    CHECK(S.order == N - 1);
    CHECK(S.xcoeffs[2] == RatFunc(1));
    for (int j = 3; j <= S.order; j++) CHECK(S.xcoeffs[j].is_zero());
    for (int j = 1; j <= S.order; j++) CHECK(S.vcoeffs[j].is_zero());

    CHECK(blowup_chart1(MapGerm::identity(N)).is_identity());

    // (x+x^2, y+y^2): v1 = v + x(v^2-v) + O(x^2)
    SemiSeries T = blowup_chart1(germ2v({{1, 2, 0}}, {{1, 0, 2}}, N));
    Poly1 v = Poly1::var();
    CHECK(T.vcoeffs[1] == RatFunc(v * v - v));
    CHECK(T.xcoeffs[2] == RatFunc(1));

    MapGerm L(Gaussian(2) * Jet2::var_x(N), Jet2::var_y(N), N);
    CHECK_THROWS_AS(blowup_chart1(L), MathError);
}

TEST_CASE("blowup_chart2 symmetry") {
    int N = 8;
    SemiSeries S = blowup_chart2(germ2v({{1, 2, 0}}, {{1, 0, 2}}, N));
    Poly1 s = Poly1::var();
    // s1 = s + y(s^2 - s) + O(y^2) by the x<->y symmetry
    CHECK(S.vcoeffs[1] == RatFunc(s * s - s));
    CHECK(blowup_chart2(MapGerm::identity(N)).is_identity());
}

TEST_CASE("chart_transition agrees with chart 2") {
    int N = 8;
    TestRng rng(41);
    MapGerm F = germ2v({{1, 2, 0}}, {{1, 0, 2}}, N);
    CHECK(chart_transition(blowup_chart1(F)) == blowup_chart2(F));

    CHECK(chart_transition(blowup_chart1(MapGerm::identity(N))).is_identity());

    for (int t = 0; t < 6; t++) {
        MapGerm G = random_flat_map(rng, N, 2, 4);
        SemiSeries S1 = blowup_chart1(G);
        SemiSeries S2 = blowup_chart2(G);
        CHECK(chart_transition(S1) == S2);
        // the transition lands on polynomial coefficients again
        for (int j = 2; j <= S2.order; j++) CHECK(S2.xcoeffs[j].is_polynomial());
        for (int j = 1; j <= S2.order; j++) CHECK(S2.vcoeffs[j].is_polynomial());
    }
}

TEST_CASE("blow-up functoriality") {
    int N = 8;
    TestRng rng(42);
    for (int t = 0; t < 5; t++) {
        MapGerm F = random_flat_map(rng, N, 2, 3);
        MapGerm G = random_flat_map(rng, N, 2, 3);
        CHECK(blowup_chart1(compose(F, G)) ==
              chart_compose(blowup_chart1(F), blowup_chart1(G)));
    }
}

TEST_CASE("blow-up coefficient degree bounds") {
    // The provable bounds are deg a_j <= j (direct substitution) and
    // deg b_j <= 2j+1 (the series division contributes one extra factor per
    // x-power). The tighter j+1 bound fails on real germs:
    // (x+x^2+y^3, y+xy+x^3) has b_2 = 1 - v^4.
    int N = 10;
    TestRng rng(43);
    for (int t = 0; t < 6; t++) {
        MapGerm F = random_flat_map(rng, N, (int)rng.range(2, 4), 5);
        SemiSeries S = blowup_chart1(F);
        for (int j = 2; j <= S.order; j++) {
            CHECK(S.xcoeffs[j].is_polynomial());
            CHECK(S.xcoeffs[j].num().degree() <= j);
        }
        for (int j = 1; j <= S.order; j++) {
            CHECK(S.vcoeffs[j].is_polynomial());
            CHECK(S.vcoeffs[j].num().degree() <= 2 * j + 1);
        }
    }
    MapGerm W = germ2v({{1, 2, 0}, {1, 0, 3}}, {{1, 1, 1}, {1, 3, 0}}, 8);
    SemiSeries SW = blowup_chart1(W);
    Poly1 v = Poly1::var();
    CHECK(SW.vcoeffs[2] == RatFunc(Poly1(1) - v.pow(4))); // the counterexample
}

TEST_CASE("chart_transition reports patching-locus poles") {
    // a coefficient of too-high degree keeps a pole at s = 0 after moving
    SemiSeries S(4, RatFunc());
    S.xcoeffs[2] = RatFunc(Poly1::var().pow(4));
    CHECK_THROWS_AS(chart_transition(S), MathError);
}

TEST_CASE("direction_data examples") {
    int N = 8;
    DirectionData D = direction_data(germ2v({{1, 2, 0}}, {{1, 0, 2}}, N));
    Poly1 v = Poly1::var();
    CHECK(D.k == 1);
    CHECK(D.p == Poly1(1));
    CHECK(D.r == v * v - v);
    REQUIRE(D.rational_roots.size() == 2);
    CHECK(D.rational_roots[0] == Gaussian(0));
    CHECK(D.rational_roots[1] == Gaussian(1));
    CHECK(D.infinity_is_characteristic);
    for (auto& root : D.rational_roots) CHECK(D.r.eval(root).is_zero());

    DirectionData D2 = direction_data(germ2v({{1, 2, 0}}, {{1, 1, 1}}, N));
    CHECK(D2.dicritic());

    DirectionData D3 = direction_data(germ2v({{1, 2, 0}}, {{1, 1, 1}, {1, 0, 2}}, N));
    CHECK(D3.r == v * v); // q(1,v) = v + v^2, minus v p(1,v) = v
}

TEST_CASE("dicritic iff r vanishes") {
    int N = 8;
    TestRng rng(44);
    for (int t = 0; t < 10; t++) {
        MapGerm F = rng.chance(50) ? random_dicritic(rng, N, (int)rng.range(1, 2))
                                   : random_flat_map(rng, N, (int)rng.range(2, 3));
        CHECK(is_dicritic(F).dicritic == direction_data(F).dicritic());
    }
}

TEST_CASE("characteristic_directions examples") {
    int N = 8;
    auto C = characteristic_directions(germ2v({{1, 2, 0}}, {{1, 0, 2}}, N));
    CHECK(!C.all_directions);
    REQUIRE(C.dirs.size() == 3);
    for (auto& d : C.dirs) {
        CHECK(d.lambda == Gaussian(1));
        CHECK(!d.degenerate);
    }
    CHECK(C.dirs[2].at_infinity);

    auto C2 = characteristic_directions(germ2v({{1, 2, 0}}, {{1, 1, 1}}, N));
    CHECK(C2.all_directions);

    // F2 = (xy, y^2) is dicritic with f = y; (1:0) is its degenerate direction
    auto C3 = characteristic_directions(germ2v({{1, 1, 1}}, {{1, 0, 2}}, N));
    CHECK(C3.all_directions);
    REQUIRE(C3.dirs.size() == 1);
    CHECK(!C3.dirs[0].at_infinity);
    CHECK(C3.dirs[0].v == Gaussian(0));
    CHECK(C3.dirs[0].degenerate);
}

TEST_CASE("semiseries json round-trip through the text layer") {
    int N = 8;
    MapGerm F = germ2v({{1, 2, 0}, {1, 1, 1}}, {{1, 1, 1}, {1, 0, 2}}, N);
    SemiSeries S = blowup_chart1(F);
    std::string json = semiseries_json(S);
    CHECK(json.find("xcoeffs") != std::string::npos);
    CHECK(semiseries_pole_report(S).empty()); // polynomial coefficients
}
