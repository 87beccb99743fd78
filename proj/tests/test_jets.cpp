#include <doctest.h>
#include "helpers.hpp"

using namespace germ2;
using namespace germ2::testing;

TEST_CASE("compose identity laws and exact inverse pair") {
    int N = 10;
    TestRng rng(21);
    MapGerm id = MapGerm::identity(N);
    for (int t = 0; t < 5; t++) {
        MapGerm F = random_flat_map(rng, N, 2);
        CHECK(compose(F, id) == F);
        CHECK(compose(id, F) == F);
    }
    MapGerm F = germ2v({{1, 0, 2}}, {}, N);  // (x+y^2, y)
    MapGerm G = germ2v({{-1, 0, 2}}, {}, N); // (x-y^2, y)
    CHECK(compose(F, G) == MapGerm::identity(N));
}

TEST_CASE("compose leading behavior of two flat quadratics") {
    int N = 8;
    TestRng rng(22);
    for (int t = 0; t < 10; t++) {
        MapGerm F = random_flat_map(rng, N, 2, 3, 2); // X + F2 only
        MapGerm G = random_flat_map(rng, N, 2, 3, 2);
        MapGerm C = compose(F, G);
        // F o G = X + F2 + G2 + O(|X|^3)
        Jet2 dx = (C.fx - Jet2::var_x(N)).homogeneous_part(2);
        Jet2 dy = (C.fy - Jet2::var_y(N)).homogeneous_part(2);
        CHECK(dx == (F.fx - Jet2::var_x(N)).homogeneous_part(2) +
                        (G.fx - Jet2::var_x(N)).homogeneous_part(2));
        CHECK(dy == (F.fy - Jet2::var_y(N)).homogeneous_part(2) +
                        (G.fy - Jet2::var_y(N)).homogeneous_part(2));
    }
}

TEST_CASE("compose requires equal truncation orders") {
    MapGerm F = MapGerm::identity(8);
    MapGerm G = MapGerm::identity(9);
    CHECK_THROWS_AS(compose(F, G), MathError);
}

TEST_CASE("invert examples and group laws") {
    int N = 10;
    CHECK(invert(MapGerm::identity(N)) == MapGerm::identity(N));
    MapGerm F = germ2v({{1, 0, 2}}, {}, N);
    CHECK(invert(F) == germ2v({{-1, 0, 2}}, {}, N));
    MapGerm L(Gaussian(2) * Jet2::var_x(N), Gaussian(3) * Jet2::var_y(N), N);
    MapGerm Linv = invert(L);
    CHECK(Linv.fx == Gaussian(Rat(1, 2)) * Jet2::var_x(N));
    CHECK(Linv.fy == Gaussian(Rat(1, 3)) * Jet2::var_y(N));

    TestRng rng(23);
    for (int t = 0; t < 6; t++) {
        MapGerm A = random_flat_map(rng, N, 2);
        CHECK(compose(A, invert(A)) == MapGerm::identity(N));
        CHECK(compose(invert(A), A) == MapGerm::identity(N));
        MapGerm B = random_flat_map(rng, N, 3);
        MapGerm C = random_flat_map(rng, N, 2);
        CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
    }
}

TEST_CASE("compose truncation consistency") {
    TestRng rng(24);
    for (int t = 0; t < 6; t++) {
        MapGerm F = random_flat_map(rng, 10, 2);
        MapGerm G = random_flat_map(rng, 10, 2);
        MapGerm full = compose(F, G);
        for (int n = 4; n <= 8; n += 2) {
            MapGerm Ft(F.fx.truncated(n), F.fy.truncated(n), n);
            MapGerm Gt(G.fx.truncated(n), G.fy.truncated(n), n);
            MapGerm small = compose(Ft, Gt);
            CHECK(small.fx == full.fx.truncated(n));
            CHECK(small.fy == full.fy.truncated(n));
        }
    }
}

TEST_CASE("jacobian examples and Leibniz rule") {
    int N = 8;
    auto J = jacobian(MapGerm::identity(N));
    CHECK(J[0] == Jet2::constant(Gaussian(1), N - 1));
    CHECK(J[1].is_zero());
    CHECK(J[2].is_zero());
    CHECK(J[3] == Jet2::constant(Gaussian(1), N - 1));

    // jacobian((x+y^2, y)) = [[1, 2y], [0, 1]]
    auto J2 = jacobian(germ2v({{1, 0, 2}}, {}, N));
    CHECK(J2[0] == Jet2::constant(Gaussian(1), N - 1));
    CHECK(J2[1] == mono(2, 0, 1, N - 1));
    CHECK(J2[2].is_zero());
    CHECK(J2[3] == Jet2::constant(Gaussian(1), N - 1));

    TestRng rng(25);
    for (int t = 0; t < 10; t++) {
        Jet2 f = random_flat_map(rng, N, 2).fx;
        Jet2 g = random_flat_map(rng, N, 2).fy;
        CHECK((f * g).dx() == f.dx() * g.truncated(N - 1) + f.truncated(N - 1) * g.dx());
        CHECK((f * g).dy() == f.dy() * g.truncated(N - 1) + f.truncated(N - 1) * g.dy());
    }
}

TEST_CASE("pushforward examples") {
    int N = 8;
    VFieldGerm R = VFieldGerm::radial(N);

    // linear diagonal map preserves the radial field
    MapGerm A(Gaussian(2) * Jet2::var_x(N), Gaussian(3) * Jet2::var_y(N), N);
    CHECK(pushforward(A, R) == VFieldGerm::radial(N - 1));

    TestRng rng(26);
    VFieldGerm X = random_flat_field(rng, N, 2);
    VFieldGerm PX = pushforward(MapGerm::identity(N), X);
    CHECK(PX.vx == X.vx.truncated(N - 1));
    CHECK(PX.vy == X.vy.truncated(N - 1));

    // (x+y^2, y) pushes R to R + y^2 d/dx
    MapGerm F = germ2v({{1, 0, 2}}, {}, N);
    VFieldGerm P = pushforward(F, R);
    CHECK(P.vx == Jet2::var_x(N - 1) + mono(1, 0, 2, N - 1));
    CHECK(P.vy == Jet2::var_y(N - 1));
}

TEST_CASE("pushforward functoriality") {
    int N = 8;
    TestRng rng(27);
    for (int t = 0; t < 4; t++) {
        MapGerm F = random_flat_map(rng, N, 2, 3);
        MapGerm G = random_flat_map(rng, N, 2, 3);
        VFieldGerm X = random_flat_field(rng, N, 2, 3);
        VFieldGerm lhs = pushforward(compose(F, G), X);
        VFieldGerm inner = pushforward(G, X);
        // repeat at the dropped order to compare like with like
        MapGerm Ft(F.fx.truncated(N - 1), F.fy.truncated(N - 1), N - 1);
        VFieldGerm rhs = pushforward(Ft, inner);
        CHECK(lhs.vx.truncated(N - 2) == rhs.vx);
        CHECK(lhs.vy.truncated(N - 2) == rhs.vy);
    }
}

TEST_CASE("flat_order classification") {
    int N = 8;
    CHECK(flat_order(germ2v({{1, 2, 0}}, {{1, 1, 1}}, N)).j == 2);
    MapGerm L(Gaussian(2) * Jet2::var_x(N), Jet2::var_y(N), N);
    CHECK(flat_order(L).kind == FlatOrder::NotTangent);
    CHECK(flat_order(MapGerm::identity(N)).kind == FlatOrder::IdentityToOrder);
}

TEST_CASE("jet1 compose and invert") {
    TestRng rng(28);
    for (int t = 0; t < 10; t++) {
        Jet1 h = random_jet1_tangent(rng, 12);
        Jet1 g = jet1_invert(h);
        CHECK(jet1_compose(h, g) == Jet1::var(12));
        CHECK(jet1_compose(g, h) == Jet1::var(12));
    }
    // non-identity linear part
    Jet1 h(8);
    h.set_coeff(1, Gaussian(2));
    h.set_coeff(2, Gaussian(1));
    Jet1 g = jet1_invert(h);
    CHECK(jet1_compose(h, g) == Jet1::var(8));
}
