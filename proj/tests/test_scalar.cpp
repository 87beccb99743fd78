#include <doctest.h>
#include "germ2/ratfunc.hpp"
#include "helpers.hpp"

using namespace germ2;
using germ2::testing::TestRng;

TEST_CASE("gaussian field axioms on random values") {
    TestRng rng(11);
    for (int t = 0; t < 200; t++) {
        Gaussian a = rng.small_scalar(), b = rng.small_scalar(), c = rng.small_scalar();
        CHECK(a + (-a) == Gaussian(0));
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Gaussian(1));
    }
}

TEST_CASE("gaussian text form round-trips") {
    TestRng rng(12);
    for (int t = 0; t < 200; t++) {
        Gaussian g = rng.small_scalar();
        CHECK(gaussian_parse(gaussian_str(g)) == g);
    }
    CHECK(gaussian_str(Gaussian(Rat(-1, 2), Rat(3, 4))) == "-1/2+3/4*i");
    CHECK(gaussian_str(Gaussian(Rat(0), Rat(-1))) == "-i");
    CHECK(gaussian_parse("1+i") == Gaussian(Rat(1), Rat(1)));
    CHECK(gaussian_parse("3/7") == Gaussian(Rat(3, 7)));
}

TEST_CASE("normalize_ratfunc examples") {
    Poly1 v = Poly1::var();
    RatFunc a = normalize_ratfunc(v * v - v, v);
    CHECK(a == RatFunc(v - Poly1(1)));

    RatFunc b = normalize_ratfunc(v, Poly1(1));
    CHECK(b == RatFunc(v));

    // (2v+2)/(4v+4) reduces to the constant 1/2; checked by evaluation too
    RatFunc c = normalize_ratfunc(Gaussian(2) * v + Poly1(2), Gaussian(4) * v + Poly1(4));
    CHECK(c == RatFunc(Gaussian(Rat(1, 2))));
    CHECK(c.eval(Gaussian(0)) == Gaussian(Rat(1, 2)));
    CHECK(c.eval(Gaussian(1)) == Gaussian(Rat(1, 2)));

    CHECK_THROWS_AS(normalize_ratfunc(v, Poly1()), MathError);
}

TEST_CASE("ratfunc evaluation homomorphism") {
    TestRng rng(13);
    Poly1 v = Poly1::var();
    for (int t = 0; t < 40; t++) {
        RatFunc f(Poly1(std::vector<Gaussian>{rng.small_scalar(), rng.small_scalar(), rng.small_scalar()}),
                  v + Poly1(2));
        RatFunc g(Poly1(std::vector<Gaussian>{rng.small_scalar(), rng.small_scalar()}),
                  v - Poly1(3));
        Gaussian c = rng.small_scalar();
        if (c == Gaussian(-2) || c == Gaussian(3)) continue;
        CHECK((f * g).eval(c) == f.eval(c) * g.eval(c));
        CHECK((f + g).eval(c) == f.eval(c) + g.eval(c));
    }
}

TEST_CASE("lagrange examples and node reproduction") {
    Gaussian l0(Rat(5)), l1(Rat(7, 2));
    Poly1 line = lagrange_interpolate({{Gaussian(0), l0}, {Gaussian(1), l1}});
    CHECK(line.eval(Gaussian(0)) == l0);
    CHECK(line.eval(Gaussian(1)) == l1);
    CHECK(line.degree() <= 1);

    Poly1 c = lagrange_interpolate({{Gaussian(0), Gaussian(5)}});
    CHECK(c == Poly1(5));

    Poly1 sq = lagrange_interpolate({{Gaussian(0), Gaussian(0)},
                                     {Gaussian(1), Gaussian(1)},
                                     {Gaussian(2), Gaussian(4)}});
    CHECK(sq == Poly1::var() * Poly1::var());

    CHECK_THROWS_WITH_AS(lagrange_interpolate({{Gaussian(1), Gaussian(0)}, {Gaussian(1), Gaussian(2)}}),
                         "interpolation nodes not distinct", MathError);

    TestRng rng(14);
    for (int t = 0; t < 20; t++) {
        std::vector<std::pair<Gaussian, Gaussian>> pts;
        for (long v = -2; v <= 2; v++) pts.push_back({Gaussian(v), rng.small_scalar()});
        Poly1 L = lagrange_interpolate(pts);
        for (auto& [x, y] : pts) CHECK(L.eval(x) == y);
    }
}

TEST_CASE("poly gcd, divmod, resultant") {
    Poly1 v = Poly1::var();
    Poly1 a = (v - Poly1(1)) * (v + Poly1(2)) * (v + Poly1(2));
    Poly1 b = (v + Poly1(2)) * (v - Poly1(3));
    CHECK(poly_gcd(a, b) == v + Poly1(2));
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());

    // res(v-a, v-b) = b - a up to the convention sign; vanishes iff equal
    CHECK(poly_resultant(v - Poly1(2), v - Poly1(2)) == Gaussian(0));
    CHECK(poly_resultant(v - Poly1(2), v - Poly1(5)) != Gaussian(0));
    CHECK(poly_resultant((v - Poly1(1)) * v, v * (v + Poly1(4))) == Gaussian(0));
}

TEST_CASE("exact gaussian-rational roots") {
    Poly1 v = Poly1::var();
    Gaussian I = Gaussian::i();
    Poly1 p = (v - Poly1(I)) * (v + Poly1(Gaussian(Rat(1, 2)))) * (v - Poly1(1)) * (v - Poly1(1));
    auto roots = poly_rational_roots(p);
    REQUIRE(roots.size() == 3);
    bool saw_i = false, saw_half = false, saw_one = false;
    for (auto& [root, mult] : roots) {
        if (root == I) { saw_i = true; CHECK(mult == 1); }
        if (root == Gaussian(Rat(-1, 2))) { saw_half = true; CHECK(mult == 1); }
        if (root == Gaussian(1)) { saw_one = true; CHECK(mult == 2); }
    }
    CHECK(saw_i);
    CHECK(saw_half);
    CHECK(saw_one);

    // no rational roots
    CHECK(poly_rational_roots(v * v - Poly1(3)).empty());
}
