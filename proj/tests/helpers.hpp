#pragma once
#include "germ2/lie.hpp"
#include "germ2/blowup.hpp"
#include <vector>
#include <tuple>

namespace germ2::testing {

struct TestRng {
    uint64_t state;
    explicit TestRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
    bool chance(int percent) { return range(0, 99) < percent; }

    Gaussian small_scalar(bool allow_i = true) {
        Rat re(range(-3, 3), range(1, 2));
        re.canonicalize();
        if (allow_i && chance(30)) {
            Rat im(range(-2, 2), 1);
            return Gaussian(re, im);
        }
        return Gaussian(re);
    }
    Gaussian nonzero_scalar(bool allow_i = true) {
        while (true) {
            Gaussian g = small_scalar(allow_i);
            if (!g.is_zero()) return g;
        }
    }
};

inline Jet2 mono(const Gaussian& c, int i, int j, int N) { return Jet2::monomial(c, i, j, N); }
inline Jet2 mono(long c, int i, int j, int N) { return Jet2::monomial(Gaussian(c), i, j, N); }

inline MapGerm germ2v(std::vector<std::tuple<long, int, int>> fx,
                      std::vector<std::tuple<long, int, int>> fy, int N) {
    Jet2 a = Jet2::var_x(N), b = Jet2::var_y(N);
    for (auto& [c, i, j] : fx) a += mono(c, i, j, N);
    for (auto& [c, i, j] : fy) b += mono(c, i, j, N);
    return MapGerm(a, b, N);
}

inline VFieldGerm field2v(std::vector<std::tuple<long, int, int>> vx,
                          std::vector<std::tuple<long, int, int>> vy, int N) {
    Jet2 a(N), b(N);
    for (auto& [c, i, j] : vx) a += mono(c, i, j, N);
    for (auto& [c, i, j] : vy) b += mono(c, i, j, N);
    return VFieldGerm(a, b, N);
}

// identity + a few random terms of total degree in [flat_j, maxdeg]
inline MapGerm random_flat_map(TestRng& rng, int N, int flat_j, int terms = 5,
                               int maxdeg = -1, bool allow_i = true) {
    if (maxdeg < 0) maxdeg = N;
    while (true) {
        Jet2 fx = Jet2::var_x(N), fy = Jet2::var_y(N);
        for (int t = 0; t < terms; t++) {
            int d = (int)rng.range(flat_j, maxdeg);
            int i = (int)rng.range(0, d);
            Gaussian c = rng.small_scalar(allow_i);
            if (rng.chance(50)) fx += mono(c, i, d - i, N);
            else fy += mono(c, i, d - i, N);
        }
        MapGerm F(fx, fy, N);
        FlatOrder fo = flat_order(F);
        if (fo.kind == FlatOrder::Flat && fo.j == flat_j) return F;
    }
}

inline VFieldGerm random_flat_field(TestRng& rng, int N, int flat_j, int terms = 5,
                                    int maxdeg = -1, bool allow_i = true) {
    if (maxdeg < 0) maxdeg = N;
    while (true) {
        Jet2 vx(N), vy(N);
        for (int t = 0; t < terms; t++) {
            int d = (int)rng.range(flat_j, maxdeg);
            int i = (int)rng.range(0, d);
            Gaussian c = rng.small_scalar(allow_i);
            if (rng.chance(50)) vx += mono(c, i, d - i, N);
            else vy += mono(c, i, d - i, N);
        }
        VFieldGerm X(vx, vy, N);
        if (!X.is_zero() && X.low_degree() == flat_j) return X;
    }
}

inline Jet1 random_jet1_tangent(TestRng& rng, int N, int flat_j = 2, int terms = 4) {
    Jet1 h = Jet1::var(N);
    for (int t = 0; t < terms; t++) {
        int d = (int)rng.range(flat_j, N);
        h.set_coeff(d, h.coeff(d) + rng.small_scalar());
    }
    if (h.coeff(flat_j).is_zero()) h.set_coeff(flat_j, rng.nonzero_scalar());
    return h;
}

// random dicritic germ: id + f.(x,y) + higher terms, f homogeneous of degree k
inline MapGerm random_dicritic(TestRng& rng, int N, int k, int fdeg_terms = 2,
                               int extra_terms = 3) {
    while (true) {
        Jet2 f(N);
        for (int t = 0; t < fdeg_terms; t++) {
            int i = (int)rng.range(0, k);
            f += mono(rng.small_scalar(), i, k - i, N);
        }
        if (f.is_zero()) continue;
        Jet2 fx = Jet2::var_x(N) + f * Jet2::var_x(N);
        Jet2 fy = Jet2::var_y(N) + f * Jet2::var_y(N);
        for (int t = 0; t < extra_terms; t++) {
            int d = (int)rng.range(k + 2, std::min(N, k + 4));
            int i = (int)rng.range(0, d);
            Gaussian c = rng.small_scalar();
            if (rng.chance(50)) fx += mono(c, i, d - i, N);
            else fy += mono(c, i, d - i, N);
        }
        MapGerm F(fx, fy, N);
        DicriticInfo info = is_dicritic(F);
        if (info.dicritic && info.k == k) return F;
    }
}

} // namespace germ2::testing
