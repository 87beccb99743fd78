#pragma once
#include <complex>
#include <vector>
#include <cstdint>
#include "germ2/germ.hpp"
#include "germ2/blowup.hpp"

namespace germ2 {

using Cx = std::complex<double>;

struct OrbitRecord {
    int k = 1; // flatness index used for the seq1 samples
    std::vector<Cx> xs, ys;
    std::vector<Cx> blowup_track;  // v_n = y_n / x_n
    std::vector<Cx> seq1_samples;  // 1/(n x_n^k)
    enum Stop { MaxIterations, EscapedRadius, ConvergedBelowEpsilon } stopped;
    size_t steps() const { return xs.empty() ? 0 : xs.size() - 1; }
};

struct SectorSpec {
    int k;
    Cx p0;
    double R;
    double r;
    double aperture = 2.0943951023931953; // 2 pi / 3
    int branch = 0;                       // sheet of w = 1/x^k, in [0, k)
};

struct Seq1Result {
    Cx limit_estimate; // tail-windowed Cesaro mean of 1/(n x_n^k)
    Cx target;         // -k p(v_limit)
    double error;
};

struct FlowerReport {
    int samples;
    int excluded_floor = 0; // direction draws rejected by the |p| floor
    int forward_converged = 0, backward_converged = 0;
    double R_used = 0, r_used = 0, p_floor = 0;
    double max_direction_residual = 0; // |r(v_limit)| over converged orbits
    uint64_t seed = 0;
    bool success() const {
        return forward_converged == samples && backward_converged == samples;
    }
};

struct RootClass {
    Cx v0;
    Cx ratio; // r'(v0) / p(v0), chart-consistent sign of r
    enum Orientation { ForwardAttracting, BackwardAttracting, Undetermined } orientation;
    int probes = 0, agreeing = 0;
    bool exact_root = false;
};

// fixed-precision float evaluation of a germ's polynomial representative
struct CompiledGerm {
    struct Term { int i, j; Cx c; };
    std::vector<Term> tx, ty;
    int max_deg = 0;
    explicit CompiledGerm(const MapGerm& F);
    std::pair<Cx, Cx> eval(const Cx& x, const Cx& y) const;
};

OrbitRecord iterate_orbit(const MapGerm& F, Cx x0, Cx y0, int n_max,
                          double escape_radius = 10.0);

Seq1Result seq1_check(const MapGerm& F, Cx x0, Cx y0, int n_max);

// limit direction by Richardson extrapolation of v_n and the residual |r(v)|
std::pair<Cx, double> limit_direction_check(const MapGerm& F, const OrbitRecord& orbit);

bool in_sector(const SectorSpec& spec, const Cx& x, const Cx& v);

// Basin verification for a dicritic germ: forward orbits from the V+ sector,
// backward orbits (exact jet inverse) from V-. R < 0 requests auto
// calibration by doubling until the convergent fractions stabilize.
FlowerReport flower_verify(const MapGerm& F, int samples, int n_max,
                           double R = -1.0, double r = 0.25,
                           double p_floor = 0.25, uint64_t seed = 1);

// Orientation of each simple characteristic root, decided by orbit probes:
// probes start beside the root on the forward petal; contraction of |v - v0|
// marks forward-attracting, expansion backward-attracting.
std::vector<RootClass> classify_characteristic_roots(const MapGerm& F, double tolerance,
                                                     int probes = 50, uint64_t seed = 1);

// all complex roots by Durand-Kerner iteration
std::vector<Cx> poly_complex_roots(const Poly1& p);

std::string orbit_csv(const OrbitRecord& orbit, const Poly1& p);
std::string orbit_json_summary(const OrbitRecord& orbit);
std::string flower_json(const FlowerReport& rep);

} // namespace germ2
