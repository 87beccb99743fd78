#pragma once
#include "germ2/chartmap.hpp"
#include "germ2/germ.hpp"

namespace germ2 {

/// Direction data extracted from the degree-(k+1) part:
/// p(v) = p_{k+1}(1,v), r(v) = q_{k+1}(1,v) - v p_{k+1}(1,v).
/// The sign of r is the chart-consistent one, making v1 = v + x^k r(v) + ...
/// literally true in chart 1.
struct DirectionData {
    int k;
    Poly1 p, r;
    std::vector<Gaussian> rational_roots;
    std::vector<int> root_multiplicities; // parallel to rational_roots
    bool infinity_is_characteristic;
    bool dicritic() const { return r.is_zero(); }
};

struct CharDirection {
    bool at_infinity;
    Gaussian v; // direction (1 : v) when finite
    Gaussian lambda;
    bool degenerate; // lambda == 0
};

struct CharDirections {
    bool all_directions; // dicritic germ: every direction is characteristic
    int k;
    std::vector<CharDirection> dirs; // dicritic: the degenerate ones (zeros of f)
};

// Chart-1 blow-up y = vx: (x, v) -> (F_x(x,vx), F_y(x,vx)/F_x(x,vx)),
// truncated at x-order N-1. Coefficients are polynomials in v.
SemiSeries blowup_chart1(const MapGerm& F);

// Chart-2 blow-up x = sy, roles of the variables swapped.
SemiSeries blowup_chart2(const MapGerm& F);

// Rewrites a chart-1 series through (y, s) = (vx, 1/v). Errors when a
// coefficient keeps a pole at the patching locus s = 0.
SemiSeries chart_transition(const SemiSeries& S);

DirectionData direction_data(const MapGerm& F);

CharDirections characteristic_directions(const MapGerm& F);

// denominators different from 1, rendered, with their rational roots
std::vector<std::string> semiseries_pole_report(const SemiSeries& S);

std::string semiseries_json(const SemiSeries& S);

} // namespace germ2
