#pragma once
#include <complex>
#include <optional>
#include "germ2/blowup.hpp"

namespace germ2 {

/// Result of the dicritic reduction: F is semiformally conjugate to
/// G_F = (x + x^{k+1} p(v) + x^{2k+1} q(v), v), with the conjugator built
/// from the recorded single-degree steps applied in order.
struct DicriticNormalForm {
    int k;
    Poly1 p;
    RatFunc q;
    struct Step {
        int l;
        RatFunc h1, h2; // H_l = (x + x^{l+1} h1(v), v + x^l h2(v))
    };
    std::vector<Step> conjugator_steps;
};

struct LocalInvariant {
    enum Mode { Exact, Numeric } mode;
    // exact mode
    Gaussian v0, lambda, a; // a = p(v0)/r'(v0)
    // numeric mode
    std::complex<double> v0_num, lambda_num, a_num;
    double root_residual = 0.0;      // |r(v0)| at the refined root
    double rational_distance = 0.0;  // distance of a to the nearest small rational
};

// Unique solution of the dicritic homological system
//   (k-l) p h1 + p' h2 = phi1,   -l p h2 = phi2.
// Errors: l == k is the resonant step.
std::pair<RatFunc, RatFunc> solve_homological_dicritic(
    int k, int l, const Poly1& p, const RatFunc& phi1, const RatFunc& phi2);

// Successive-approximation reduction of a dicritic chart series. xorder <= 0
// means the default working order 2k+1 (just enough to define q).
// h1k is the free first component at the resonant step, normally zero.
DicriticNormalForm dicritic_normal_form(const SemiSeries& S, int xorder = -1,
                                        const RatFunc& h1k = RatFunc());
DicriticNormalForm dicritic_normal_form(const MapGerm& F, int xorder = -1);

// Local invariant lambda_{v0} at a simple root v0 of r with
// a = p(v0)/r'(v0) not rational and nonzero. All coefficient functions are
// expanded as series in v - v0 to order vorder and Eq. (difer1) is solved
// degree by degree; the resonant constant restoring solvability is lambda.
LocalInvariant lambda_invariant(const SemiSeries& S, const Gaussian& v0, int vorder);
LocalInvariant lambda_invariant_numeric(const SemiSeries& S, std::complex<double> v0_seed,
                                        int vorder, double tol = 1e-8);

// Lagrange interpolation polynomial through (v_i, lambda_{v_i}) over the k+2
// simple roots of r. Exact mode: all roots must lie in Q(i).
Poly1 lagrange_LF(const SemiSeries& S, int vorder);
std::vector<std::complex<double>> lagrange_LF_numeric(const SemiSeries& S, int vorder);

// k and the coefficient of x^-1 in the Laurent expansion of 1/(h(x)-x).
// For h = x + a x^{k+1} + b x^{2k+1} + (killed intermediate terms), c = -b/a^2.
std::pair<int, Gaussian> residue_1d(const Jet1& h);

std::string dicritic_normal_form_json(const DicriticNormalForm& nf);
std::string local_invariant_json(const LocalInvariant& li);

} // namespace germ2
