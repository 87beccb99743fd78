#include "germ2/normalform.hpp"
#include "germ2/dynamics.hpp"
#include "germ2/lie.hpp"
#include "germ2/error.hpp"
#include <json.hpp>
#include <limits>

namespace germ2 {

std::pair<RatFunc, RatFunc> solve_homological_dicritic(
    int k, int l, const Poly1& p, const RatFunc& phi1, const RatFunc& phi2) {
    if (p.is_zero()) throw MathError("normalform: p must be nonzero");
    if (l < 1) throw MathError("normalform: step index must be positive");
    if (l == k) throw MathError("resonant step, use dicritic_normal_form");
    RatFunc rp(p);
    RatFunc h2 = -phi2 / (RatFunc(Gaussian(l)) * rp);
    RatFunc h1 = (phi1 - RatFunc(p.derivative()) * h2) / (RatFunc(Gaussian(k - l)) * rp);
    return {h1, h2};
}

namespace {

int chart_leading_k(const SemiSeries& S) {
    int ka = 0, kb = 0;
    for (int j = 2; j <= S.order; j++)
        if (!S.xcoeffs[j].is_zero()) { ka = j - 1; break; }
    for (int j = 1; j <= S.order; j++)
        if (!S.vcoeffs[j].is_zero()) { kb = j; break; }
    if (ka == 0) return kb;
    if (kb == 0) return ka;
    return std::min(ka, kb);
}

SemiSeries single_step(int order, int l, const RatFunc& h1, const RatFunc& h2) {
    SemiSeries H(order, RatFunc());
    if (l + 1 <= order) H.xcoeffs[l + 1] = h1;
    if (l <= order) H.vcoeffs[l] = h2;
    return H;
}

} // namespace

DicriticNormalForm dicritic_normal_form(const SemiSeries& S, int xorder, const RatFunc& h1k) {
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    for (int j = 1; j <= std::min(k, S.order); j++)
        if (!S.vcoeffs[j].is_zero()) throw MathError("normalform: non-dicritic input");
    int use = xorder > 0 ? xorder : 2 * k + 1;
    if (use > S.order) use = S.order;
    if (use < 2 * k + 1) throw MathError("normalform: x-order too small, need 2k+1");
    if (!S.xcoeffs[k + 1].is_polynomial())
        throw MathError("normalform: leading coefficient p is not polynomial");

    DicriticNormalForm out;
    out.k = k;
    out.p = S.xcoeffs[k + 1].as_poly();
    RatFunc p(out.p);
    RatFunc dp(out.p.derivative());

    SemiSeries F = S.truncated(use);
    int jmax = use - k - 1;
    for (int j = 1; j <= jmax; j++) {
        RatFunc h1, h2;
        if (j != k) {
            // phi in the (G - F) convention; G vanishes at these degrees
            RatFunc phi1 = -F.xcoeffs[k + j + 1];
            RatFunc phi2 = -F.vcoeffs[k + j];
            std::tie(h1, h2) = solve_homological_dicritic(k, j, out.p, phi1, phi2);
        } else {
            // resonant step: solvability defines q, the first row leaves h1 free
            h2 = F.vcoeffs[2 * k] / (RatFunc(Gaussian(k)) * p);
            out.q = F.xcoeffs[2 * k + 1] + dp * h2;
            h1 = h1k;
        }
        SemiSeries H = single_step(use, j, h1, h2);
        F = chart_conjugate(H, F);
        out.conjugator_steps.push_back({j, h1, h2});

        // the step must clear its degree exactly
        RatFunc target1 = (k + j + 1 == 2 * k + 1) ? out.q : RatFunc();
        if (!(F.xcoeffs[k + j + 1] - target1).is_zero() || !F.vcoeffs[k + j].is_zero())
            throw MathError("normalform: homological step left a nonzero residual");
    }
    return out;
}

DicriticNormalForm dicritic_normal_form(const MapGerm& F, int xorder) {
    DicriticInfo info = is_dicritic(F);
    if (!info.tangent || !info.dicritic) throw MathError("normalform: non-dicritic input");
    return dicritic_normal_form(blowup_chart1(F), xorder);
}

namespace {

template <class K> K scalar_cast(const Gaussian& g);
template <> Gaussian scalar_cast<Gaussian>(const Gaussian& g) { return g; }
template <> std::complex<double> scalar_cast<std::complex<double>>(const Gaussian& g) {
    return g.to_complex();
}

bool unit_ok(const Gaussian& g) { return !g.is_zero(); }
bool unit_ok(const std::complex<double>& z) { return std::abs(z) > 1e-13; }

template <class K>
Jet1T<K> expand_poly(const Poly1& p, const K& v0, int uord) {
    int deg = p.degree();
    Jet1T<K> r(uord);
    if (deg < 0) return r;
    std::vector<K> b(deg + 1, K(0));
    for (int d = 0; d <= deg; d++) b[d] = scalar_cast<K>(p.coeff(d));
    for (int pass = 0; pass < deg; pass++)
        for (int j = deg - 1; j >= pass; j--)
            b[j] = b[j] + v0 * b[j + 1];
    for (int d = 0; d <= std::min(deg, uord); d++) r.set_coeff(d, b[d]);
    return r;
}

template <class K>
Jet1T<K> expand_ratfunc(const RatFunc& f, const K& v0, int uord) {
    Jet1T<K> n = expand_poly(f.num(), v0, uord);
    Jet1T<K> d = expand_poly(f.den(), v0, uord);
    if (!unit_ok(d.coeff(0))) throw MathError("normalform: coefficient has a pole at v0");
    return n * d.inverse();
}

template <class K>
struct ReduceOut {
    K lambda, a, p0, s0;
    int k;
};

// Step-by-step reduction to F_lambda around v0, all coefficients as local
// series in u = v - v0. The per-degree linear systems are upper triangular:
//   [ (k-l)p0 - s0 m , p'(v0) ; 0 , s0(1-m) - l p0 ].
template <class K>
ReduceOut<K> lambda_reduce(const SemiSeries& S, const K& v0, int vorder) {
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    if (S.order < 2 * k + 1) throw MathError("insufficient order");
    int use = 2 * k + 1;
    // Taylor compositions apply term-wise jet derivatives, each of which loses
    // one valid top degree. Solving every step deeper than requested and
    // padding the expansion order keeps all read-out degrees <= vorder honest.
    int depth = vorder + 2 * use * (k + 1);
    int uord = depth + use + 1;

    using J = Jet1T<K>;
    J zero(uord);
    ChartMap<J> F(use, zero);
    for (int j = 2; j <= use; j++) F.xcoeffs[j] = expand_ratfunc(S.xcoeffs[j], v0, uord);
    for (int j = 1; j <= use; j++) F.vcoeffs[j] = expand_ratfunc(S.vcoeffs[j], v0, uord);

    J P = F.xcoeffs[k + 1];
    J R = F.vcoeffs[k];
    if (!scalar_is_zero(R.coeff(0)) && unit_ok(R.coeff(0)))
        throw MathError("normalform: v0 is not a root of r");
    R.set_coeff(0, K(0));
    F.vcoeffs[k] = R;
    K p0 = P.coeff(0), s0 = R.coeff(1), dp0 = ring_derivative(P).coeff(0);
    if (!unit_ok(s0)) throw MathError("normalform: non-simple root");

    ReduceOut<K> out;
    out.k = k;
    out.p0 = p0;
    out.s0 = s0;
    out.a = p0 / s0;

    auto from_long = [](long n) { return scalar_from_long((K*)nullptr, n); };

    for (int l = 1; l <= k; l++) {
        J phi1 = -F.xcoeffs[k + l + 1];
        J phi2 = -F.vcoeffs[k + l];
        J h1 = zero, h2 = zero;
        for (int m = 0; m <= depth; m++) {
            // current residual of the step equation L(h) = phi
            J L1 = -(R * ring_derivative(h1)) + from_long(k - l) * (P * h1) + ring_derivative(P) * h2;
            J L2 = -(R * ring_derivative(h2)) + from_long(k) * (R * h1) +
                   (ring_derivative(R) - from_long(l) * P) * h2;
            K rho1 = phi1.coeff(m) - L1.coeff(m);
            K rho2 = phi2.coeff(m) - L2.coeff(m);
            K c1 = from_long(k - l) * p0 - from_long(m) * s0;
            K c2 = from_long(1 - m) * s0 - from_long(l) * p0;
            if (!unit_ok(c2))
                throw MathError("normalform: per-degree system singular at degree " +
                                std::to_string(m));
            K h2m = rho2 / c2;
            if (l == k && m == 0) {
                // resonant entry: the constant restoring solvability is lambda
                out.lambda = dp0 * h2m - rho1;
                phi1.set_coeff(0, phi1.coeff(0) + out.lambda);
                h2.set_coeff(0, h2m);
                continue; // h1 constant term stays free, normalized to zero
            }
            if (!unit_ok(c1))
                throw MathError("normalform: per-degree system singular at degree " +
                                std::to_string(m));
            K h1m = (rho1 - dp0 * h2m) / c1;
            h1.set_coeff(m, h1m);
            h2.set_coeff(m, h2m);
        }
        if (l == k) break; // lambda extracted; the remaining conjugation is not needed
        ChartMap<J> H(use, zero);
        H.xcoeffs[l + 1] = h1;
        H.vcoeffs[l] = h2;
        F = chart_conjugate(H, F);
    }
    return out;
}

} // namespace

LocalInvariant lambda_invariant(const SemiSeries& S, const Gaussian& v0, int vorder) {
    // exact-mode hypothesis checks
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    const RatFunc& r = S.vcoeffs[k];
    if (r.is_zero()) throw MathError("normalform: r vanishes identically, use dicritic_normal_form");
    if (!r.eval(v0).is_zero()) throw MathError("normalform: v0 is not a root of r");
    Gaussian rp = r.derivative().eval(v0);
    if (rp.is_zero()) throw MathError("normalform: non-simple root");
    Gaussian pv = S.xcoeffs[k + 1].eval(v0);
    Gaussian a = pv / rp;
    if (a.is_zero() || a.is_rational())
        throw MathError("resonant ratio, theorem hypothesis fails");

    auto red = lambda_reduce<Gaussian>(S, v0, vorder);
    LocalInvariant li;
    li.mode = LocalInvariant::Exact;
    li.v0 = v0;
    li.lambda = red.lambda;
    li.a = a;
    return li;
}

LocalInvariant lambda_invariant_numeric(const SemiSeries& S, std::complex<double> v0_seed,
                                        int vorder, double tol) {
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    const RatFunc& r = S.vcoeffs[k];
    if (r.is_zero()) throw MathError("normalform: r vanishes identically, use dicritic_normal_form");

    // Newton refinement on the numerator of r
    std::complex<double> z = v0_seed;
    const Poly1& rn = r.num();
    Poly1 rnd = rn.derivative();
    for (int it = 0; it < 60; it++) {
        std::complex<double> f = rn.eval(z), df = rnd.eval(z);
        if (std::abs(df) < 1e-300) break;
        std::complex<double> step = f / df;
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    double residual = std::abs(r.eval(z));
    std::complex<double> rp = r.derivative().eval(z);
    if (std::abs(rp) < tol) throw MathError("normalform: non-simple root");
    std::complex<double> a = S.xcoeffs[k + 1].eval(z) / rp;

    // distance of a to the nearest small-denominator rational
    double dist = std::numeric_limits<double>::infinity();
    for (long q = 1; q <= 64; q++) {
        double pr = std::round(a.real() * q);
        dist = std::min(dist, std::hypot(a.real() - pr / q, a.imag()));
    }
    if (std::abs(a) < tol || dist < tol)
        throw MathError("resonant ratio, theorem hypothesis fails");

    auto red = lambda_reduce<std::complex<double>>(S, z, vorder);
    LocalInvariant li;
    li.mode = LocalInvariant::Numeric;
    li.v0_num = z;
    li.lambda_num = red.lambda;
    li.a_num = a;
    li.root_residual = residual;
    li.rational_distance = dist;
    return li;
}

Poly1 lagrange_LF(const SemiSeries& S, int vorder) {
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    const RatFunc& r = S.vcoeffs[k];
    if (r.is_zero()) throw MathError("degenerate r, L_F undefined");
    std::vector<Gaussian> roots;
    for (auto& [root, mult] : poly_rational_roots(r.num()))
        if (mult == 1 && !r.den().eval(root).is_zero()) roots.push_back(root);
    if ((int)roots.size() != k + 2) throw MathError("degenerate r, L_F undefined");
    std::vector<std::pair<Gaussian, Gaussian>> pts;
    for (auto& root : roots)
        pts.push_back({root, lambda_invariant(S, root, vorder).lambda});
    return lagrange_interpolate(pts);
}

std::vector<std::complex<double>> lagrange_LF_numeric(const SemiSeries& S, int vorder) {
    int k = chart_leading_k(S);
    if (k == 0) throw MathError("normalform: chart series has no leading term");
    const RatFunc& r = S.vcoeffs[k];
    if (r.is_zero()) throw MathError("degenerate r, L_F undefined");
    auto roots = poly_complex_roots(r.num());
    if ((int)roots.size() != k + 2) throw MathError("degenerate r, L_F undefined");
    for (size_t i = 0; i < roots.size(); i++)
        for (size_t j = i + 1; j < roots.size(); j++)
            if (std::abs(roots[i] - roots[j]) < 1e-8)
                throw MathError("degenerate r, L_F undefined");

    std::vector<std::complex<double>> vs, ls;
    for (auto& z : roots) {
        LocalInvariant li = lambda_invariant_numeric(S, z, vorder);
        vs.push_back(li.v0_num);
        ls.push_back(li.lambda_num);
    }
    // complex Lagrange interpolation, coefficients of the result
    size_t n = vs.size();
    std::vector<std::complex<double>> coeffs(n, 0.0);
    for (size_t i = 0; i < n; i++) {
        std::vector<std::complex<double>> basis{1.0};
        std::complex<double> denom = 1.0;
        for (size_t j = 0; j < n; j++) {
            if (i == j) continue;
            std::vector<std::complex<double>> nb(basis.size() + 1, 0.0);
            for (size_t t = 0; t < basis.size(); t++) {
                nb[t] += basis[t] * (-vs[j]);
                nb[t + 1] += basis[t];
            }
            basis = nb;
            denom *= vs[i] - vs[j];
        }
        for (size_t t = 0; t < basis.size(); t++) coeffs[t] += ls[i] / denom * basis[t];
    }
    return coeffs;
}

std::pair<int, Gaussian> residue_1d(const Jet1& h) {
    int N = h.order();
    if (!h.coeff(0).is_zero() || !h.coeff(1).is_one())
        throw MathError("normalform: residue needs a tangent-to-identity 1-D germ");
    Jet1 dev = h - Jet1::var(N);
    int low = dev.low_degree();
    if (low > N) throw MathError("normalform: residue of the identity is undefined");
    int k = low - 1;
    if (N < 2 * k + 1) throw MathError("insufficient order");
    Gaussian a = dev.coeff(low);
    // 1/(h-x) = x^{-k-1} (1/a) (1+e)^{-1}; the x^{-1} coefficient is [x^k] of that unit
    int m = N - k - 1;
    Jet1 unit(m);
    unit.set_coeff(0, Gaussian(1));
    Gaussian ainv = a.inv();
    for (int j = 1; j <= m; j++) unit.set_coeff(j, ainv * dev.coeff(k + 1 + j));
    Jet1 inv = unit.inverse();
    return {k, ainv * inv.coeff(k)};
}

std::string dicritic_normal_form_json(const DicriticNormalForm& nf) {
    nlohmann::json j;
    j["k"] = nf.k;
    j["p"] = poly_str(nf.p);
    j["q"]["num"] = poly_str(nf.q.num());
    j["q"]["den"] = poly_str(nf.q.den());
    j["q"]["rendered"] = nf.q.str();
    nlohmann::json steps = nlohmann::json::array();
    for (auto& s : nf.conjugator_steps)
        steps.push_back({{"l", s.l}, {"h1", s.h1.str()}, {"h2", s.h2.str()}});
    j["conjugator_steps"] = steps;
    return j.dump(2);
}

std::string local_invariant_json(const LocalInvariant& li) {
    nlohmann::json j;
    if (li.mode == LocalInvariant::Exact) {
        j["mode"] = "exact";
        j["v0"] = gaussian_str(li.v0);
        j["lambda"] = gaussian_str(li.lambda);
        j["a"] = gaussian_str(li.a);
    } else {
        j["mode"] = "numeric";
        j["v0"] = {li.v0_num.real(), li.v0_num.imag()};
        j["lambda"] = {li.lambda_num.real(), li.lambda_num.imag()};
        j["a"] = {li.a_num.real(), li.a_num.imag()};
        j["root_residual"] = li.root_residual;
        j["rational_distance"] = li.rational_distance;
    }
    return j.dump(2);
}

} // namespace germ2
