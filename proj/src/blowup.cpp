#include "germ2/blowup.hpp"
#include "germ2/lie.hpp"
#include "germ2/error.hpp"
#include <json.hpp>
#include <algorithm>

namespace germ2 {

namespace {

// component P evaluated at (x, vx), as an x-series of Poly1-in-v coefficients
std::vector<Poly1> substitute_ray(const Jet2& P, int nmax) {
    std::vector<Poly1> out(nmax + 1);
    for (auto& [m, c] : P.terms()) {
        int d = m.total();
        if (d > nmax) break;
        out[d] += Poly1::monomial(c, m.j); // x^i (vx)^j = v^j x^{i+j}
    }
    return out;
}

Poly1 dehomog(const Jet2& h, int deg) {
    Poly1 p;
    for (auto& [m, c] : h.terms())
        if (m.total() == deg) p += Poly1::monomial(c, m.j);
    return p;
}

MapGerm swap_coords(const MapGerm& F) {
    auto transpose = [](const Jet2& g) {
        Jet2 r(g.order());
        for (auto& [m, c] : g.terms()) r.set_coeff(m.j, m.i, c);
        return r;
    };
    return MapGerm(transpose(F.fy), transpose(F.fx), F.order);
}

} // namespace

SemiSeries blowup_chart1(const MapGerm& F) {
    FlatOrder fo = flat_order(F);
    if (fo.kind == FlatOrder::NotTangent)
        throw MathError("blowup: F not tangent to identity");
    int N = F.order;
    int M = N - 1; // x-order of the chart series
    SemiSeries S(M, RatFunc());

    auto xs = substitute_ray(F.fx, N); // xs[1] = 1
    auto ys = substitute_ray(F.fy, N); // ys[1] = v

    for (int d = 2; d <= M; d++) S.xcoeffs[d] = RatFunc(xs[d]);

    // v1 = (v + sum_{d>=2} ys[d] x^{d-1}) / (1 + sum_{d>=2} xs[d] x^{d-1})
    std::vector<RatFunc> num(M + 1), den(M + 1);
    num[0] = RatFunc(Poly1::var());
    den[0] = RatFunc(1);
    for (int d = 2; d <= N && d - 1 <= M; d++) {
        num[d - 1] = RatFunc(ys[d]);
        den[d - 1] = RatFunc(xs[d]);
    }
    auto deninv = chart_detail::xinv(den, M);
    auto v1 = chart_detail::xmul(num, deninv, M, RatFunc());
    for (int e = 1; e <= M; e++) S.vcoeffs[e] = v1[e];
    return S;
}

SemiSeries blowup_chart2(const MapGerm& F) {
    return blowup_chart1(swap_coords(F));
}

SemiSeries chart_transition(const SemiSeries& S) {
    int M = S.order;
    RatFunc v(Poly1::var());

    // first component series X = x + sum a_j x^j, second V = v + sum b_j x^j
    std::vector<RatFunc> X(M + 1), V(M + 1);
    X[1] = RatFunc(1);
    V[0] = v;
    for (int j = 2; j <= M; j++) X[j] = S.xcoeffs[j];
    for (int j = 1; j <= M; j++) V[j] = S.vcoeffs[j];

    // Y = X*V as an x-series; S_out = 1/V
    auto W = chart_detail::xmul(X, V, M, RatFunc());
    auto Vinv = chart_detail::xinv(V, M);

    SemiSeries T(M, RatFunc());
    std::vector<std::string> poles;
    auto move_coeff = [&](const RatFunc& c, int j) {
        RatFunc moved = c.reciprocal_scaled(j); // c(1/s) s^j
        if (moved.den().eval(Gaussian(0)).is_zero())
            poles.push_back(moved.str("s"));
        return moved;
    };
    for (int j = 2; j <= M; j++)
        if (!W[j].is_zero()) T.xcoeffs[j] = move_coeff(W[j], j);
    for (int e = 1; e <= M; e++)
        if (!Vinv[e].is_zero()) T.vcoeffs[e] = move_coeff(Vinv[e], e);
    if (!poles.empty()) {
        std::string msg = "blowup: transition pole at patching locus:";
        for (auto& p : poles) msg += " " + p;
        throw MathError(msg);
    }
    return T;
}

DirectionData direction_data(const MapGerm& F) {
    FlatOrder fo = flat_order(F);
    if (fo.kind != FlatOrder::Flat)
        throw MathError("blowup: germ has no leading flat part");
    int k = fo.j - 1;
    Jet2 px = (F.fx - Jet2::var_x(F.order)).homogeneous_part(k + 1);
    Jet2 qy = (F.fy - Jet2::var_y(F.order)).homogeneous_part(k + 1);
    DirectionData D;
    D.k = k;
    D.p = dehomog(px, k + 1);
    D.r = dehomog(qy, k + 1) - Poly1::var() * D.p;
    if (!D.r.is_zero()) {
        for (auto& [root, mult] : poly_rational_roots(D.r)) {
            D.rational_roots.push_back(root);
            D.root_multiplicities.push_back(mult);
        }
    }
    // chart-2 analogue r2(s) = p_{k+1}(s,1) - s q_{k+1}(s,1) vanishing at 0
    D.infinity_is_characteristic = px.coeff(0, k + 1).is_zero();
    return D;
}

CharDirections characteristic_directions(const MapGerm& F) {
    DirectionData D = direction_data(F);
    CharDirections out;
    out.k = D.k;
    out.all_directions = D.dicritic();
    if (out.all_directions) {
        DicriticInfo info = is_dicritic(F);
        // the degenerate directions are the zeros of f
        Poly1 f1 = dehomog(info.f, D.k);
        for (auto& [root, mult] : poly_rational_roots(f1)) {
            (void)mult;
            out.dirs.push_back({false, root, Gaussian(0), true});
        }
        if (info.f.coeff(0, D.k).is_zero())
            out.dirs.push_back({true, Gaussian(0), Gaussian(0), true});
        return out;
    }
    for (auto& root : D.rational_roots) {
        Gaussian lambda = D.p.eval(root);
        out.dirs.push_back({false, root, lambda, lambda.is_zero()});
    }
    if (D.infinity_is_characteristic) {
        Gaussian lambda = (F.fy - Jet2::var_y(F.order)).coeff(0, D.k + 1);
        out.dirs.push_back({true, Gaussian(0), lambda, lambda.is_zero()});
    }
    return out;
}

std::vector<std::string> semiseries_pole_report(const SemiSeries& S) {
    std::vector<std::string> dens;
    auto note = [&](const RatFunc& c) {
        if (c.is_polynomial()) return;
        std::string d = poly_str(c.den());
        if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    };
    for (auto& c : S.xcoeffs) note(c);
    for (auto& c : S.vcoeffs) note(c);
    return dens;
}

std::string semiseries_json(const SemiSeries& S) {
    nlohmann::json j;
    j["order"] = S.order;
    std::vector<std::string> xs, vs;
    for (int d = 0; d <= S.order; d++) {
        xs.push_back(S.xcoeffs[d].str());
        vs.push_back(S.vcoeffs[d].str());
    }
    j["xcoeffs"] = xs;
    j["vcoeffs"] = vs;
    j["poles"] = semiseries_pole_report(S);
    return j.dump(2);
}

} // namespace germ2
