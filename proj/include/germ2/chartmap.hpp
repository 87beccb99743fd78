#pragma once
#include <vector>
#include "germ2/ratfunc.hpp"
#include "germ2/jet1.hpp"

namespace germ2 {

// ring glue shared by RatFunc and Jet1T coefficients
inline RatFunc ring_zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc ring_one_like(const RatFunc&) { return RatFunc(1); }
inline RatFunc ring_derivative(const RatFunc& f) { return f.derivative(); }
inline RatFunc ring_div_int(const RatFunc& f, long m) { return f * RatFunc(Gaussian(Rat(1, m))); }
inline bool ring_is_zero(const RatFunc& f) { return f.is_zero(); }

template <class K>
Jet1T<K> ring_zero_like(const Jet1T<K>& s) { return Jet1T<K>(s.order()); }
template <class K>
Jet1T<K> ring_one_like(const Jet1T<K>& s) { return Jet1T<K>::constant(K(1), s.order()); }
// Term-wise derivative at unchanged truncation order. The top coefficient is
// set to zero; users of local-series charts allow vorder slack for this.
template <class K>
Jet1T<K> ring_derivative(const Jet1T<K>& f) {
    Jet1T<K> r(f.order());
    for (int d = 1; d <= f.order(); d++)
        r.set_coeff(d - 1, scalar_from_long((K*)nullptr, d) * f.coeff(d));
    return r;
}
template <class K>
Jet1T<K> ring_div_int(const Jet1T<K>& f, long m) {
    return (K(1) / scalar_from_long((K*)nullptr, m)) * f;
}
template <class K>
bool ring_is_zero(const Jet1T<K>& f) { return f.is_zero(); }

/// Map of the blown-up chart, (x, v) -> (x + sum_j a_j(v) x^j, v + sum_j b_j(v) x^j),
/// truncated in x. Coefficients live in a ring R of functions of the second
/// coordinate: rational functions of v, or truncated local series in v - v0.
/// Slots a[0], a[1], b[0] stay zero.
template <class R>
struct ChartMap {
    int order = 0;
    std::vector<R> xcoeffs, vcoeffs; // indexed by the power of x, size order+1

    ChartMap() = default;
    ChartMap(int order_, const R& zero)
        : order(order_), xcoeffs(order_ + 1, zero), vcoeffs(order_ + 1, zero) {}

    const R& a(int j) const { return xcoeffs[j]; }
    const R& b(int j) const { return vcoeffs[j]; }

    bool is_identity() const {
        for (auto& c : xcoeffs) if (!ring_is_zero(c)) return false;
        for (auto& c : vcoeffs) if (!ring_is_zero(c)) return false;
        return true;
    }

    ChartMap truncated(int n) const {
        ChartMap r(std::min(n, order), ring_zero_like(xcoeffs[0]));
        for (int j = 0; j <= r.order; j++) {
            r.xcoeffs[j] = xcoeffs[j];
            r.vcoeffs[j] = vcoeffs[j];
        }
        return r;
    }

    friend bool operator==(const ChartMap& s, const ChartMap& t) {
        if (s.order != t.order) return false;
        for (int j = 0; j <= s.order; j++) {
            if (!ring_is_zero(s.xcoeffs[j] - t.xcoeffs[j])) return false;
            if (!ring_is_zero(s.vcoeffs[j] - t.vcoeffs[j])) return false;
        }
        return true;
    }
};

namespace chart_detail {

// truncated product of x-series with R coefficients
template <class R>
std::vector<R> xmul(const std::vector<R>& f, const std::vector<R>& g, int n, const R& zero) {
    std::vector<R> r(n + 1, zero);
    for (int i = 0; i <= n; i++) {
        if (i < (int)f.size() && !ring_is_zero(f[i])) {
            for (int j = 0; i + j <= n; j++)
                if (j < (int)g.size() && !ring_is_zero(g[j])) r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

// inverse of an x-series whose constant term is a unit of the fraction field
inline std::vector<RatFunc> xinv(const std::vector<RatFunc>& f, int n) {
    std::vector<RatFunc> r(n + 1);
    RatFunc c0inv = RatFunc(1) / f[0];
    r[0] = c0inv;
    for (int d = 1; d <= n; d++) {
        RatFunc acc;
        for (int m = 1; m <= d && m < (int)f.size(); m++) acc += f[m] * r[d - m];
        r[d] = -(c0inv * acc);
    }
    return r;
}

} // namespace chart_detail

// S o T, truncated at the smaller x-order.
template <class R>
ChartMap<R> chart_compose(const ChartMap<R>& S, const ChartMap<R>& T) {
    int n = std::min(S.order, T.order);
    R zero = ring_zero_like(S.xcoeffs[0]);
    R one = ring_one_like(S.xcoeffs[0]);
    ChartMap<R> C = T.truncated(n);

    // T's first component as an x-series, and powers of it
    std::vector<R> tx(n + 1, zero);
    if (n >= 1) tx[1] = one;
    for (int j = 2; j <= n; j++) tx[j] = T.xcoeffs[j];
    std::vector<std::vector<R>> txp(n + 1);
    if (n >= 1) txp[1] = tx;
    for (int m = 2; m <= n; m++) txp[m] = chart_detail::xmul(txp[m - 1], tx, n, zero);

    // powers of the v-perturbation beta = sum_j b_j x^j
    std::vector<R> beta(n + 1, zero);
    for (int j = 1; j <= n; j++) beta[j] = T.vcoeffs[j];
    std::vector<std::vector<R>> betap(n + 1);
    betap[0] = std::vector<R>(n + 1, zero);
    betap[0][0] = one;
    for (int m = 1; m <= n; m++) betap[m] = chart_detail::xmul(betap[m - 1], beta, n, zero);

    // Taylor-compose a coefficient function with v + beta, times tx^j
    auto accumulate = [&](const R& f, int j, std::vector<R>& into) {
        std::vector<R> comp(n + 1, zero);
        R g = f; // g = f^(m) / m!
        for (int m = 0; m + j <= n; m++) {
            if (m > 0) g = ring_div_int(ring_derivative(g), m);
            if (ring_is_zero(g)) break;
            for (int e = m; e + j <= n; e++)
                if (!ring_is_zero(betap[m][e])) comp[e] += g * betap[m][e];
        }
        for (int e = 0; e + j <= n; e++)
            if (!ring_is_zero(comp[e]))
                for (int u = j; u + e <= n; u++)
                    if (!ring_is_zero(txp[j][u])) into[e + u] += comp[e] * txp[j][u];
    };

    for (int j = 2; j <= n; j++)
        if (!ring_is_zero(S.xcoeffs[j])) accumulate(S.xcoeffs[j], j, C.xcoeffs);
    for (int j = 1; j <= n; j++)
        if (!ring_is_zero(S.vcoeffs[j])) accumulate(S.vcoeffs[j], j, C.vcoeffs);
    return C;
}

// compositional inverse: chart_compose(S, chart_invert(S)) = identity
template <class R>
ChartMap<R> chart_invert(const ChartMap<R>& S) {
    int n = S.order;
    R zero = ring_zero_like(S.xcoeffs[0]);
    ChartMap<R> T(n, zero);
    for (int pass = 0; pass <= n; pass++) {
        ChartMap<R> E = chart_compose(S, T);
        bool any = false;
        for (int j = 0; j <= n; j++) {
            if (!ring_is_zero(E.xcoeffs[j])) { T.xcoeffs[j] -= E.xcoeffs[j]; any = true; }
            if (!ring_is_zero(E.vcoeffs[j])) { T.vcoeffs[j] -= E.vcoeffs[j]; any = true; }
        }
        if (!any) break;
    }
    return T;
}

template <class R>
ChartMap<R> chart_conjugate(const ChartMap<R>& H, const ChartMap<R>& F) {
    // H^-1 o F o H
    return chart_compose(chart_invert(H), chart_compose(F, H));
}

using SemiSeries = ChartMap<RatFunc>;

} // namespace germ2
