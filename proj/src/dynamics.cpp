#include "germ2/dynamics.hpp"
#include "germ2/lie.hpp"
#include "germ2/error.hpp"
#include <json.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace germ2 {

namespace {

// deterministic splitmix64-based sampling, identical across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int below(int n) { return int(next() % uint64_t(n)); }
    Cx disk(double radius) {
        while (true) {
            double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return Cx(radius * x, radius * y);
        }
    }
};

Cx cpow_int(const Cx& x, int k) {
    Cx acc(1.0, 0.0), base = x;
    int e = k < 0 ? -k : k;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return k < 0 ? 1.0 / acc : acc;
}

int flat_k_or_one(const MapGerm& F) {
    FlatOrder fo = flat_order(F);
    return fo.kind == FlatOrder::Flat ? fo.j - 1 : 1;
}

// x tends to 0 and v settles: the desk-scale divisor-convergence gate
bool converges_to_divisor(const OrbitRecord& o) {
    if (o.stopped == OrbitRecord::EscapedRadius) return false;
    if (o.stopped == OrbitRecord::ConvergedBelowEpsilon) return true;
    size_t n = o.steps();
    if (n < 200) return false;
    double x0 = std::abs(o.xs.front()), xn = std::abs(o.xs.back());
    if (!(xn < 0.5 * x0) || !std::isfinite(xn)) return false;
    size_t w = std::min<size_t>(100, n / 2);
    for (size_t i = n - w; i < n; i++)
        if (std::abs(o.xs[i + 1]) > std::abs(o.xs[i]) * 1.001 + 1e-300) return false;
    double vvar = 0;
    for (size_t i = n - w; i < n; i++)
        vvar = std::max(vvar, std::abs(o.blowup_track[i + 1] - o.blowup_track[i]));
    double vscale = 1.0 + std::abs(o.blowup_track.back());
    return vvar < 1e-3 * vscale;
}

// v_n ~ v_inf + c/n: Richardson extrapolation from the half and full points
Cx extrapolate_v(const OrbitRecord& o) {
    size_t n = o.steps();
    if (n < 4) return o.blowup_track.back();
    return 2.0 * o.blowup_track[n] - o.blowup_track[n / 2];
}

} // namespace

CompiledGerm::CompiledGerm(const MapGerm& F) {
    for (auto& [m, c] : F.fx.terms()) {
        tx.push_back({m.i, m.j, c.to_complex()});
        max_deg = std::max(max_deg, m.total());
    }
    for (auto& [m, c] : F.fy.terms()) {
        ty.push_back({m.i, m.j, c.to_complex()});
        max_deg = std::max(max_deg, m.total());
    }
}

std::pair<Cx, Cx> CompiledGerm::eval(const Cx& x, const Cx& y) const {
    // power tables up to the germ's degree
    Cx xp[32], yp[32];
    xp[0] = yp[0] = Cx(1.0, 0.0);
    for (int d = 1; d <= max_deg; d++) {
        xp[d] = xp[d - 1] * x;
        yp[d] = yp[d - 1] * y;
    }
    Cx rx(0.0, 0.0), ry(0.0, 0.0);
    for (auto& t : tx) rx += t.c * xp[t.i] * yp[t.j];
    for (auto& t : ty) ry += t.c * xp[t.i] * yp[t.j];
    return {rx, ry};
}

OrbitRecord iterate_orbit(const MapGerm& F, Cx x0, Cx y0, int n_max, double escape_radius) {
    if (x0 == Cx(0.0, 0.0) && y0 == Cx(0.0, 0.0)) throw MathError("dynamics: fixed point");
    if (n_max < 1) throw MathError("dynamics: n_max must be positive");
    CompiledGerm cg(F);
    OrbitRecord o;
    o.k = flat_k_or_one(F);
    o.stopped = OrbitRecord::MaxIterations;
    o.xs.reserve(n_max + 1);
    o.ys.reserve(n_max + 1);
    Cx x = x0, y = y0;
    o.xs.push_back(x);
    o.ys.push_back(y);
    o.blowup_track.push_back(x == Cx(0.0, 0.0) ? Cx(0.0, 0.0) : y / x);
    for (int n = 1; n <= n_max; n++) {
        std::tie(x, y) = cg.eval(x, y);
        o.xs.push_back(x);
        o.ys.push_back(y);
        o.blowup_track.push_back(x == Cx(0.0, 0.0) ? Cx(0.0, 0.0) : y / x);
        o.seq1_samples.push_back(1.0 / (double(n) * cpow_int(x, o.k)));
        double norm = std::hypot(std::abs(x), std::abs(y));
        if (norm > escape_radius || !std::isfinite(norm)) {
            o.stopped = OrbitRecord::EscapedRadius;
            break;
        }
        if (norm < 1e-30) {
            o.stopped = OrbitRecord::ConvergedBelowEpsilon;
            break;
        }
    }
    return o;
}

Seq1Result seq1_check(const MapGerm& F, Cx x0, Cx y0, int n_max) {
    OrbitRecord o = iterate_orbit(F, x0, y0, n_max);
    if (!converges_to_divisor(o)) throw MathError("hypothesis of Lemma seq1 not met");
    DirectionData D = direction_data(F);
    // Cesaro smoothing over the tail half; early samples carry the 1/x_0 bias
    size_t n = o.seq1_samples.size();
    Cx acc(0.0, 0.0);
    size_t from = n / 2;
    for (size_t i = from; i < n; i++) acc += o.seq1_samples[i];
    Cx estimate = acc / double(n - from);
    Cx vlim = extrapolate_v(o);
    Cx target = -double(D.k) * D.p.eval(vlim);
    Seq1Result res{estimate, target, std::abs(estimate - target)};
    return res;
}

std::pair<Cx, double> limit_direction_check(const MapGerm& F, const OrbitRecord& orbit) {
    if (!converges_to_divisor(orbit)) throw MathError("hypothesis of Lemma seq1 not met");
    DirectionData D = direction_data(F);
    Cx vlim = extrapolate_v(orbit);
    return {vlim, std::abs(D.r.eval(vlim))};
}

bool in_sector(const SectorSpec& spec, const Cx& x, const Cx& v) {
    if (x == Cx(0.0, 0.0)) throw MathError("dynamics: x = 0 has no sector coordinate");
    if (std::abs(v) >= spec.r) return false;
    Cx w = cpow_int(x, -spec.k);
    Cx zeta = -w / spec.p0 - 2.0 * spec.R / std::abs(spec.p0);
    return std::abs(std::arg(zeta)) < spec.aperture;
}

namespace {

struct BatchOut {
    int converged = 0;
    int excluded = 0;
    double max_residual = 0;
};

BatchOut flower_batch(const CompiledGerm& cg, const MapGerm& F, const DirectionData& D,
                      bool backward, int samples, int n_max, double R, double r,
                      double floor, uint64_t seed) {
    BatchOut out;
    Rng rng(seed + (backward ? 0x42ull : 0x7full));
    int k = D.k;
    for (int s = 0; s < samples; s++) {
        Cx v0;
        int guard = 0;
        while (true) {
            v0 = rng.disk(1.0);
            if (std::abs(D.p.eval(v0)) >= floor) break;
            out.excluded++;
            if (++guard > 10000) throw MathError("dynamics: direction floor excludes everything");
        }
        Cx p0 = D.p.eval(v0);
        if (backward) p0 = -p0;
        Cx v = v0 + rng.disk(r / 2.0);
        // w in the proof's sector: -w/p0 - 2R/|p0| = zeta, |arg zeta| < aperture
        double theta = rng.uniform(-0.8, 0.8) * 2.0943951023931953;
        double rho = rng.uniform(0.1, 1.0) * 2.0 * R / std::abs(p0);
        Cx zeta = std::polar(rho, theta);
        Cx w = -p0 * (zeta + 2.0 * R / std::abs(p0));
        int branch = rng.below(k);
        double mag = std::pow(std::abs(w), -1.0 / k);
        double ang = (-std::arg(w) + 2.0 * M_PI * branch) / k;
        Cx x = std::polar(mag, ang);

        OrbitRecord o;
        o.k = k;
        o.stopped = OrbitRecord::MaxIterations;
        Cx cx = x, cy = v * x;
        o.xs.push_back(cx);
        o.ys.push_back(cy);
        o.blowup_track.push_back(v);
        for (int n = 1; n <= n_max; n++) {
            std::tie(cx, cy) = cg.eval(cx, cy);
            o.xs.push_back(cx);
            o.ys.push_back(cy);
            o.blowup_track.push_back(cx == Cx(0.0, 0.0) ? Cx(0.0, 0.0) : cy / cx);
            double nb = std::hypot(std::abs(cx), std::abs(cy));
            if (nb > 10.0 || !std::isfinite(nb)) {
                o.stopped = OrbitRecord::EscapedRadius;
                break;
            }
            if (nb < 1e-30) {
                o.stopped = OrbitRecord::ConvergedBelowEpsilon;
                break;
            }
        }
        if (converges_to_divisor(o)) {
            out.converged++;
            Cx vlim = extrapolate_v(o);
            out.max_residual = std::max(out.max_residual, std::abs(D.r.eval(vlim)));
        }
    }
    (void)F;
    return out;
}

} // namespace

FlowerReport flower_verify(const MapGerm& F, int samples, int n_max, double R, double r,
                           double p_floor, uint64_t seed) {
    DicriticInfo info = is_dicritic(F);
    if (!info.tangent || !info.dicritic) throw MathError("flower: non-dicritic input");
    DirectionData D = direction_data(F);
    if (D.p.is_zero()) throw MathError("flower: p vanishes identically");

    CompiledGerm fwd(F);
    CompiledGerm bwd(invert(F));

    FlowerReport rep;
    rep.samples = samples;
    rep.r_used = r;
    rep.p_floor = p_floor;
    rep.seed = seed;

    auto run = [&](double Rcur) {
        BatchOut f = flower_batch(fwd, F, D, false, samples, n_max, Rcur, r, p_floor, seed);
        BatchOut b = flower_batch(bwd, F, D, true, samples, n_max, Rcur, r, p_floor, seed);
        rep.forward_converged = f.converged;
        rep.backward_converged = b.converged;
        rep.excluded_floor = f.excluded + b.excluded;
        rep.max_direction_residual = std::max(f.max_residual, b.max_residual);
        rep.R_used = Rcur;
    };

    if (R > 0) {
        run(R);
        return rep;
    }
    // auto calibration: double R until the convergent counts stabilize
    int prev_f = -1, prev_b = -1;
    for (double Rcur = 8.0; Rcur <= 65536.0; Rcur *= 2.0) {
        run(Rcur);
        if (rep.forward_converged == prev_f && rep.backward_converged == prev_b) break;
        prev_f = rep.forward_converged;
        prev_b = rep.backward_converged;
    }
    return rep;
}

std::vector<RootClass> classify_characteristic_roots(const MapGerm& F, double tolerance,
                                                     int probes, uint64_t seed) {
    DirectionData D = direction_data(F);
    if (D.r.is_zero()) throw MathError("dicritic, use flower_verify");
    Poly1 rd = D.r.derivative();

    std::vector<std::pair<Cx, bool>> roots; // value, exact?
    for (auto& g : D.rational_roots) roots.push_back({g.to_complex(), true});
    for (auto& z : poly_complex_roots(D.r)) {
        bool dup = false;
        for (auto& [w, ex] : roots)
            if (std::abs(w - z) < 1e-7) { dup = true; break; }
        if (!dup) roots.push_back({z, false});
    }
    std::sort(roots.begin(), roots.end(), [](auto& a, auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });

    CompiledGerm cg(F);
    std::vector<RootClass> out;
    for (auto& [v0, exact] : roots) {
        RootClass rc;
        rc.v0 = v0;
        rc.exact_root = exact;
        rc.orientation = RootClass::Undetermined;
        Cx rp = rd.eval(v0), pv = D.p.eval(v0);
        if (std::abs(rp) < 1e-8 || std::abs(pv) < 1e-12) { // non-simple or degenerate
            out.push_back(rc);
            continue;
        }
        rc.ratio = rp / pv;
        if (std::abs(rc.ratio.real()) < tolerance) {
            out.push_back(rc);
            continue;
        }
        // probe beside the root on the forward petal: x^k k p(v0) = -t
        Rng rng(seed);
        int k = D.k;
        double t0 = 0.02;
        double mag = std::pow(t0 / (k * std::abs(pv)), 1.0 / k);
        double ang = (M_PI - std::arg(pv)) / k;
        Cx x0 = std::polar(mag, ang);
        const double dmag = 1e-3;
        int fwd_votes = 0, bwd_votes = 0;
        for (int pr = 0; pr < probes; pr++) {
            Cx delta = std::polar(dmag, rng.uniform(0.0, 2.0 * M_PI));
            Cx x = x0, y = (v0 + delta) * x0;
            for (int n = 0; n < 20000; n++) {
                std::tie(x, y) = cg.eval(x, y);
                if (!(std::isfinite(std::abs(x)) && std::abs(x) < 8.0 * mag)) break;
                Cx u = (x == Cx(0.0, 0.0) ? Cx(0.0, 0.0) : y / x) - v0;
                if (std::abs(u) <= dmag / 4.0) { fwd_votes++; break; }
                if (std::abs(u) >= dmag * 4.0) { bwd_votes++; break; }
            }
        }
        rc.probes = probes;
        rc.agreeing = std::max(fwd_votes, bwd_votes);
        if (fwd_votes == probes) rc.orientation = RootClass::ForwardAttracting;
        else if (bwd_votes == probes) rc.orientation = RootClass::BackwardAttracting;
        out.push_back(rc);
    }
    return out;
}

std::vector<Cx> poly_complex_roots(const Poly1& p) {
    int d = p.degree();
    std::vector<Cx> roots;
    if (d < 1) return roots;
    std::vector<Cx> c(d + 1);
    for (int i = 0; i <= d; i++) c[i] = p.coeff(i).to_complex();
    for (int i = 0; i <= d; i++) c[i] /= p.leading().to_complex();

    // Durand-Kerner from staggered initial points
    std::vector<Cx> z(d);
    Cx w(0.4, 0.9);
    Cx acc(1.0, 0.0);
    for (int i = 0; i < d; i++) {
        acc *= w;
        z[i] = acc;
    }
    auto eval = [&](const Cx& x) {
        Cx r(0.0, 0.0);
        for (int i = d; i >= 0; i--) r = r * x + c[i];
        return r;
    };
    for (int it = 0; it < 500; it++) {
        double worst = 0;
        for (int i = 0; i < d; i++) {
            Cx den(1.0, 0.0);
            for (int j = 0; j < d; j++)
                if (j != i) den *= z[i] - z[j];
            Cx step = eval(z[i]) / den;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

std::string orbit_csv(const OrbitRecord& orbit, const Poly1& p) {
    std::ostringstream os;
    os.precision(17);
    os << "n,re_x,im_x,re_v,im_v,seq1_residual\n";
    for (size_t n = 1; n < orbit.xs.size(); n++) {
        const Cx& x = orbit.xs[n];
        const Cx& v = orbit.blowup_track[n];
        Cx sample = orbit.seq1_samples[n - 1];
        double resid = std::abs(sample + double(orbit.k) * p.eval(v));
        os << n << "," << x.real() << "," << x.imag() << "," << v.real() << "," << v.imag()
           << "," << resid << "\n";
    }
    return os.str();
}

std::string orbit_json_summary(const OrbitRecord& orbit) {
    nlohmann::json j;
    j["steps"] = orbit.steps();
    j["k"] = orbit.k;
    switch (orbit.stopped) {
        case OrbitRecord::MaxIterations: j["stopped"] = "max-iterations"; break;
        case OrbitRecord::EscapedRadius: j["stopped"] = "escaped radius"; break;
        case OrbitRecord::ConvergedBelowEpsilon: j["stopped"] = "converged below epsilon"; break;
    }
    j["final"] = {orbit.xs.back().real(), orbit.xs.back().imag(),
                  orbit.ys.back().real(), orbit.ys.back().imag()};
    j["final_v"] = {orbit.blowup_track.back().real(), orbit.blowup_track.back().imag()};
    return j.dump(2);
}

std::string flower_json(const FlowerReport& rep) {
    nlohmann::json j;
    j["samples"] = rep.samples;
    j["excluded_by_p_floor"] = rep.excluded_floor;
    j["forward_converged"] = rep.forward_converged;
    j["backward_converged"] = rep.backward_converged;
    j["forward_fraction"] = double(rep.forward_converged) / rep.samples;
    j["backward_fraction"] = double(rep.backward_converged) / rep.samples;
    j["R_used"] = rep.R_used;
    j["r_used"] = rep.r_used;
    j["p_floor"] = rep.p_floor;
    j["max_direction_residual"] = rep.max_direction_residual;
    j["seed"] = rep.seed;
    j["success"] = rep.success();
    return j.dump(2);
}

} // namespace germ2
