#include "germ2/lie.hpp"
#include "germ2/error.hpp"
#include "germ2/poly1.hpp"
#include <map>
#include <deque>

namespace germ2 {

VFieldGerm lie_bracket(const VFieldGerm& X, const VFieldGerm& Y) {
    if (X.order != Y.order) throw MathError("jets: mismatched truncation orders");
    Jet2 bx = Y.vx.dx() * X.vx + Y.vx.dy() * X.vy - X.vx.dx() * Y.vx - X.vx.dy() * Y.vy;
    Jet2 by = Y.vy.dx() * X.vx + Y.vy.dy() * X.vy - X.vy.dx() * Y.vx - X.vy.dy() * Y.vy;
    return VFieldGerm(bx, by, X.order - 1);
}

MapGerm exp_field(const VFieldGerm& X) {
    int n = X.order;
    if (!X.is_zero() && X.low_degree() < 2)
        throw MathError("exp restricted to flat fields");
    Jet2 accx = Jet2::var_x(n), accy = Jet2::var_y(n);
    Jet2 curx = X.vx, cury = X.vy;
    Rat fact(1);
    for (int m = 1; m <= n; m++) {
        if (curx.is_zero() && cury.is_zero()) break;
        fact /= m;
        accx += Gaussian(fact) * curx;
        accy += Gaussian(fact) * cury;
        curx = directional_derivative(curx, X);
        cury = directional_derivative(cury, X);
    }
    return MapGerm(accx, accy, n);
}

VFieldGerm log_diffeo(const MapGerm& F) {
    int n = F.order;
    FlatOrder fo = flat_order(F);
    if (fo.kind == FlatOrder::NotTangent) throw MathError("log restricted to tangent-to-identity maps");
    VFieldGerm X = VFieldGerm::zero(n);
    if (fo.kind == FlatOrder::IdentityToOrder) return X;
    for (int d = fo.j; d <= n; d++) {
        // exponential of the known part, at truncation d
        VFieldGerm Xd(X.vx.truncated(d), X.vy.truncated(d), d);
        MapGerm E = exp_field(Xd);
        Jet2 gapx = (F.fx.truncated(d) - E.fx).homogeneous_part(d);
        Jet2 gapy = (F.fy.truncated(d) - E.fy).homogeneous_part(d);
        X = VFieldGerm(X.vx + gapx.padded(n), X.vy + gapy.padded(n), n);
    }
    return X;
}

MapGerm flow_power(const MapGerm& F, const Gaussian& t) {
    return exp_field(t * log_diffeo(F));
}

MapGerm group_commutator(const MapGerm& F, const MapGerm& G) {
    return compose(compose(F, G), compose(invert(F), invert(G)));
}

std::optional<int> germ_order(const MapGerm& F, int maxN) {
    if (maxN < 1) throw MathError("lie: maxN must be positive");
    FlatOrder fo = flat_order(F);
    if (fo.kind == FlatOrder::Flat) return std::nullopt; // F^n = X + n P_k + ... != id
    MapGerm cur = F;
    for (int k = 1; k <= maxN; k++) {
        if (cur.is_identity()) return k;
        cur = compose(cur, F);
    }
    return std::nullopt;
}

MapGerm average_linearizer(const std::vector<MapGerm>& generators, int max_group) {
    if (generators.empty()) throw MathError("lie: no generators");
    int n = generators.front().order;
    for (auto& g : generators)
        if (g.order != n) throw MathError("jets: mismatched truncation orders");

    std::map<std::string, MapGerm> group;
    std::deque<MapGerm> frontier;
    MapGerm id = MapGerm::identity(n);
    group.insert({id.str(), id});
    frontier.push_back(id);
    while (!frontier.empty()) {
        MapGerm a = frontier.front();
        frontier.pop_front();
        for (auto& g : generators) {
            MapGerm c = compose(a, g);
            std::string key = c.str();
            if (group.find(key) == group.end()) {
                if ((int)group.size() >= max_group)
                    throw MathError("group not finite within bound");
                group.insert({key, c});
                frontier.push_back(c);
            }
        }
    }
    Jet2 sx(n), sy(n);
    for (auto& [key, H] : group) {
        (void)key;
        auto A = H.linear();
        Gaussian det = A[0] * A[3] - A[1] * A[2];
        Gaussian dinv = det.inv();
        Gaussian i00 = A[3] * dinv, i01 = -A[1] * dinv, i10 = -A[2] * dinv, i11 = A[0] * dinv;
        sx += i00 * H.fx + i01 * H.fy;
        sy += i10 * H.fx + i11 * H.fy;
    }
    Gaussian scale = Gaussian(Rat(1, (long)group.size()));
    return MapGerm(scale * sx, scale * sy, n);
}

bool is_invariant_field(const MapGerm& F, const VFieldGerm& X) {
    VFieldGerm P = pushforward(F, X);
    return P.vx == X.vx.truncated(F.order - 1) && P.vy == X.vy.truncated(F.order - 1);
}

MapGerm linearize_radial(const VFieldGerm& X) {
    int n = X.order;
    if (!(X.vx.homogeneous_part(1) == Jet2::var_x(n)) ||
        !(X.vy.homogeneous_part(1) == Jet2::var_y(n)))
        throw MathError("lie: linear part is not the radial field");
    Jet2 gx = Jet2::var_x(n), gy = Jet2::var_y(n);
    for (int d = 2; d <= n; d++) {
        Jet2 rx = -X.vx.homogeneous_part(d);
        Jet2 ry = -X.vy.homogeneous_part(d);
        for (int a = 2; a <= d - 1; a++) {
            int b = d - a + 1;
            Jet2 gax = gx.homogeneous_part(a), gay = gy.homogeneous_part(a);
            Jet2 xbx = X.vx.homogeneous_part(b), xby = X.vy.homogeneous_part(b);
            rx -= gax.raw_dx() * xbx + gax.raw_dy() * xby;
            ry -= gay.raw_dx() * xbx + gay.raw_dy() * xby;
        }
        Gaussian inv(Rat(1, d - 1));
        gx += inv * rx;
        gy += inv * ry;
    }
    return MapGerm(gx, gy, n);
}

DicriticInfo is_dicritic(const MapGerm& F) {
    FlatOrder fo = flat_order(F);
    if (fo.kind == FlatOrder::NotTangent) return {false, false, 0, Jet2(F.order)};
    if (fo.kind == FlatOrder::IdentityToOrder) return {true, false, 0, Jet2(F.order)};
    int k = fo.j - 1;
    Jet2 px = (F.fx - Jet2::var_x(F.order)).homogeneous_part(fo.j);
    Jet2 py = (F.fy - Jet2::var_y(F.order)).homogeneous_part(fo.j);
    Jet2 fx_quot(F.order), fy_quot(F.order);
    bool okx = px.divide_x(fx_quot);
    bool oky = py.divide_y(fy_quot);
    if (okx && oky && fx_quot == fy_quot) return {true, true, k, fx_quot};
    return {true, false, k, Jet2(F.order)};
}

namespace {

// dehomogenize a homogeneous bivariate jet: h(1, v) as Poly1
Poly1 dehomogenize(const Jet2& h, int deg) {
    Poly1 p;
    for (auto& [m, c] : h.terms())
        if (m.total() == deg) p += Poly1::monomial(c, m.j);
    return p;
}

} // namespace

AbelianT abelian_structure(const MapGerm& F, const MapGerm& G) {
    if (F.order != G.order) throw MathError("jets: mismatched truncation orders");
    DicriticInfo info = is_dicritic(F);
    if (!info.tangent || !info.dicritic) throw MathError("lie: F is not a dicritic diffeomorphism");
    int k = info.k;

    // genericity: gcd(f, x q_{k+2} - y p_{k+2}) = 1 via the resultant
    VFieldGerm f_field = log_diffeo(F);
    Jet2 pk2 = f_field.vx.homogeneous_part(k + 2);
    Jet2 qk2 = f_field.vy.homogeneous_part(k + 2);
    Jet2 w = Jet2::var_x(F.order) * qk2 - Jet2::var_y(F.order) * pk2;
    Poly1 f1 = dehomogenize(info.f, k);
    Poly1 w1 = dehomogenize(w, k + 3);
    bool both_at_infinity = info.f.coeff(0, k).is_zero() && w.coeff(0, k + 3).is_zero();
    if (poly_resultant(f1, w1).is_zero() || both_at_infinity)
        throw MathError("genericity gcd condition fails");

    if (!flat_order(G).tangent() || !group_commutator(F, G).is_identity())
        throw MathError("hypotheses of Thm 5.5 violated");

    if (G.is_identity()) return {true, Gaussian(0)};

    DicriticInfo gi = is_dicritic(G);
    if (!gi.dicritic || gi.k != k) return {false, Gaussian(0)};

    // ratio of the leading homogeneous factors
    auto lead = info.f.terms().begin();
    Gaussian t = gi.f.coeff(lead->first.i, lead->first.j) / lead->second;
    if (!(gi.f == t * info.f)) return {false, Gaussian(0)};
    if (flow_power(F, t) == G) return {true, t};
    return {false, Gaussian(0)};
}

ResonanceReport find_resonances(const Gaussian& l1, const Gaussian& l2, int M) {
    if (l1.is_zero() || l2.is_zero()) throw MathError("lie: zero eigenvalue");
    if (M < 2) throw MathError("lie: resonance bound must be >= 2");
    ResonanceReport rep;
    rep.search_bound = M;
    for (int total = 2; total <= M; total++)
        for (int m1 = 0; m1 <= total; m1++) {
            int m2 = total - m1;
            Gaussian power = l1.pow(m1) * l2.pow(m2);
            if (power == l1) rep.relations.push_back({m1, m2, 1});
            if (power == l2) rep.relations.push_back({m1, m2, 2});
        }
    return rep;
}

bool sla_membership(const std::vector<std::vector<Int>>& B, const std::vector<Rat>& lambda) {
    size_t n = B.size();
    if (n == 0 || lambda.size() != n) throw MathError("lie: dimension mismatch");
    for (auto& row : B)
        if (row.size() != n) throw MathError("lie: matrix not square");

    // Bareiss fraction-free determinant
    std::vector<std::vector<Int>> m = B;
    Int det = 1, prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) piv++;
        if (piv == n) { det = 0; break; }
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (size_t r = c + 1; r < n; r++)
            for (size_t j = c + 1; j < n; j++)
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
        prev = m[c][c];
        det = m[c][c];
    }
    det *= sign;
    if (det != 1 && det != -1) throw MathError("not in SL");

    for (size_t r = 0; r < n; r++) {
        Rat acc(0);
        for (size_t j = 0; j < n; j++) {
            Rat entry(B[r][j] - (r == j ? 1 : 0));
            acc += entry * lambda[j];
        }
        if (!rat_is_integer(acc)) return false;
    }
    return true;
}

} // namespace germ2
