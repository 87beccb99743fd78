#include "germ2/germ.hpp"
#include "germ2/error.hpp"

namespace germ2 {

MapGerm::MapGerm(Jet2 fx_, Jet2 fy_, int order_)
    : fx(fx_.truncated(order_)), fy(fy_.truncated(order_)), order(order_) {
    if (!fx.coeff(0, 0).is_zero() || !fy.coeff(0, 0).is_zero())
        throw MathError("jets: map germ must fix the origin");
    auto A = linear();
    if ((A[0] * A[3] - A[1] * A[2]).is_zero())
        throw MathError("jets: linear part not invertible");
}

MapGerm MapGerm::identity(int order) {
    return MapGerm(Jet2::var_x(order), Jet2::var_y(order), order);
}

std::array<Gaussian, 4> MapGerm::linear() const {
    return {fx.coeff(1, 0), fx.coeff(0, 1), fy.coeff(1, 0), fy.coeff(0, 1)};
}

bool MapGerm::is_identity() const {
    return fx == Jet2::var_x(order) && fy == Jet2::var_y(order);
}

std::string MapGerm::str() const {
    return "(" + fx.str() + ", " + fy.str() + ")";
}

VFieldGerm::VFieldGerm(Jet2 vx_, Jet2 vy_, int order_)
    : vx(vx_.truncated(order_)), vy(vy_.truncated(order_)), order(order_) {
    if (!vx.coeff(0, 0).is_zero() || !vy.coeff(0, 0).is_zero())
        throw MathError("jets: vector field must vanish at the origin");
}

VFieldGerm VFieldGerm::zero(int order) {
    return VFieldGerm(Jet2(order), Jet2(order), order);
}

VFieldGerm VFieldGerm::radial(int order) {
    return VFieldGerm(Jet2::var_x(order), Jet2::var_y(order), order);
}

VFieldGerm operator+(const VFieldGerm& a, const VFieldGerm& b) {
    return VFieldGerm(a.vx + b.vx, a.vy + b.vy, std::min(a.order, b.order));
}

VFieldGerm operator-(const VFieldGerm& a, const VFieldGerm& b) {
    return VFieldGerm(a.vx - b.vx, a.vy - b.vy, std::min(a.order, b.order));
}

VFieldGerm operator*(const Gaussian& s, const VFieldGerm& a) {
    return VFieldGerm(s * a.vx, s * a.vy, a.order);
}

std::string VFieldGerm::str() const {
    return "(" + vx.str() + ", " + vy.str() + ")";
}

MapGerm compose(const MapGerm& F, const MapGerm& G) {
    if (F.order != G.order) throw MathError("jets: mismatched truncation orders");
    return MapGerm(jet2_substitute(F.fx, G.fx, G.fy), jet2_substitute(F.fy, G.fx, G.fy), F.order);
}

MapGerm invert(const MapGerm& F) {
    int n = F.order;
    auto A = F.linear();
    Gaussian det = A[0] * A[3] - A[1] * A[2];
    Gaussian dinv = det.inv();
    // A^-1 rows
    Gaussian i00 = A[3] * dinv, i01 = -A[1] * dinv, i10 = -A[2] * dinv, i11 = A[0] * dinv;
    auto apply_ainv = [&](const Jet2& ex, const Jet2& ey) {
        return std::pair<Jet2, Jet2>{i00 * ex + i01 * ey, i10 * ex + i11 * ey};
    };
    auto [gx, gy] = apply_ainv(Jet2::var_x(n), Jet2::var_y(n));
    MapGerm G(gx, gy, n);
    for (int d = 2; d <= n; d++) {
        MapGerm E = compose(F, G);
        Jet2 ex = E.fx - Jet2::var_x(n);
        Jet2 ey = E.fy - Jet2::var_y(n);
        if (ex.is_zero() && ey.is_zero()) break;
        auto [cx, cy] = apply_ainv(ex, ey);
        G = MapGerm(G.fx - cx, G.fy - cy, n);
    }
    return G;
}

std::array<Jet2, 4> jacobian(const MapGerm& F) {
    return {F.fx.dx(), F.fx.dy(), F.fy.dx(), F.fy.dy()};
}

VFieldGerm pushforward(const MapGerm& F, const VFieldGerm& X) {
    if (F.order != X.order) throw MathError("jets: mismatched truncation orders");
    int n = F.order - 1;
    MapGerm Finv = invert(F);
    auto J = jacobian(F);
    // entries of DF and X, all pulled back through F^-1, truncated at N-1
    auto pull = [&](const Jet2& g) {
        return jet2_substitute(g.truncated(n), Finv.fx.truncated(n), Finv.fy.truncated(n));
    };
    Jet2 j00 = pull(J[0]), j01 = pull(J[1]), j10 = pull(J[2]), j11 = pull(J[3]);
    Jet2 xx = pull(X.vx), xy = pull(X.vy);
    return VFieldGerm(j00 * xx + j01 * xy, j10 * xx + j11 * xy, n);
}

FlatOrder flat_order(const MapGerm& F) {
    auto A = F.linear();
    if (!(A[0].is_one() && A[1].is_zero() && A[2].is_zero() && A[3].is_one()))
        return {FlatOrder::NotTangent, 0};
    Jet2 dx = F.fx - Jet2::var_x(F.order);
    Jet2 dy = F.fy - Jet2::var_y(F.order);
    int low = std::min(dx.low_degree(), dy.low_degree());
    if (low > F.order) return {FlatOrder::IdentityToOrder, 0};
    return {FlatOrder::Flat, low};
}

Jet2 directional_derivative(const Jet2& g, const VFieldGerm& X) {
    // X has no constant or linear part, so the unknown tail of raw_dx/raw_dy
    // lands beyond the truncation order of the product
    return g.raw_dx() * X.vx + g.raw_dy() * X.vy;
}

VFieldGerm map_difference(const MapGerm& F, const MapGerm& G) {
    return VFieldGerm(F.fx - G.fx, F.fy - G.fy, std::min(F.order, G.order));
}

} // namespace germ2
