#pragma once
#include <array>
#include "germ2/jet2.hpp"

namespace germ2 {

/// Diffeomorphism germ of (C^2,0): components fix the origin and the linear
/// part is invertible, truncated at a shared order.
struct MapGerm {
    Jet2 fx, fy;
    int order;

    MapGerm(Jet2 fx_, Jet2 fy_, int order_);
    static MapGerm identity(int order);

    std::array<Gaussian, 4> linear() const; // row-major DF(0)
    bool is_identity() const;

    friend bool operator==(const MapGerm& a, const MapGerm& b) {
        return a.order == b.order && a.fx == b.fx && a.fy == b.fy;
    }
    friend bool operator!=(const MapGerm& a, const MapGerm& b) { return !(a == b); }

    std::string str() const;
};

/// Vector-field germ singular at the origin.
struct VFieldGerm {
    Jet2 vx, vy;
    int order;

    VFieldGerm(Jet2 vx_, Jet2 vy_, int order_);
    static VFieldGerm zero(int order);
    static VFieldGerm radial(int order); // x d/dx + y d/dy

    bool is_zero() const { return vx.is_zero() && vy.is_zero(); }
    int low_degree() const { return std::min(vx.low_degree(), vy.low_degree()); }

    friend bool operator==(const VFieldGerm& a, const VFieldGerm& b) {
        return a.order == b.order && a.vx == b.vx && a.vy == b.vy;
    }
    friend bool operator!=(const VFieldGerm& a, const VFieldGerm& b) { return !(a == b); }

    VFieldGerm operator-() const { return VFieldGerm(-vx, -vy, order); }
    friend VFieldGerm operator+(const VFieldGerm& a, const VFieldGerm& b);
    friend VFieldGerm operator-(const VFieldGerm& a, const VFieldGerm& b);
    friend VFieldGerm operator*(const Gaussian& s, const VFieldGerm& a);

    std::string str() const;
};

struct FlatOrder {
    enum Kind { NotTangent, IdentityToOrder, Flat } kind;
    int j; // meaningful for Flat
    bool tangent() const { return kind != NotTangent; }
};

// F o G, truncated at the shared order. Orders must match.
MapGerm compose(const MapGerm& F, const MapGerm& G);

// group inverse: compose(F, invert(F)) = id exactly to order N
MapGerm invert(const MapGerm& F);

// entry (r,c) = d(component r)/d(variable c), truncated at N-1
std::array<Jet2, 4> jacobian(const MapGerm& F);

// (F_* X)(p) = DF(F^-1 p) . X(F^-1 p), truncated at N-1
VFieldGerm pushforward(const MapGerm& F, const VFieldGerm& X);

// Smallest j >= 2 with a nonzero degree-j term of F - id when DF(0) = I.
FlatOrder flat_order(const MapGerm& F);

// per-component sum of dg/dx * Xx + dg/dy * Xy for a >= 2-flat field X;
// exact to the full storage order because X kills the top-degree loss
Jet2 directional_derivative(const Jet2& g, const VFieldGerm& X);

// difference F - G as a field-shaped pair (not a germ; used by tests)
VFieldGerm map_difference(const MapGerm& F, const MapGerm& G);

} // namespace germ2
