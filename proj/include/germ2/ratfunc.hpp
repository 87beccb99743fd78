#pragma once
#include "germ2/poly1.hpp"

namespace germ2 {

/// Rational function num/den in v, reduced to lowest terms with monic
/// denominator. Equality is structural and agrees with cross-multiplied
/// equality because the canonical form is unique.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Gaussian& c) : num_(c), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const Poly1& p) : num_(p), den_(1) {}
    RatFunc(const Poly1& num, const Poly1& den) { assign(num, den); }

    static RatFunc var() { return RatFunc(Poly1::var()); }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    const Poly1& as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const;
    Gaussian eval(const Gaussian& x) const; // throws MathError at a pole
    std::complex<double> eval(const std::complex<double>& x) const;
    bool has_pole_at(const Gaussian& x) const { return den_.eval(x).is_zero(); }

    // f(1/s) * s^xpow as a rational function of s (chart transition helper)
    RatFunc reciprocal_scaled(int xpow) const;

    std::string str(const std::string& var = "v") const;

private:
    Poly1 num_, den_;
    void assign(const Poly1& num, const Poly1& den);
};

// The spec's canonicalization entry point: builds the reduced representative.
RatFunc normalize_ratfunc(const Poly1& num, const Poly1& den);

// Unique polynomial of degree < #points through all points.
// Throws MathError("interpolation nodes not distinct") on a repeated abscissa.
Poly1 lagrange_interpolate(const std::vector<std::pair<Gaussian, Gaussian>>& points);

} // namespace germ2
