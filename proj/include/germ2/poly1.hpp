#pragma once
#include <vector>
#include <string>
#include <complex>
#include "germ2/scalar.hpp"

namespace germ2 {

/// Univariate polynomial in the direction variable v over Gaussian rationals.
/// Canonical form: no stored leading zeros; the zero polynomial has an empty
/// coefficient vector and degree() == -1.
class Poly1 {
public:
    Poly1() = default;
    Poly1(const Gaussian& c) { c_.push_back(c); trim(); }
    Poly1(long n) { c_.push_back(Gaussian(n)); trim(); }
    explicit Poly1(std::vector<Gaussian> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 var() { return Poly1(std::vector<Gaussian>{Gaussian(0), Gaussian(1)}); } // v
    static Poly1 monomial(const Gaussian& c, int deg);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    const Gaussian& leading() const;
    Gaussian coeff(int d) const { return d >= 0 && d < (int)c_.size() ? c_[d] : Gaussian(0); }
    const std::vector<Gaussian>& coeffs() const { return c_; }
    void set_coeff(int d, const Gaussian& g);

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1& operator*=(const Poly1& o) { *this = *this * o; return *this; }
    friend Poly1 operator*(const Gaussian& s, const Poly1& p);
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Gaussian eval(const Gaussian& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;
    Poly1 derivative() const;
    Poly1 pow(unsigned e) const;
    Poly1 monic() const;
    Poly1 reversed(int target_deg) const; // v^target_deg * p(1/v); requires target_deg >= degree
    Poly1 taylor_shift(const Gaussian& c) const; // p(v+c)

private:
    std::vector<Gaussian> c_;
    void trim();
};

// Exact Euclidean division over Q(i): a = q*b + r with deg r < deg b.
std::pair<Poly1, Poly1> poly_divmod(const Poly1& a, const Poly1& b);
bool poly_divides(const Poly1& d, const Poly1& a); // remainder of a by d is zero

Poly1 poly_gcd(const Poly1& a, const Poly1& b); // monic, or zero if both zero
Gaussian poly_resultant(const Poly1& a, const Poly1& b);

// All roots in Q(i) with multiplicities, found by Gaussian-integer divisor
// candidates of the cleared-denominator polynomial. Throws MathError when a
// coefficient norm resists trial factorization.
std::vector<std::pair<Gaussian, int>> poly_rational_roots(const Poly1& p);

// Rendering and parsing of the canonical expression form ("v^2-v", ...).
std::string poly_str(const Poly1& p, const std::string& var = "v");

} // namespace germ2
