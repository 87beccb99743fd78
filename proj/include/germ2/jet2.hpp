#pragma once
#include <map>
#include <vector>
#include <complex>
#include <string>
#include "germ2/scalar.hpp"

namespace germ2 {

struct Mono2 {
    int i, j; // x^i y^j
    int total() const { return i + j; }
    friend bool operator<(const Mono2& a, const Mono2& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.i > b.i; // within a degree: descending x-power
    }
    friend bool operator==(const Mono2& a, const Mono2& b) { return a.i == b.i && a.j == b.j; }
};

/// Truncated power series in two variables over Gaussian rationals.
/// Sparse canonical storage: zero coefficients are never kept, no stored
/// exponent pair exceeds the truncation order. Binary operations require
/// nothing of the operand orders but carry order = min of the two.
class Jet2 {
public:
    explicit Jet2(int order = 1) : order_(order) {}
    static Jet2 constant(const Gaussian& c, int order);
    static Jet2 monomial(const Gaussian& c, int i, int j, int order);
    static Jet2 var_x(int order) { return monomial(Gaussian(1), 1, 0, order); }
    static Jet2 var_y(int order) { return monomial(Gaussian(1), 0, 1, order); }

    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    Gaussian coeff(int i, int j) const;
    void set_coeff(int i, int j, const Gaussian& g);
    const std::map<Mono2, Gaussian>& terms() const { return c_; }
    size_t term_count() const { return c_.size(); }

    int low_degree() const; // order_+1 when zero
    Jet2 homogeneous_part(int d) const;
    Jet2 truncated(int n) const;
    Jet2 padded(int n) const; // same terms reinterpreted at order n >= order()

    Jet2 operator-() const;
    friend Jet2 operator+(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator*(const Gaussian& s, const Jet2& a);
    Jet2& operator+=(const Jet2& o) { *this = *this + o; return *this; }
    Jet2& operator-=(const Jet2& o) { *this = *this - o; return *this; }
    friend bool operator==(const Jet2& a, const Jet2& b) { return a.order_ == b.order_ && a.c_ == b.c_; }
    friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

    // partial derivatives at order-1 (the jet contract)
    Jet2 dx() const { return raw_dx().truncated(order_ - 1); }
    Jet2 dy() const { return raw_dy().truncated(order_ - 1); }
    // term-by-term derivatives keeping the storage order; callers must justify
    // the top degree themselves (see directional_derivative)
    Jet2 raw_dx() const;
    Jet2 raw_dy() const;

    // exact division by x (resp. y); false when not divisible
    bool divide_x(Jet2& out) const;
    bool divide_y(Jet2& out) const;

    Gaussian eval(const Gaussian& x, const Gaussian& y) const;
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
    int order_;
    std::map<Mono2, Gaussian> c_;
};

// P evaluated at (gx, gy), where gx, gy have zero constant term.
// Composing then truncating equals composing the truncations.
Jet2 jet2_substitute(const Jet2& P, const Jet2& gx, const Jet2& gy);

} // namespace germ2
