#pragma once
#include <vector>
#include <complex>
#include "germ2/scalar.hpp"

namespace germ2 {

inline bool scalar_is_zero(const Gaussian& g) { return g.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
inline Gaussian scalar_from_long(const Gaussian*, long n) { return Gaussian(n); }
inline std::complex<double> scalar_from_long(const std::complex<double>*, long n) { return {double(n), 0.0}; }

/// Truncated power series in one variable: terms of degree > order are
/// discarded. K is Gaussian for exact work or complex<double> for the
/// numeric-root mode.
template <class K>
class Jet1T {
public:
    Jet1T() : order_(0), c_(1, K(0)) {}
    explicit Jet1T(int order) : order_(order), c_(order + 1, K(0)) {}
    Jet1T(int order, std::vector<K> coeffs) : order_(order), c_(std::move(coeffs)) {
        c_.resize(order + 1, K(0));
    }

    static Jet1T var(int order) {
        Jet1T j(order);
        if (order >= 1) j.c_[1] = K(1);
        return j;
    }
    static Jet1T constant(const K& k, int order) {
        Jet1T j(order);
        j.c_[0] = k;
        return j;
    }

    int order() const { return order_; }
    const K& coeff(int d) const { static const K z{}; return d <= order_ ? c_[d] : z; }
    void set_coeff(int d, const K& k) { if (d <= order_) c_[d] = k; }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& k : c_) if (!scalar_is_zero(k)) return false;
        return true;
    }
    int low_degree() const { // smallest nonzero degree, order+1 if zero
        for (int d = 0; d <= order_; d++) if (!scalar_is_zero(c_[d])) return d;
        return order_ + 1;
    }

    Jet1T truncated(int n) const {
        Jet1T r(std::min(n, order_));
        for (int d = 0; d <= r.order_; d++) r.c_[d] = c_[d];
        return r;
    }

    Jet1T operator-() const {
        Jet1T r = *this;
        for (auto& k : r.c_) k = -k;
        return r;
    }
    friend Jet1T operator+(const Jet1T& a, const Jet1T& b) {
        Jet1T r(std::min(a.order_, b.order_));
        for (int d = 0; d <= r.order_; d++) r.c_[d] = a.c_[d] + b.c_[d];
        return r;
    }
    friend Jet1T operator-(const Jet1T& a, const Jet1T& b) {
        Jet1T r(std::min(a.order_, b.order_));
        for (int d = 0; d <= r.order_; d++) r.c_[d] = a.c_[d] - b.c_[d];
        return r;
    }
    friend Jet1T operator*(const Jet1T& a, const Jet1T& b) {
        Jet1T r(std::min(a.order_, b.order_));
        for (int da = 0; da <= std::min(a.order_, r.order_); da++) {
            if (scalar_is_zero(a.c_[da])) continue;
            for (int db = 0; da + db <= r.order_ && db <= b.order_; db++)
                r.c_[da + db] += a.c_[da] * b.c_[db];
        }
        return r;
    }
    friend Jet1T operator*(const K& s, const Jet1T& a) {
        Jet1T r = a;
        for (auto& k : r.c_) k = s * k;
        return r;
    }
    friend bool operator==(const Jet1T& a, const Jet1T& b) {
        if (a.order_ != b.order_) return false;
        for (int d = 0; d <= a.order_; d++)
            if (!scalar_is_zero(a.c_[d] - b.c_[d])) return false;
        return true;
    }

    Jet1T& operator+=(const Jet1T& o) { *this = *this + o; return *this; }
    Jet1T& operator-=(const Jet1T& o) { *this = *this - o; return *this; }
    Jet1T& operator*=(const Jet1T& o) { *this = *this * o; return *this; }

    Jet1T derivative() const {
        Jet1T r(std::max(order_ - 1, 0));
        for (int d = 1; d <= order_; d++) r.c_[d - 1] = scalar_from_long((K*)nullptr, d) * c_[d];
        return r;
    }

    // multiplicative inverse; requires a unit constant term
    Jet1T inverse() const {
        Jet1T r(order_);
        K c0 = c_[0];
        K c0inv = K(1) / c0;
        r.c_[0] = c0inv;
        for (int d = 1; d <= order_; d++) {
            K acc = K(0);
            for (int m = 1; m <= d; m++) acc += c_[m] * r.c_[d - m];
            r.c_[d] = -c0inv * acc;
        }
        return r;
    }

private:
    int order_;
    std::vector<K> c_;
};

using Jet1 = Jet1T<Gaussian>;

// g(h(x)) for series with h(0) = 0, truncated at min order.
template <class K>
Jet1T<K> jet1_compose(const Jet1T<K>& g, const Jet1T<K>& h) {
    int n = std::min(g.order(), h.order());
    Jet1T<K> acc(n);
    for (int d = g.order() > n ? n : g.order(); d >= 0; d--) {
        acc = acc * h.truncated(n);
        acc.set_coeff(0, acc.coeff(0) + g.coeff(d));
    }
    return acc;
}

// compositional inverse of h = c1*x + ..., c1 invertible
template <class K>
Jet1T<K> jet1_invert(const Jet1T<K>& h) {
    int n = h.order();
    K c1 = h.coeff(1);
    K c1inv = K(1) / c1;
    Jet1T<K> g(n);
    g.set_coeff(1, c1inv);
    for (int d = 2; d <= n; d++) {
        Jet1T<K> e = jet1_compose(h, g);
        e.set_coeff(1, e.coeff(1) - K(1));
        for (int m = 0; m <= n; m++)
            g.set_coeff(m, g.coeff(m) - c1inv * e.coeff(m));
    }
    return g;
}

} // namespace germ2
