#include "germ2/ratfunc.hpp"

namespace germ2 {

void RatFunc::assign(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw MathError("scalar: division by zero polynomial");
    if (num.is_zero()) {
        num_ = Poly1();
        den_ = Poly1(1);
        return;
    }
    Poly1 g = poly_gcd(num, den);
    Poly1 n = poly_divmod(num, g).first;
    Poly1 d = poly_divmod(den, g).first;
    Gaussian lead_inv = d.leading().inv();
    num_ = lead_inv * n;
    den_ = lead_inv * d;
}

const Poly1& RatFunc::as_poly() const {
    if (!is_polynomial()) throw MathError("scalar: rational function is not a polynomial");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw MathError("scalar: division by zero polynomial");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Gaussian RatFunc::eval(const Gaussian& x) const {
    Gaussian d = den_.eval(x);
    if (d.is_zero()) throw MathError("scalar: evaluation at a pole");
    return num_.eval(x) / d;
}

std::complex<double> RatFunc::eval(const std::complex<double>& x) const {
    return num_.eval(x) / den_.eval(x);
}

RatFunc RatFunc::reciprocal_scaled(int xpow) const {
    if (is_zero()) return RatFunc();
    int dn = num_.degree(), dd = den_.degree();
    Poly1 rn = num_.reversed(dn);
    Poly1 rd = den_.reversed(dd);
    int shift = xpow + dd - dn;
    if (shift >= 0)
        return RatFunc(rn * Poly1::monomial(Gaussian(1), shift), rd);
    return RatFunc(rn, rd * Poly1::monomial(Gaussian(1), -shift));
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return poly_str(num_, var);
    return "(" + poly_str(num_, var) + ")/(" + poly_str(den_, var) + ")";
}

RatFunc normalize_ratfunc(const Poly1& num, const Poly1& den) {
    return RatFunc(num, den);
}

Poly1 lagrange_interpolate(const std::vector<std::pair<Gaussian, Gaussian>>& points) {
    for (size_t a = 0; a < points.size(); a++)
        for (size_t b = a + 1; b < points.size(); b++)
            if (points[a].first == points[b].first)
                throw MathError("interpolation nodes not distinct");
    Poly1 acc;
    for (size_t a = 0; a < points.size(); a++) {
        Poly1 basis(1);
        Gaussian denom(1);
        for (size_t b = 0; b < points.size(); b++) {
            if (a == b) continue;
            basis *= Poly1(std::vector<Gaussian>{-points[b].first, Gaussian(1)});
            denom *= points[a].first - points[b].first;
        }
        acc += (points[a].second / denom) * basis;
    }
    return acc;
}

} // namespace germ2
