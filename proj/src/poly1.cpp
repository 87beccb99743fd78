#include "germ2/poly1.hpp"
#include <algorithm>

namespace germ2 {

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly1 Poly1::monomial(const Gaussian& c, int deg) {
    Poly1 p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Gaussian(0));
        p.c_[deg] = c;
    }
    return p;
}

const Gaussian& Poly1::leading() const {
    static const Gaussian zero;
    return c_.empty() ? zero : c_.back();
}

void Poly1::set_coeff(int d, const Gaussian& g) {
    if ((int)c_.size() <= d) c_.resize(d + 1, Gaussian(0));
    c_[d] = g;
    trim();
}

Poly1 Poly1::operator-() const {
    Poly1 r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Gaussian(0));
    for (size_t k = 0; k < o.c_.size(); k++) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Gaussian(0));
    for (size_t k = 0; k < o.c_.size(); k++) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    Poly1 r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Gaussian(0));
    for (size_t k = 0; k < a.c_.size(); k++) {
        if (a.c_[k].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); j++)
            r.c_[k + j] += a.c_[k] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly1 operator*(const Gaussian& s, const Poly1& p) {
    Poly1 r = p;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Gaussian Poly1::eval(const Gaussian& x) const {
    Gaussian acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::complex<double> Poly1::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].to_complex();
    return acc;
}

Poly1 Poly1::derivative() const {
    Poly1 r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); k++) r.c_[k - 1] = Gaussian(Rat((long)k)) * c_[k];
    r.trim();
    return r;
}

Poly1 Poly1::pow(unsigned e) const {
    Poly1 acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    return leading().inv() * *this;
}

Poly1 Poly1::reversed(int target_deg) const {
    Poly1 r;
    if (is_zero()) return r;
    r.c_.assign(target_deg + 1, Gaussian(0));
    for (int d = 0; d <= degree(); d++) r.c_[target_deg - d] = c_[d];
    r.trim();
    return r;
}

Poly1 Poly1::taylor_shift(const Gaussian& c) const {
    // in-place synthetic shift: result[k] = p^(k)(c)/k!
    std::vector<Gaussian> b = c_;
    int d = degree();
    for (int k = 0; k < d; k++)
        for (int j = d - 1; j >= k; j--)
            b[j] += c * b[j + 1];
    return Poly1(std::move(b));
}

std::pair<Poly1, Poly1> poly_divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw MathError("scalar: division by zero polynomial");
    Poly1 q, r = a;
    Gaussian lb_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Gaussian f = r.leading() * lb_inv;
        q += Poly1::monomial(f, d);
        r -= Poly1::monomial(f, d) * b;
    }
    return {q, r};
}

bool poly_divides(const Poly1& d, const Poly1& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return poly_divmod(a, d).second.is_zero();
}

Poly1 poly_gcd(const Poly1& a, const Poly1& b) {
    Poly1 x = a, y = b;
    while (!y.is_zero()) {
        Poly1 r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Gaussian poly_resultant(const Poly1& a, const Poly1& b) {
    // res(a,b) by the Euclidean remainder formula
    if (a.is_zero() || b.is_zero()) return Gaussian(0);
    if (a.degree() == 0) return a.leading().pow(b.degree());
    if (b.degree() == 0) return b.leading().pow(a.degree());
    if (a.degree() < b.degree()) {
        Gaussian sign = ((a.degree() * b.degree()) % 2) ? Gaussian(-1) : Gaussian(1);
        return sign * poly_resultant(b, a);
    }
    Poly1 r = poly_divmod(a, b).second;
    if (r.is_zero()) return Gaussian(0);
    Gaussian sign = ((a.degree() * b.degree()) % 2) ? Gaussian(-1) : Gaussian(1);
    return sign * b.leading().pow(a.degree() - r.degree()) * poly_resultant(b, r);
}

namespace {

struct GaussInt {
    Int re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    Int norm() const { return re * re + im * im; }
    GaussInt mul(const GaussInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

// exact division in Z[i]; returns false when w does not divide z
bool gauss_divide(const GaussInt& z, const GaussInt& w, GaussInt& out) {
    Int n = w.norm();
    Int a = z.re * w.re + z.im * w.im;
    Int b = z.im * w.re - z.re * w.im;
    if (a % n != 0 || b % n != 0) return false;
    out = {a / n, b / n};
    return true;
}

// divisors of z in Z[i] up to units, via trial factorization of the norm
std::vector<GaussInt> gauss_divisors(GaussInt z) {
    if (z.is_zero()) throw MathError("scalar: divisor enumeration of zero");
    Int n = z.norm();
    std::vector<std::pair<GaussInt, int>> primes; // gaussian prime, max exponent dividing z
    auto record = [&](const GaussInt& pi) {
        GaussInt cur = z;
        int e = 0;
        GaussInt q;
        while (gauss_divide(cur, pi, q)) {
            cur = q;
            e++;
        }
        if (e > 0) primes.push_back({pi, e});
    };
    Int rem = n;
    Int p = 2;
    while (rem > 1) {
        if (p * p > rem) p = rem; // remaining cofactor is prime
        else if (p > 10000000)
            throw MathError("scalar: exact root search: coefficient too large to factor");
        if (rem % p == 0) {
            while (rem % p == 0) rem /= p;
            if (p == 2) {
                record({1, 1});
            } else if (p % 4 == 3) {
                record({p, 0});
            } else {
                // p = a^2 + b^2 by direct search
                Int a = 1;
                while (true) {
                    Int b2 = p - a * a;
                    Int b = sqrt(b2);
                    if (b * b == b2) {
                        record({a, b});
                        record({a, -b});
                        break;
                    }
                    a++;
                }
            }
        }
        p = p + (p == 2 ? 1 : 2);
    }
    std::vector<GaussInt> divs{{1, 0}};
    for (auto& [pi, e] : primes) {
        std::vector<GaussInt> next;
        for (auto& d : divs) {
            GaussInt cur = d;
            next.push_back(cur);
            for (int k = 0; k < e; k++) {
                cur = cur.mul(pi);
                next.push_back(cur);
            }
        }
        divs = std::move(next);
    }
    return divs;
}

} // namespace

std::vector<std::pair<Gaussian, int>> poly_rational_roots(const Poly1& p) {
    std::vector<std::pair<Gaussian, int>> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    Poly1 q = p;

    // deflate roots at the origin
    int zmult = 0;
    while (!q.is_zero() && q.coeff(0).is_zero()) {
        std::vector<Gaussian> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly1(std::move(shifted));
        zmult++;
    }
    if (zmult > 0) roots.push_back({Gaussian(0), zmult});
    if (q.degree() < 1) return roots;

    // clear denominators
    Int L = 1;
    for (auto& c : q.coeffs()) {
        L = lcm(L, c.re.get_den());
        L = lcm(L, c.im.get_den());
    }
    std::vector<GaussInt> zc;
    for (auto& c : q.coeffs()) {
        Rat re = c.re * L, im = c.im * L;
        zc.push_back({re.get_num(), im.get_num()});
    }
    auto cand_num = gauss_divisors(zc.front());
    auto cand_den = gauss_divisors(zc.back());
    const Gaussian I = Gaussian::i();
    std::vector<Gaussian> found;
    for (auto& u : cand_num)
        for (auto& w : cand_den) {
            Gaussian base = Gaussian(Rat(u.re), Rat(u.im)) / Gaussian(Rat(w.re), Rat(w.im));
            Gaussian cand = base;
            for (int unit = 0; unit < 4; unit++) {
                if (q.eval(cand).is_zero() &&
                    std::find(found.begin(), found.end(), cand) == found.end())
                    found.push_back(cand);
                cand *= I;
            }
        }
    std::sort(found.begin(), found.end(), gaussian_less);
    for (auto& r : found) {
        Poly1 lin(std::vector<Gaussian>{-r, Gaussian(1)});
        int mult = 0;
        while (true) {
            auto [quot, rem] = poly_divmod(q, lin);
            if (!rem.is_zero()) break;
            q = quot;
            mult++;
        }
        roots.push_back({r, mult});
    }
    return roots;
}

std::string poly_str(const Poly1& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; d--) {
        Gaussian c = p.coeff(d);
        if (c.is_zero()) continue;
        bool first = out.empty();
        std::string cs;
        bool need_star = true;
        if (d == 0) {
            cs = gaussian_str(c);
            need_star = false;
        } else if (c.is_one()) {
            cs = "";
            need_star = false;
        } else if (c == Gaussian(-1)) {
            cs = "-";
            need_star = false;
        } else if (c.is_rational() || c.re == 0) {
            cs = gaussian_str(c);
        } else {
            cs = "(" + gaussian_str(c) + ")";
        }
        std::string term = cs;
        if (d > 0) {
            if (need_star) term += "*";
            term += var;
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (first) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

} // namespace germ2
