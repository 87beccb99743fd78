#include "germ2/jet2.hpp"
#include <algorithm>

namespace germ2 {

Jet2 Jet2::constant(const Gaussian& c, int order) {
    Jet2 j(order);
    if (!c.is_zero()) j.c_[{0, 0}] = c;
    return j;
}

Jet2 Jet2::monomial(const Gaussian& c, int i, int j, int order) {
    Jet2 r(order);
    if (!c.is_zero() && i + j <= order) r.c_[{i, j}] = c;
    return r;
}

Gaussian Jet2::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Gaussian(0) : it->second;
}

void Jet2::set_coeff(int i, int j, const Gaussian& g) {
    if (i + j > order_) return;
    if (g.is_zero()) c_.erase({i, j});
    else c_[{i, j}] = g;
}

int Jet2::low_degree() const {
    if (c_.empty()) return order_ + 1;
    return c_.begin()->first.total();
}

Jet2 Jet2::homogeneous_part(int d) const {
    Jet2 r(order_);
    for (auto& [m, c] : c_)
        if (m.total() == d) r.c_[m] = c;
    return r;
}

Jet2 Jet2::truncated(int n) const {
    Jet2 r(std::min(n, order_));
    for (auto& [m, c] : c_)
        if (m.total() <= r.order_) r.c_[m] = c;
    return r;
}

Jet2 Jet2::padded(int n) const {
    Jet2 r(n);
    r.c_ = c_;
    return r;
}

Jet2 Jet2::operator-() const {
    Jet2 r = *this;
    for (auto& [m, c] : r.c_) c = -c;
    return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a.truncated(std::min(a.order_, b.order_));
    for (auto& [m, c] : b.c_) {
        if (m.total() > r.order_) continue;
        auto it = r.c_.find(m);
        if (it == r.c_.end()) {
            r.c_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    return a + (-b);
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    int n = std::min(a.order_, b.order_);
    Jet2 r(n);
    if (a.c_.empty() || b.c_.empty()) return r;
    // dense accumulator indexed by (total degree, x-exponent)
    std::vector<Gaussian> acc((n + 1) * (n + 2) / 2);
    auto slot = [](int d, int i) { return d * (d + 1) / 2 + i; };
    for (auto& [ma, ca] : a.c_) {
        if (ma.total() > n) break;
        for (auto& [mb, cb] : b.c_) {
            int d = ma.total() + mb.total();
            if (d > n) break;
            acc[slot(d, ma.i + mb.i)] += ca * cb;
        }
    }
    for (int d = 0; d <= n; d++)
        for (int i = 0; i <= d; i++) {
            Gaussian& g = acc[slot(d, i)];
            if (!g.is_zero()) r.c_[{i, d - i}] = g;
        }
    return r;
}

Jet2 operator*(const Gaussian& s, const Jet2& a) {
    Jet2 r(a.order_);
    if (s.is_zero()) return r;
    r.c_ = a.c_;
    for (auto& [m, c] : r.c_) c *= s;
    return r;
}

Jet2 Jet2::raw_dx() const {
    Jet2 r(order_);
    for (auto& [m, c] : c_)
        if (m.i >= 1) r.c_[{m.i - 1, m.j}] = Gaussian(Rat((long)m.i)) * c;
    return r;
}

Jet2 Jet2::raw_dy() const {
    Jet2 r(order_);
    for (auto& [m, c] : c_)
        if (m.j >= 1) r.c_[{m.i, m.j - 1}] = Gaussian(Rat((long)m.j)) * c;
    return r;
}

bool Jet2::divide_x(Jet2& out) const {
    Jet2 r(order_);
    for (auto& [m, c] : c_) {
        if (m.i < 1) return false;
        r.c_[{m.i - 1, m.j}] = c;
    }
    out = r;
    return true;
}

bool Jet2::divide_y(Jet2& out) const {
    Jet2 r(order_);
    for (auto& [m, c] : c_) {
        if (m.j < 1) return false;
        r.c_[{m.i, m.j - 1}] = c;
    }
    out = r;
    return true;
}

Gaussian Jet2::eval(const Gaussian& x, const Gaussian& y) const {
    Gaussian acc(0);
    for (auto& [m, c] : c_)
        acc += c * x.pow(m.i) * y.pow(m.j);
    return acc;
}

std::string Jet2::str(const std::string& vx, const std::string& vy) const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : c_) {
        std::string cs;
        bool need_star = true;
        bool constant_term = (m.i == 0 && m.j == 0);
        if (constant_term) {
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
        (void)need_star;
        auto append_var = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (!term.empty() && term != "-") term += "*";
            term += name;
            if (e > 1) term += "^" + std::to_string(e);
        };
        append_var(vx, m.i);
        append_var(vy, m.j);
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

Jet2 jet2_substitute(const Jet2& P, const Jet2& gx, const Jet2& gy) {
    int n = std::min({P.order(), gx.order(), gy.order()});
    Jet2 result(n);
    if (P.is_zero()) return result;

    // group P's terms by x-exponent, then Horner in gy per row
    std::map<int, std::vector<std::pair<int, Gaussian>>> rows; // i -> [(j, c)]
    int max_i = 0;
    for (auto& [m, c] : P.terms()) {
        if (m.total() > n) continue;
        rows[m.i].push_back({m.j, c});
        max_i = std::max(max_i, m.i);
    }
    // powers of gx up to max_i
    std::vector<Jet2> xpow;
    xpow.push_back(Jet2::constant(Gaussian(1), n));
    for (int a = 1; a <= max_i; a++) xpow.push_back(xpow.back() * gx);

    for (auto& [i, row] : rows) {
        // Horner over descending j
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first > b.first; });
        Jet2 acc(n);
        int cur_j = row.front().first;
        for (auto& [j, c] : row) {
            while (cur_j > j) { acc = acc * gy; cur_j--; }
            acc += Jet2::constant(c, n);
        }
        while (cur_j > 0) { acc = acc * gy; cur_j--; }
        result += xpow[i] * acc;
    }
    return result;
}

} // namespace germ2
