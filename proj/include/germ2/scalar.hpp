#pragma once
#include <gmpxx.h>
#include <complex>
#include <string>
#include "germ2/error.hpp"

namespace germ2 {

using Int = mpz_class;
using Rat = mpq_class; // always canonical: reduced, positive denominator

inline Rat rat(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q);      // "3", "-1/2"
double rat_to_double(const Rat& q);
bool rat_is_integer(const Rat& q);

/// Exact complex scalar a+bi with rational real/imaginary parts.
/// The coefficient field of every exact computation in this project.
struct Gaussian {
    Rat re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long n) : re(n, 1), im(0) {}
    Gaussian(const Rat& r) : re(r), im(0) {}
    Gaussian(const Rat& r, const Rat& i) : re(r), im(i) {}

    static Gaussian i() { return Gaussian(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_rational() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, Rat(-im)); }
    Rat norm() const { return re * re + im * im; } // a^2+b^2

    Gaussian operator-() const { return Gaussian(Rat(-re), Rat(-im)); }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        Rat r = re * o.re - im * o.im;
        Rat i2 = re * o.im + im * o.re;
        re = r; im = i2;
        return *this;
    }
    Gaussian inv() const;
    Gaussian& operator/=(const Gaussian& o) { return *this *= o.inv(); }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    Gaussian pow(unsigned long e) const;
    std::complex<double> to_complex() const { return {rat_to_double(re), rat_to_double(im)}; }
};

// Canonical text form: "p/q", "p/q+r/s*i", "p/q-r/s*i", "r/s*i", "i", "-i".
// Minus signs fold into numerators; /1 is omitted. Re-parseable bit-exactly.
std::string gaussian_str(const Gaussian& g);

// Parses exactly the forms gaussian_str produces, plus whitespace-free
// variants the germ grammar allows for scalar literals.
Gaussian gaussian_parse(const std::string& text);

// Total order for canonical sorting (not a field order): lexicographic on (re, im).
inline bool gaussian_less(const Gaussian& a, const Gaussian& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

} // namespace germ2
