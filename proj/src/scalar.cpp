#include "germ2/scalar.hpp"
#include <cctype>

namespace germ2 {

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

Gaussian Gaussian::inv() const {
    if (is_zero()) throw MathError("scalar: division by zero");
    Rat n = norm();
    return Gaussian(re / n, Rat(-im) / n);
}

Gaussian Gaussian::pow(unsigned long e) const {
    Gaussian acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string gaussian_str(const Gaussian& g) {
    if (g.im == 0) return rat_str(g.re);
    std::string is;
    if (g.im == 1) is = "i";
    else if (g.im == -1) is = "-i";
    else is = rat_str(g.im) + "*i";
    if (g.re == 0) return is;
    if (g.im > 0 && g.im != 1) return rat_str(g.re) + "+" + is;
    if (g.im == 1) return rat_str(g.re) + "+i";
    return rat_str(g.re) + is; // negative imaginary part carries its own sign
}

namespace {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarLexer(const std::string& str) : s(str) {}
    void skip_ws() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++; }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    char get() { skip_ws(); return s[pos++]; }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
        if (pos == start) throw MathError("scalar: expected digits in '" + s + "'");
        if (pos < s.size() && s[pos] == '.')
            throw MathError("scalar: non-rational literal in '" + s + "'");
        return Int(s.substr(start, pos - start));
    }

    // [-]p[/q][*i] | [-]i
    Gaussian term() {
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
        }
        Rat mag;
        bool imag = false;
        if (peek() == 'i') {
            get();
            mag = 1;
            imag = true;
        } else {
            Int num = integer();
            Int den = 1;
            if (peek() == '/') { get(); den = integer(); }
            if (den == 0) throw MathError("scalar: zero denominator");
            mag = Rat(num, den);
            mag.canonicalize();
            if (peek() == '*') {
                get();
                if (peek() != 'i') throw MathError("scalar: expected i after *");
                get();
                imag = true;
            }
        }
        if (neg) mag = -mag;
        return imag ? Gaussian(Rat(0), mag) : Gaussian(mag);
    }
};

} // namespace

Gaussian gaussian_parse(const std::string& text) {
    ScalarLexer lx(text);
    Gaussian g = lx.term();
    while (!lx.eof()) {
        char c = lx.peek();
        if (c != '+' && c != '-')
            throw MathError("scalar: trailing characters in '" + text + "'");
        g += lx.term();
    }
    return g;
}

} // namespace germ2
