#pragma once

#include <string>

#include "liesurf/rational.hpp"

namespace liesurf {

/// Gaussian rational a + b·i, the coefficient field of the whole engine.
/// Both parts are canonical Rationals; equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational n = b.norm_sq_r();
        return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// |z|^2 as a Scalar (always real, nonnegative).
    Scalar norm_sq() const { return Scalar(norm_sq_r()); }
    Rational norm_sq_r() const { return re_ * re_ + im_ * im_; }

    /// Text form "p/q+r/s i": signs allowed, either part omissible,
    /// bare "i"/"-i" accepted. No whitespace is produced; parsing skips it.
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string im_part;
        if (im_ == Rational(1))
            im_part = "i";
        else if (im_ == Rational(-1))
            im_part = "-i";
        else
            im_part = im_.to_string() + "i";
        if (re_.is_zero()) return im_part;
        if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
        return re_.to_string() + im_part;
    }

    static Scalar from_string(const std::string& text);

private:
    Rational re_, im_;
};

inline Scalar conj(const Scalar& a) { return a.conj(); }

namespace detail {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarLexer(const std::string& str) : s(str) { skip_ws(); }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    // one signed term: [+|-] ( digits[/digits] [i] | i )
    // writes into re/im accumulators
    void term(Rational& re, Rational& im) {
        skip_ws();
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        }
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            im += Rational(sign);
            return;
        }
        size_t start = pos;
        while (pos < s.size() && ((s[pos] >= '0' && s[pos] <= '9') || s[pos] == '/')) ++pos;
        if (pos == start) throw ParseError("scalar: expected digits or 'i' in \"" + s + "\"");
        Rational mag = Rational::from_string(s.substr(start, pos - start));
        skip_ws();
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            im += sign == -1 ? -mag : mag;
        } else {
            re += sign == -1 ? -mag : mag;
        }
    }
};

}  // namespace detail

inline Scalar Scalar::from_string(const std::string& text) {
    detail::ScalarLexer lex(text);
    if (lex.done()) throw ParseError("scalar: empty input");
    Rational re, im;
    lex.term(re, im);
    if (!lex.done()) {
        char c = lex.peek();
        if (c != '+' && c != '-') throw ParseError("scalar: unexpected character in \"" + text + "\"");
        lex.term(re, im);
    }
    if (!lex.done()) throw ParseError("scalar: trailing characters in \"" + text + "\"");
    return Scalar(re, im);
}

}  // namespace liesurf
