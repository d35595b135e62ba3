#pragma once

#include <string>

#include "liesurf/bigint.hpp"
#include "liesurf/errors.hpp"

namespace liesurf {

/// Exact rational number, always in canonical form: positive denominator,
/// gcd(num, den) = 1. Equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    /// Parses "p" or "p/q", optional leading sign.
    static Rational from_string(const std::string& s) {
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
            if (s.find('/', slash + 1) != std::string::npos) throw ParseError("rational: repeated '/' in \"" + s + "\"");
            return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
        } catch (const std::invalid_argument& e) {
            throw ParseError("rational: " + std::string(e.what()) + " in \"" + s + "\"");
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return (a - b).sign() >= 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root when the value is a square of a rational.
    bool sqrt_exact(Rational& out) const {
        if (sign() < 0) return false;
        BigInt rn, rd;
        if (!BigInt::sqrt_exact(num_, rn) || !BigInt::sqrt_exact(den_, rd)) return false;
        out = Rational(rn, rd);
        return true;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace liesurf
