#pragma once

#include <string>

#include "liesurf/form.hpp"

namespace liesurf {

/// Invariant Hermitian metric, parametrized by (r^2, s^2, u) through
///   2 omega = i r^2 phi^{11b} + i s^2 phi^{22b} + u phi^{12b} - ub phi^{21b}.
/// Construction enforces positivity: r^2 > 0, s^2 > 0, V = r^2 s^2 - |u|^2 > 0.
class Metric {
public:
    Metric(Rational r2, Rational s2, Scalar u) : r2_(std::move(r2)), s2_(std::move(s2)), u_(std::move(u)) {
        if (r2_.sign() <= 0) throw InvalidMetric("r^2 <= 0");
        if (s2_.sign() <= 0) throw InvalidMetric("s^2 <= 0");
        V_ = r2_ * s2_ - u_.norm_sq_r();
        if (V_.sign() <= 0) throw InvalidMetric("V <= 0");
    }

    const Rational& r2() const { return r2_; }
    const Rational& s2() const { return s2_; }
    const Scalar& u() const { return u_; }
    const Rational& V() const { return V_; }
    bool diagonal() const { return u_.is_zero(); }

    friend bool operator==(const Metric& a, const Metric& b) {
        return a.r2_ == b.r2_ && a.s2_ == b.s2_ && a.u_ == b.u_;
    }
    friend bool operator!=(const Metric& a, const Metric& b) { return !(a == b); }

    Metric scaled(const Rational& lambda) const { return Metric(lambda * r2_, lambda * s2_, Scalar(lambda) * u_); }

    /// Full Gram matrix g(phi_I, phi_H) on the complexified frame; zero on
    /// same-type pairs, g(phi_1, phi_1b) = r^2/2 etc.
    Scalar gram(int i, int h) const {
        Rational half(1, 2);
        auto entry = [&](int a, int bb) -> Scalar {  // a unbarred slot, bb barred slot
            if (a == 0 && bb == 2) return Scalar(half * r2_);
            if (a == 1 && bb == 3) return Scalar(half * s2_);
            if (a == 0 && bb == 3) return Scalar(-Scalar::i()) * u_ * Scalar(half);   // -i u / 2
            if (a == 1 && bb == 2) return Scalar::i() * u_.conj() * Scalar(half);     // i ub / 2
            return Scalar(0);
        };
        if (!is_barred(i) && is_barred(h)) return entry(i, h);
        if (is_barred(i) && !is_barred(h)) return entry(h, i);
        return Scalar(0);
    }

    /// Inverse Gram matrix; g^{1 1b} = 2 s^2 / V etc.
    Scalar gram_inv(int i, int h) const {
        Scalar two_over_v = Scalar(Rational(2) / V_);
        auto entry = [&](int a, int bb) -> Scalar {
            if (a == 0 && bb == 2) return two_over_v * Scalar(s2_);
            if (a == 1 && bb == 3) return two_over_v * Scalar(r2_);
            if (a == 0 && bb == 3) return -Scalar::i() * u_.conj() * two_over_v;  // -2i ub / V
            if (a == 1 && bb == 2) return Scalar::i() * u_ * two_over_v;          // 2i u / V
            return Scalar(0);
        };
        if (!is_barred(i) && is_barred(h)) return entry(i, h);
        if (is_barred(i) && !is_barred(h)) return entry(h, i);
        return Scalar(0);
    }

    std::string to_string() const { return r2_.to_string() + "," + s2_.to_string() + "," + u_.to_string(); }

    /// Parses "r2,s2,u" with exact rational/scalar text.
    static Metric from_string(const std::string& text) {
        size_t c1 = text.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("metric: expected \"r2,s2,u\", got \"" + text + "\"");
        return Metric(Rational::from_string(text.substr(0, c1)), Rational::from_string(text.substr(c1 + 1, c2 - c1 - 1)),
                      Scalar::from_string(text.substr(c2 + 1)));
    }

private:
    Rational r2_, s2_;
    Scalar u_;
    Rational V_;
};

/// The fundamental (1,1)-form omega of the metric.
inline Form fundamental_form(const Metric& m) {
    Form two_omega;
    two_omega[0b0100 | 0b0001] = Scalar(Rational(0), m.r2());            // i r^2 phi^{11b}
    two_omega[0b1000 | 0b0010] = Scalar(Rational(0), m.s2());            // i s^2 phi^{22b}
    two_omega[0b1000 | 0b0001] = m.u();                                  // u phi^{12b}
    two_omega[0b0100 | 0b0010] = -m.u().conj();                          // -ub phi^{21b}
    return Scalar(Rational(1, 2)) * two_omega;
}

/// vol = omega^2 / 2 = (V/4) phi^{121b2b}.
inline Form volume_form(const Metric& m) {
    Form omega = fundamental_form(m);
    return Scalar(Rational(1, 2)) * wedge(omega, omega);
}

}  // namespace liesurf
