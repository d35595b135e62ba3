#pragma once

#include <array>
#include <string>
#include <vector>

#include "liesurf/indices.hpp"
#include "liesurf/scalar.hpp"

namespace liesurf {

/// Element of the 16-dimensional exterior algebra of invariant forms,
/// stored densely on the canonical monomial basis.
class Form {
public:
    Form() = default;

    static Form monomial(int mask, Scalar coeff = Scalar(1)) {
        Form f;
        f.c_[static_cast<size_t>(mask)] = std::move(coeff);
        return f;
    }
    /// phi^i as a 1-form, i in 0..3
    static Form generator(int i) { return monomial(1 << i); }
    static Form one() { return monomial(0); }

    const Scalar& operator[](int mask) const { return c_[static_cast<size_t>(mask)]; }
    Scalar& operator[](int mask) { return c_[static_cast<size_t>(mask)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Form& a, const Form& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    friend Form operator+(const Form& a, const Form& b) {
        Form r;
        for (int m = 0; m < kMonomials; ++m) r.c_[m] = a.c_[m] + b.c_[m];
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        Form r;
        for (int m = 0; m < kMonomials; ++m) r.c_[m] = a.c_[m] - b.c_[m];
        return r;
    }
    Form operator-() const {
        Form r;
        for (int m = 0; m < kMonomials; ++m) r.c_[m] = -c_[m];
        return r;
    }
    friend Form operator*(const Scalar& s, const Form& f) {
        Form r;
        for (int m = 0; m < kMonomials; ++m) r.c_[m] = s * f.c_[m];
        return r;
    }
    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }

    /// True when every nonzero monomial has the given bidegree.
    bool pure_bidegree(int p, int q) const {
        for (int m = 0; m < kMonomials; ++m) {
            if (!c_[m].is_zero() && (mono_p(m) != p || mono_q(m) != q)) return false;
        }
        return true;
    }
    bool pure_degree(int k) const {
        for (int m = 0; m < kMonomials; ++m) {
            if (!c_[m].is_zero() && mono_degree(m) != k) return false;
        }
        return true;
    }

    Form component_of_degree(int k) const {
        Form r;
        for (int m = 0; m < kMonomials; ++m) {
            if (mono_degree(m) == k) r.c_[m] = c_[m];
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int m = 0; m < kMonomials; ++m) {
            if (c_[m].is_zero()) continue;
            std::string term;
            std::string coeff = c_[m].to_string();
            if (m == 0) {
                term = coeff;
            } else if (coeff == "1") {
                term = "phi^" + mono_name(m);
            } else if (coeff == "-1") {
                term = "-phi^" + mono_name(m);
            } else {
                bool simple = coeff.find('+') == std::string::npos && coeff.find('-', 1) == std::string::npos;
                term = (simple ? coeff : "(" + coeff + ")") + "*phi^" + mono_name(m);
            }
            if (s.empty()) {
                s = term;
            } else if (!term.empty() && term[0] == '-') {
                s += " - " + term.substr(1);
            } else {
                s += " + " + term;
            }
        }
        return s;
    }

private:
    std::array<Scalar, kMonomials> c_{};
};

inline Form wedge(const Form& a, const Form& b) {
    Form r;
    for (int ma = 0; ma < kMonomials; ++ma) {
        if (a[ma].is_zero()) continue;
        for (int mb = 0; mb < kMonomials; ++mb) {
            if (b[mb].is_zero()) continue;
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Scalar term = a[ma] * b[mb];
            r[ma | mb] += s < 0 ? -term : term;
        }
    }
    return r;
}

/// Complex conjugation: bars every index, conjugates coefficients.
inline Form conjugate_form(const Form& a) {
    Form r;
    for (int m = 0; m < kMonomials; ++m) {
        if (a[m].is_zero()) continue;
        Scalar v = a[m].conj();
        r[bar_mask(m)] += bar_sign(m) < 0 ? -v : v;
    }
    return r;
}

/// Evaluation of a 3-form on a frame triple (phi_I, phi_H, phi_L):
/// picks the coefficient of the matching monomial with the permutation sign.
inline Scalar eval3(const Form& f, int i, int h, int l) {
    if (i == h || i == l || h == l) return Scalar(0);
    int mask = (1 << i) | (1 << h) | (1 << l);
    int seq[3] = {i, h, l};
    int inv = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (seq[a] > seq[b]) ++inv;
    Scalar v = f[mask];
    return (inv & 1) ? -v : v;
}

/// Monomial name parser: "1", "12b", "121b2b", ... in any index order;
/// returns the canonical mask and sign. "1" with no indices means the 0-form unit.
inline void parse_monomial(const std::string& text, int& mask, int& sign) {
    if (text.empty()) {
        mask = 0;
        sign = 1;
        return;
    }
    std::vector<int> seq;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c != '1' && c != '2') throw ParseError("monomial: bad index in \"" + text + "\"");
        int idx = c - '1';
        ++pos;
        if (pos < text.size() && text[pos] == 'b') {
            idx += 2;
            ++pos;
        }
        seq.push_back(idx);
    }
    mask = 0;
    for (int idx : seq) {
        if (mask & (1 << idx)) throw ParseError("monomial: repeated index in \"" + text + "\"");
        mask |= 1 << idx;
    }
    int inv = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    sign = (inv & 1) ? -1 : 1;
}

}  // namespace liesurf
