#pragma once

#include "liesurf/metric.hpp"
#include "liesurf/operators.hpp"

namespace liesurf {

enum class Laplacian { DeRham, Dolbeault, DolbeaultConj, BottChern, Aeppli };

inline const char* laplacian_name(Laplacian k) {
    switch (k) {
        case Laplacian::DeRham: return "deRham";
        case Laplacian::Dolbeault: return "dolbeault";
        case Laplacian::DolbeaultConj: return "dolbeault-conjugate";
        case Laplacian::BottChern: return "bott-chern";
        case Laplacian::Aeppli: return "aeppli";
    }
    return "?";
}

/// All metric-dependent operators for one (spec, metric) pair, built eagerly:
/// differentials, Hodge star, codifferentials, the five Laplacians, and the
/// Hermitian inner product on forms. Immutable once constructed.
class HodgeContext {
public:
    HodgeContext(AlgebraSpec spec, Metric metric)
        : spec_(std::move(spec)), metric_(std::move(metric)) {
        d_ = exterior_d(spec_);
        split_bidegree(d_, del_, delbar_);
        build_gram();
        build_star();
        // codifferentials on a 4-manifold: d* = -*d*, del* = -*delbar*, delbar* = -*del*
        dstar_ = -(star_ * d_ * star_);
        delstar_ = -(star_ * delbar_ * star_);
        delbarstar_ = -(star_ * del_ * star_);
        build_laplacians();
    }

    const AlgebraSpec& spec() const { return spec_; }
    const Metric& metric() const { return metric_; }

    const FormOperator& d() const { return d_; }
    const FormOperator& del() const { return del_; }
    const FormOperator& delbar() const { return delbar_; }
    const FormOperator& star_op() const { return star_; }
    const FormOperator& d_star() const { return dstar_; }
    const FormOperator& del_star() const { return delstar_; }
    const FormOperator& delbar_star() const { return delbarstar_; }

    Form star(const Form& f) const { return star_.apply(f); }

    const FormOperator& laplacian(Laplacian kind) const {
        switch (kind) {
            case Laplacian::DeRham: return lap_dr_;
            case Laplacian::Dolbeault: return lap_dolbeault_;
            case Laplacian::DolbeaultConj: return lap_dolbeault_conj_;
            case Laplacian::BottChern: return lap_bc_;
            case Laplacian::Aeppli: return lap_aeppli_;
        }
        throw DomainError("unknown laplacian kind");
    }

    /// Hermitian inner product; conjugate-linear in the second slot,
    /// orthogonal across distinct bidegrees.
    Scalar inner(const Form& a, const Form& b) const {
        Scalar acc;
        for (int ma = 0; ma < kMonomials; ++ma) {
            if (a[ma].is_zero()) continue;
            for (int mb = 0; mb < kMonomials; ++mb) {
                if (b[mb].is_zero() || mono_gram_(ma, mb).is_zero()) continue;
                acc += a[ma] * b[mb].conj() * mono_gram_(ma, mb);
            }
        }
        return acc;
    }

    Form volume() const { return volume_form(metric_); }

private:
    AlgebraSpec spec_;
    Metric metric_;
    FormOperator d_, del_, delbar_;
    FormOperator star_;
    FormOperator dstar_, delstar_, delbarstar_;
    FormOperator lap_dr_, lap_dolbeault_, lap_dolbeault_conj_, lap_bc_, lap_aeppli_;
    Matrix mono_gram_{kMonomials, kMonomials};  // <phi^M, phi^N>

    void build_gram() {
        // 1-form pairings <phi^I, phi^J> = g^{I, bar J}; k-form pairings are
        // the Gram determinants of the factors.
        Scalar one_gram[kAlphabet][kAlphabet];
        for (int i = 0; i < kAlphabet; ++i)
            for (int j = 0; j < kAlphabet; ++j) one_gram[i][j] = metric_.gram_inv(i, bar(j));
        for (int ma = 0; ma < kMonomials; ++ma) {
            for (int mb = 0; mb < kMonomials; ++mb) {
                if (mono_degree(ma) != mono_degree(mb)) continue;
                int ia[4], ib[4], n = 0, nb = 0;
                for (int i = 0; i < kAlphabet; ++i)
                    if (ma & (1 << i)) ia[n++] = i;
                for (int i = 0; i < kAlphabet; ++i)
                    if (mb & (1 << i)) ib[nb++] = i;
                mono_gram_(ma, mb) = gram_det(one_gram, ia, ib, n);
            }
        }
    }

    static Scalar gram_det(const Scalar g[kAlphabet][kAlphabet], const int* ia, const int* ib, int n) {
        if (n == 0) return Scalar(1);
        Matrix m(static_cast<size_t>(n), static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = g[ia[r]][ib[c]];
        // small determinant by Laplace expansion
        return det_small(m);
    }

    static Scalar det_small(const Matrix& m) {
        size_t n = m.rows();
        if (n == 1) return m(0, 0);
        Scalar acc;
        for (size_t c = 0; c < n; ++c) {
            if (m(0, c).is_zero()) continue;
            Matrix minor(n - 1, n - 1);
            for (size_t i = 1; i < n; ++i) {
                size_t jj = 0;
                for (size_t j = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(i - 1, jj++) = m(i, j);
                }
            }
            Scalar term = m(0, c) * det_small(minor);
            acc += (c % 2 == 0) ? term : -term;
        }
        return acc;
    }

    /// The star is solved from its defining relation
    ///   a wedge star(conj b) = <a, b> vol
    /// degree by degree; the complex-linear extension is then read off by
    /// composing with conjugation on monomials.
    void build_star() {
        Rational vol_coeff = metric_.V() / Rational(4);
        // S(b) := star(conj b) on monomials: for each (4-k)-monomial f the
        // only k-monomial pairing with it is its complement.
        Matrix s_cols(kMonomials, kMonomials);
        for (int b = 0; b < kMonomials; ++b) {
            int k = mono_degree(b);
            for (int f = 0; f < kMonomials; ++f) {
                if (mono_degree(f) != 4 - k) continue;
                int a = 0b1111 & ~f;
                int sgn = wedge_sign(a, f);
                // a wedge (x f) = <a,b> vol  =>  x = sgn * <a,b> * V/4... inverted:
                // sgn * x = <a,b> * vol_coeff
                Scalar val = mono_gram_(a, b) * Scalar(vol_coeff);
                s_cols(f, b) = sgn < 0 ? -val : val;
            }
        }
        FormOperator s(std::move(s_cols));
        star_ = FormOperator::from_action([&](int mask) {
            Form sb = s.apply(Form::monomial(bar_mask(mask)));
            return bar_sign(mask) < 0 ? -sb : sb;
        });
    }

    void build_laplacians() {
        const FormOperator &dd = d_, &ds = dstar_;
        lap_dr_ = dd * ds + ds * dd;
        const FormOperator &p = del_, &ps = delstar_, &q = delbar_, &qs = delbarstar_;
        lap_dolbeault_ = q * qs + qs * q;
        lap_dolbeault_conj_ = p * ps + ps * p;
        lap_bc_ = p * q * qs * ps + qs * ps * p * q + qs * p * ps * q + ps * q * qs * p + qs * q + ps * p;
        lap_aeppli_ = p * ps + q * qs + qs * ps * p * q + p * q * qs * ps + p * qs * q * ps + q * ps * p * qs;
    }
};

}  // namespace liesurf
