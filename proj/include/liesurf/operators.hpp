#pragma once

#include "liesurf/algebra.hpp"
#include "liesurf/form.hpp"
#include "liesurf/matrix.hpp"

namespace liesurf {

/// Linear operator on the 16-dimensional form algebra, materialized as an
/// exact 16x16 matrix over the canonical monomial basis.
class FormOperator {
public:
    FormOperator() : m_(kMonomials, kMonomials) {}
    explicit FormOperator(Matrix m) : m_(std::move(m)) {}

    static FormOperator zero() { return FormOperator(); }
    static FormOperator identity() { return FormOperator(Matrix::identity(kMonomials)); }

    /// Builds the operator from its values on monomials.
    template <typename Fn>
    static FormOperator from_action(Fn&& action) {
        FormOperator op;
        for (int col = 0; col < kMonomials; ++col) {
            Form out = action(col);
            for (int row = 0; row < kMonomials; ++row) op.m_(row, col) = out[row];
        }
        return op;
    }

    const Matrix& matrix() const { return m_; }

    Form apply(const Form& f) const {
        Form out;
        for (int col = 0; col < kMonomials; ++col) {
            if (f[col].is_zero()) continue;
            for (int row = 0; row < kMonomials; ++row) {
                if (!m_(row, col).is_zero()) out[row] += m_(row, col) * f[col];
            }
        }
        return out;
    }
    Form operator()(const Form& f) const { return apply(f); }

    friend FormOperator operator*(const FormOperator& a, const FormOperator& b) {
        return FormOperator(a.m_ * b.m_);
    }
    friend FormOperator operator+(const FormOperator& a, const FormOperator& b) {
        return FormOperator(a.m_ + b.m_);
    }
    friend FormOperator operator-(const FormOperator& a, const FormOperator& b) {
        return FormOperator(a.m_ - b.m_);
    }
    FormOperator operator-() const { return FormOperator(-m_); }
    friend bool operator==(const FormOperator& a, const FormOperator& b) { return a.m_ == b.m_; }
    friend bool operator!=(const FormOperator& a, const FormOperator& b) { return !(a == b); }

    bool is_zero() const { return m_.is_zero(); }

private:
    Matrix m_;
};

/// Exterior differential of a spec, extended from the generators as a
/// degree +1 derivation.
inline FormOperator exterior_d(const AlgebraSpec& spec) {
    Form dgen[kAlphabet];
    for (int i = 0; i < kAlphabet; ++i) dgen[i] = spec.d_generator(i);
    return FormOperator::from_action([&](int mask) {
        Form out;
        for (int i = 0; i < kAlphabet; ++i) {
            if (!(mask & (1 << i))) continue;
            int prefix = mask & ((1 << i) - 1);
            int suffix = mask & ~((1 << (i + 1)) - 1);
            Form term = wedge(Form::monomial(prefix), wedge(dgen[i], Form::monomial(suffix)));
            out += (mono_degree(prefix) % 2 == 0) ? term : -term;
        }
        return out;
    });
}

/// Splits d into (del, delbar) by bidegree of the image monomials.
/// Throws NonIntegrable when some column has a component outside the
/// (p+1,q) + (p,q+1) slots.
inline void split_bidegree(const FormOperator& d, FormOperator& del, FormOperator& delbar) {
    Matrix mdel(kMonomials, kMonomials), mdelbar(kMonomials, kMonomials);
    for (int col = 0; col < kMonomials; ++col) {
        int p = mono_p(col), q = mono_q(col);
        for (int row = 0; row < kMonomials; ++row) {
            const Scalar& v = d.matrix()(row, col);
            if (v.is_zero()) continue;
            int rp = mono_p(row), rq = mono_q(row);
            if (rp == p + 1 && rq == q)
                mdel(row, col) = v;
            else if (rp == p && rq == q + 1)
                mdelbar(row, col) = v;
            else
                throw NonIntegrable("d maps a (" + std::to_string(p) + "," + std::to_string(q) + ")-monomial to (" +
                                    std::to_string(rp) + "," + std::to_string(rq) + ")");
        }
    }
    del = FormOperator(std::move(mdel));
    delbar = FormOperator(std::move(mdelbar));
}

/// Operator conjugation: (conj o A o conj) as a matrix.
inline FormOperator conjugated_operator(const FormOperator& a) {
    return FormOperator::from_action(
        [&](int mask) { return conjugate_form(a.apply(conjugate_form(Form::monomial(mask)))); });
}

}  // namespace liesurf
