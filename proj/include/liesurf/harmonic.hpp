#pragma once

#include <array>
#include <vector>

#include "liesurf/hodge.hpp"

namespace liesurf {

/// Grading of a harmonic space: total degree for de Rham, bidegree otherwise.
struct Grading {
    int degree = 0;
    int p = 0, q = 0;
    bool bigraded = false;

    static Grading total(int k) {
        Grading g;
        g.degree = k;
        return g;
    }
    static Grading bidegree(int p, int q) {
        Grading g;
        g.p = p;
        g.q = q;
        g.degree = p + q;
        g.bigraded = true;
        return g;
    }
    bool contains(int mask) const {
        if (bigraded) return mono_p(mask) == p && mono_q(mask) == q;
        return mono_degree(mask) == degree;
    }
    std::string to_string() const {
        if (bigraded) return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        return std::to_string(degree);
    }
};

inline std::vector<int> grading_monomials(const Grading& g) {
    std::vector<int> out;
    for (int m = 0; m < kMonomials; ++m)
        if (g.contains(m)) out.push_back(m);
    return out;
}

struct HarmonicBasis {
    Laplacian kind;
    Grading grading;
    std::vector<Form> basis;
    size_t dim() const { return basis.size(); }
};

namespace detail {

inline Form vector_to_form(const std::vector<Scalar>& v, const std::vector<int>& monos) {
    Form f;
    for (size_t i = 0; i < monos.size(); ++i) f[monos[i]] = v[i];
    return f;
}

/// Echelon-normalized kernel basis vector: denominators cleared, Gaussian
/// integer content one, and the leading coefficient rotated by a unit to be
/// positive real when possible (lexicographically largest of its four unit
/// multiples otherwise).
inline Form normalize_form(const Form& f) {
    BigInt lcm(1);
    for (int m = 0; m < kMonomials; ++m) {
        if (f[m].is_zero()) continue;
        for (const Rational* r : {&f[m].re(), &f[m].im()}) {
            if (r->is_zero()) continue;
            BigInt g = BigInt::gcd(lcm, r->den());
            lcm = lcm * (r->den() / g);
        }
    }
    Form scaled = Scalar(Rational(lcm, BigInt(1))) * f;
    BigInt content(0);
    for (int m = 0; m < kMonomials; ++m) {
        if (scaled[m].is_zero()) continue;
        content = BigInt::gcd(content, scaled[m].re().num());
        content = BigInt::gcd(content, scaled[m].im().num());
    }
    if (!content.is_zero() && content != BigInt(1)) scaled = Scalar(Rational(BigInt(1), content)) * scaled;
    for (int m = 0; m < kMonomials; ++m) {
        if (scaled[m].is_zero()) continue;
        Scalar best = scaled[m], unit(1);
        for (const Scalar& u : {Scalar(-1), Scalar::i(), -Scalar::i()}) {
            Scalar cand = u * scaled[m];
            if (cand.re() > best.re() || (cand.re() == best.re() && cand.im() > best.im())) {
                best = cand;
                unit = u;
            }
        }
        return unit * scaled;
    }
    return scaled;
}

/// Kernel of an operator restricted to one grading block, as Forms.
inline std::vector<Form> graded_kernel(const Matrix& full, const Grading& g) {
    std::vector<int> monos = grading_monomials(g);
    Matrix block(kMonomials, monos.size());
    for (size_t c = 0; c < monos.size(); ++c)
        for (int r = 0; r < kMonomials; ++r) block(static_cast<size_t>(r), c) = full(static_cast<size_t>(r), static_cast<size_t>(monos[c]));
    std::vector<Form> out;
    for (const auto& v : block.kernel_basis()) out.push_back(normalize_form(vector_to_form(v, monos)));
    return out;
}

/// Stacks operators vertically and takes the common graded kernel.
inline std::vector<Form> graded_common_kernel(const std::vector<const FormOperator*>& ops, const Grading& g) {
    std::vector<int> monos = grading_monomials(g);
    Matrix block(ops.size() * kMonomials, monos.size());
    for (size_t o = 0; o < ops.size(); ++o)
        for (size_t c = 0; c < monos.size(); ++c)
            for (int r = 0; r < kMonomials; ++r)
                block(o * kMonomials + static_cast<size_t>(r), c) =
                    ops[o]->matrix()(static_cast<size_t>(r), static_cast<size_t>(monos[c]));
    std::vector<Form> out;
    for (const auto& v : block.kernel_basis()) out.push_back(normalize_form(vector_to_form(v, monos)));
    return out;
}

inline std::vector<std::vector<Scalar>> forms_to_vectors(const std::vector<Form>& forms) {
    std::vector<std::vector<Scalar>> rows;
    for (const Form& f : forms) {
        std::vector<Scalar> v(kMonomials);
        for (int m = 0; m < kMonomials; ++m) v[static_cast<size_t>(m)] = f[m];
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace detail

inline bool same_form_span(const std::vector<Form>& a, const std::vector<Form>& b) {
    return same_span(detail::forms_to_vectors(a), detail::forms_to_vectors(b));
}

inline bool form_in_span(const Form& f, const std::vector<Form>& basis) {
    std::vector<Scalar> v(kMonomials);
    for (int m = 0; m < kMonomials; ++m) v[static_cast<size_t>(m)] = f[m];
    return in_span(v, detail::forms_to_vectors(basis));
}

/// Exact kernel basis of the chosen Laplacian on one grading block.
inline HarmonicBasis harmonic_basis(const HodgeContext& ctx, Laplacian kind, const Grading& g) {
    return HarmonicBasis{kind, g, detail::graded_kernel(ctx.laplacian(kind).matrix(), g)};
}

inline bool is_harmonic(const HodgeContext& ctx, Laplacian kind, const Form& f) {
    return ctx.laplacian(kind).apply(f).is_zero();
}

/// First-order characterizations of the fourth-order kernels:
///   Bott-Chern: del h = 0, delbar h = 0, del delbar * h = 0
///   Aeppli:     del delbar h = 0, del * h = 0, delbar * h = 0
inline HarmonicBasis kernel_characterization(const HodgeContext& ctx, Laplacian kind, const Grading& g) {
    if (kind != Laplacian::BottChern && kind != Laplacian::Aeppli)
        throw DomainError("kernel_characterization: only Bott-Chern and Aeppli kinds");
    FormOperator dd = ctx.del() * ctx.delbar();
    if (kind == Laplacian::BottChern) {
        FormOperator dds = dd * ctx.star_op();
        return HarmonicBasis{kind, g, detail::graded_common_kernel({&ctx.del(), &ctx.delbar(), &dds}, g)};
    }
    FormOperator ps = ctx.del() * ctx.star_op();
    FormOperator qs = ctx.delbar() * ctx.star_op();
    return HarmonicBasis{kind, g, detail::graded_common_kernel({&dd, &ps, &qs}, g)};
}

/// Cohomology dimension table: Betti numbers plus (p,q) tables for the
/// Dolbeault, Bott-Chern and Aeppli theories.
struct CohomologyDims {
    std::array<size_t, 5> betti{};
    std::array<std::array<size_t, 3>, 3> dolbeault{}, bott_chern{}, aeppli{};
};

inline CohomologyDims cohomology_dims(const HodgeContext& ctx) {
    CohomologyDims t;
    for (int k = 0; k <= 4; ++k) t.betti[static_cast<size_t>(k)] = harmonic_basis(ctx, Laplacian::DeRham, Grading::total(k)).dim();
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
            Grading g = Grading::bidegree(p, q);
            t.dolbeault[static_cast<size_t>(p)][static_cast<size_t>(q)] = harmonic_basis(ctx, Laplacian::Dolbeault, g).dim();
            t.bott_chern[static_cast<size_t>(p)][static_cast<size_t>(q)] = harmonic_basis(ctx, Laplacian::BottChern, g).dim();
            t.aeppli[static_cast<size_t>(p)][static_cast<size_t>(q)] = harmonic_basis(ctx, Laplacian::Aeppli, g).dim();
        }
    }
    return t;
}

/// Star dualities between harmonic spaces:
///   deRham^k -> deRham^{4-k};  Dolbeault (p,q) -> conj-Dolbeault (2-q,2-p);
///   Bott-Chern (p,q) -> Aeppli (2-q,2-p).  All checked as exact span equalities.
struct DualityReport {
    bool de_rham = true, dolbeault = true, bott_chern_aeppli = true;
    std::string detail;
    bool ok() const { return de_rham && dolbeault && bott_chern_aeppli; }
};

inline DualityReport duality_check(const HodgeContext& ctx) {
    DualityReport rep;
    auto starred = [&](const HarmonicBasis& hb) {
        std::vector<Form> out;
        for (const Form& f : hb.basis) out.push_back(ctx.star(f));
        return out;
    };
    for (int k = 0; k <= 4; ++k) {
        auto from = harmonic_basis(ctx, Laplacian::DeRham, Grading::total(k));
        auto to = harmonic_basis(ctx, Laplacian::DeRham, Grading::total(4 - k));
        if (!same_form_span(starred(from), to.basis)) {
            rep.de_rham = false;
            rep.detail += "deRham degree " + std::to_string(k) + "; ";
        }
    }
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
            auto from_d = harmonic_basis(ctx, Laplacian::Dolbeault, Grading::bidegree(p, q));
            auto to_d = harmonic_basis(ctx, Laplacian::DolbeaultConj, Grading::bidegree(2 - q, 2 - p));
            if (!same_form_span(starred(from_d), to_d.basis)) {
                rep.dolbeault = false;
                rep.detail += "dolbeault (" + std::to_string(p) + "," + std::to_string(q) + "); ";
            }
            auto from_bc = harmonic_basis(ctx, Laplacian::BottChern, Grading::bidegree(p, q));
            auto to_a = harmonic_basis(ctx, Laplacian::Aeppli, Grading::bidegree(2 - q, 2 - p));
            if (!same_form_span(starred(from_bc), to_a.basis)) {
                rep.bott_chern_aeppli = false;
                rep.detail += "bott-chern->aeppli (" + std::to_string(p) + "," + std::to_string(q) + "); ";
            }
        }
    }
    return rep;
}

}  // namespace liesurf
