#pragma once

#include <optional>
#include <vector>

#include "liesurf/flow.hpp"
#include "liesurf/harmonic.hpp"

namespace liesurf {

/// A product of two harmonic forms that fails to be harmonic.
struct Witness {
    Form left, right, product;
    std::string describe() const {
        return "(" + left.to_string() + ") wedge (" + right.to_string() + ") = " + product.to_string();
    }
};

using ClosureResult = std::pair<bool, std::optional<Witness>>;

namespace detail {

inline std::vector<HarmonicBasis> all_harmonic(const HodgeContext& ctx, Laplacian kind) {
    std::vector<HarmonicBasis> out;
    if (kind == Laplacian::DeRham) {
        for (int k = 0; k <= 4; ++k) out.push_back(harmonic_basis(ctx, kind, Grading::total(k)));
    } else {
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) out.push_back(harmonic_basis(ctx, kind, Grading::bidegree(p, q)));
    }
    return out;
}

/// Checks that every pairwise product across the two collections stays in
/// the kernel of the Laplacian of `target_kind`. Products of degree > 4
/// vanish and zero counts as harmonic, so closure on basis pairs is the
/// whole statement by bilinearity. Pairs with a degree-0 factor are skipped:
/// products with constants are scalar multiples, trivial for same-kind
/// closure, and in the mixed Bott-Chern/Aeppli case they would conflate the
/// two harmonicity notions instead of testing the module action.
inline ClosureResult products_harmonic(const HodgeContext& ctx, const std::vector<HarmonicBasis>& left,
                                       const std::vector<HarmonicBasis>& right, Laplacian target_kind) {
    for (const auto& lb : left) {
        if (lb.grading.degree == 0) continue;
        for (const auto& rb : right) {
            if (rb.grading.degree == 0) continue;
            for (const Form& a : lb.basis)
                for (const Form& b : rb.basis) {
                    Form prod = wedge(a, b);
                    if (prod.is_zero()) continue;
                    if (!is_harmonic(ctx, target_kind, prod)) return {false, Witness{a, b, prod}};
                }
        }
    }
    return {true, std::nullopt};
}

}  // namespace detail

/// Wedge-closure of one harmonic space: geometric formality in the sense of
/// Kotschick (de Rham), Dolbeault or Bott-Chern depending on the kind.
inline ClosureResult check_closure(const HodgeContext& ctx, Laplacian kind) {
    auto spaces = detail::all_harmonic(ctx, kind);
    return detail::products_harmonic(ctx, spaces, spaces, kind);
}

/// Aeppli-harmonic forms closed under wedge.
inline ClosureResult check_aeppli_algebra(const HodgeContext& ctx) { return check_closure(ctx, Laplacian::Aeppli); }

/// Aeppli-harmonic forms closed under wedge by Bott-Chern-harmonic forms.
inline ClosureResult check_aeppli_module(const HodgeContext& ctx) {
    auto bc = detail::all_harmonic(ctx, Laplacian::BottChern);
    auto ae = detail::all_harmonic(ctx, Laplacian::Aeppli);
    return detail::products_harmonic(ctx, bc, ae, Laplacian::Aeppli);
}

struct FormalityVerdict {
    bool kotschick = false, dolbeault = false, bott_chern = false, aeppli_algebra = false, aeppli_bc_module = false;
    std::optional<Witness> kotschick_witness, dolbeault_witness, bott_chern_witness, aeppli_algebra_witness,
        aeppli_bc_module_witness;

    bool operator==(const FormalityVerdict& o) const {
        return kotschick == o.kotschick && dolbeault == o.dolbeault && bott_chern == o.bott_chern &&
               aeppli_algebra == o.aeppli_algebra && aeppli_bc_module == o.aeppli_bc_module;
    }
    std::string flags() const {
        auto c = [](bool b) { return b ? 'T' : 'F'; };
        return std::string("(") + c(kotschick) + "," + c(dolbeault) + "," + c(bott_chern) + "," + c(aeppli_algebra) +
               "," + c(aeppli_bc_module) + ")";
    }
};

inline FormalityVerdict formality_verdict(const HodgeContext& ctx) {
    FormalityVerdict v;
    std::tie(v.kotschick, v.kotschick_witness) = check_closure(ctx, Laplacian::DeRham);
    std::tie(v.dolbeault, v.dolbeault_witness) = check_closure(ctx, Laplacian::Dolbeault);
    std::tie(v.bott_chern, v.bott_chern_witness) = check_closure(ctx, Laplacian::BottChern);
    std::tie(v.aeppli_algebra, v.aeppli_algebra_witness) = check_aeppli_algebra(ctx);
    std::tie(v.aeppli_bc_module, v.aeppli_bc_module_witness) = check_aeppli_module(ctx);
    return v;
}

inline FormalityVerdict formality_verdict(const AlgebraSpec& spec, const Metric& m) {
    return formality_verdict(HodgeContext(spec, m));
}

/// Verdicts sampled along the flow trajectory; preservation holds when all
/// five components are constant across the list.
inline std::vector<std::pair<Rational, FormalityVerdict>> verdict_along_flow(const AlgebraSpec& spec,
                                                                             const Metric& m0,
                                                                             const std::vector<Rational>& times) {
    FlowSolution sol = solve_flow(spec, m0);
    std::vector<std::pair<Rational, FormalityVerdict>> out;
    for (const Rational& t : times) out.emplace_back(t, formality_verdict(spec, metric_at(sol, t)));
    return out;
}

inline bool verdicts_constant(const std::vector<std::pair<Rational, FormalityVerdict>>& vs) {
    for (size_t i = 1; i < vs.size(); ++i)
        if (!(vs[i].second == vs[0].second)) return false;
    return true;
}

enum class MetricChoice { Diagonal, Generic };

/// One row of the verdict matrix.
struct TableRow {
    std::string surface;
    bool computed = true;     // false for the static class-VII b2>0 row
    FormalityVerdict verdict;  // meaningful when computed
    std::string note;
};

/// The 5-surfaces x 5-properties verdict matrix at a fixed metric choice
/// (diagonal: u = 0; generic: u = 1/2), with canonical parameters
/// alpha = 1, beta = 0 for inoue_sm and q = 0 for inoue_spm. A static,
/// clearly-labelled row records the class-VII b2 > 0 obstruction, which is
/// topological and not computed here.
inline std::vector<TableRow> table1(MetricChoice choice) {
    Scalar u = choice == MetricChoice::Generic ? Scalar(Rational(1, 2)) : Scalar(0);
    Metric m(Rational(1), Rational(1), u);
    std::vector<TableRow> rows;
    rows.push_back({"class_vii_b2_pos", false, {}, "never (topological obstruction; not computed)"});
    for (const std::string& name : catalog_names()) {
        std::map<std::string, Rational> params;
        if (name == "inoue_sm") params = {{"alpha", Rational(1)}, {"beta", Rational(0)}};
        if (name == "inoue_spm") params = {{"q", Rational(0)}};
        AlgebraSpec spec = load_surface(name, params);
        rows.push_back({name, true, formality_verdict(spec, m), ""});
    }
    return rows;
}

}  // namespace liesurf
