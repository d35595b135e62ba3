#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesurf/curvature.hpp"

namespace liesurf {

/// Closed-form Chern-Ricci flow on invariant metrics. Since the Ricci form
/// is metric-independent, the trajectory is affine:
///   r^2(t) = r0^2 - t rho_r,  s^2(t) = s0^2 - t rho_s,  u(t) = u0 - t rho_u.
struct FlowSolution {
    AlgebraSpec spec;
    Metric initial;
    RicciForm rho;
    std::optional<Rational> t_max;  // empty = +infinity; exact supremum otherwise

    Rational r2_at(const Rational& t) const { return initial.r2() - t * rho.rho_r; }
    Rational s2_at(const Rational& t) const { return initial.s2() - t * rho.rho_s; }
    Scalar u_at(const Rational& t) const { return initial.u() - Scalar(t) * rho.rho_u; }
    Rational v_at(const Rational& t) const { return r2_at(t) * s2_at(t) - u_at(t).norm_sq_r(); }
};

namespace detail {

/// Least positive root of a linear polynomial c0 + c1 t (none when absent).
inline std::optional<Rational> first_positive_linear_root(const Rational& c0, const Rational& c1) {
    if (c1.is_zero()) return std::nullopt;
    Rational root = -c0 / c1;
    if (root.sign() > 0) return root;
    return std::nullopt;
}

/// Least positive root of c0 + c1 t + c2 t^2 with c0 > 0. Exact: rational
/// when the discriminant is a perfect square; throws otherwise (cannot be
/// represented in the rational existence-interval contract).
inline std::optional<Rational> first_positive_quadratic_root(const Rational& c0, const Rational& c1,
                                                             const Rational& c2) {
    if (c2.is_zero()) return first_positive_linear_root(c0, c1);
    Rational disc = c1 * c1 - Rational(4) * c2 * c0;
    if (disc.sign() < 0) return std::nullopt;
    Rational sq;
    if (!disc.sqrt_exact(sq)) {
        // Roots exist but are irrational. Decide first whether any lies in t > 0;
        // only then is the rational contract actually violated.
        // With c0 > 0: positive roots exist iff the vertex -c1/(2 c2) is positive
        // (c2 > 0 case) or c2 < 0 (one sign change).
        Rational vertex = -c1 / (Rational(2) * c2);
        bool has_positive = c2.sign() < 0 || vertex.sign() > 0;
        if (!has_positive) return std::nullopt;
        throw DomainError("flow: existence bound is an irrational quadratic root; not representable exactly");
    }
    Rational two_a = Rational(2) * c2;
    Rational roots[2] = {(-c1 - sq) / two_a, (-c1 + sq) / two_a};
    std::optional<Rational> best;
    for (const Rational& r : roots) {
        if (r.sign() > 0 && (!best || r < *best)) best = r;
    }
    return best;
}

}  // namespace detail

/// Solves the flow from the engine's own computed Ricci form.
inline FlowSolution solve_flow(const AlgebraSpec& spec, const Metric& m0) {
    FlowSolution sol{spec, m0, chern_ricci_form(spec, m0), std::nullopt};
    const RicciForm& rho = sol.rho;
    // positivity breakers: r^2(t), s^2(t) linear; V(t) quadratic
    std::optional<Rational> best = detail::first_positive_linear_root(m0.r2(), -rho.rho_r);
    auto keep_min = [&best](const std::optional<Rational>& cand) {
        if (cand && (!best || *cand < *best)) best = cand;
    };
    keep_min(detail::first_positive_linear_root(m0.s2(), -rho.rho_s));
    // V(t) = (r0^2 - t rho_r)(s0^2 - t rho_s) - |u0 - t rho_u|^2
    Rational c0 = m0.V();
    Rational c1 = -(m0.r2() * rho.rho_s + m0.s2() * rho.rho_r) +
                  Rational(2) * (m0.u().conj() * rho.rho_u).re();
    Rational c2 = rho.rho_r * rho.rho_s - rho.rho_u.norm_sq_r();
    keep_min(detail::first_positive_quadratic_root(c0, c1, c2));
    sol.t_max = best;
    return sol;
}

inline Metric metric_at(const FlowSolution& sol, const Rational& t) {
    if (t.sign() < 0) throw OutOfInterval("time " + t.to_string() + " < 0");
    if (sol.t_max && t >= *sol.t_max)
        throw OutOfInterval("time " + t.to_string() + " >= t_max = " + sol.t_max->to_string());
    return Metric(sol.r2_at(t), sol.s2_at(t), sol.u_at(t));
}

inline std::vector<Metric> sample_trajectory(const FlowSolution& sol, const std::vector<Rational>& times) {
    std::vector<Metric> out;
    out.reserve(times.size());
    for (const Rational& t : times) out.push_back(metric_at(sol, t));
    return out;
}

/// CSV emission: exact rational text, one row per sample time.
inline std::string trajectory_csv(const FlowSolution& sol, const std::vector<Rational>& times) {
    std::string csv = "t,r2,s2,re_u,im_u,V\n";
    for (const Rational& t : times) {
        Metric m = metric_at(sol, t);
        csv += t.to_string() + "," + m.r2().to_string() + "," + m.s2().to_string() + "," + m.u().re().to_string() +
               "," + m.u().im().to_string() + "," + m.V().to_string() + "\n";
    }
    return csv;
}

}  // namespace liesurf
