#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liesurf/form.hpp"
#include "liesurf/rational.hpp"

namespace liesurf {

/// A 4-dimensional Lie algebra with complex structure, given by structure
/// constants c_{IH}^K over the alphabet (1, 2, 1b, 2b):
///   [phi_I, phi_H] = c_{IH}^K phi_K,   d phi^I = -c_{HK}^I phi^H wedge phi^K.
struct AlgebraSpec {
    std::string name;
    std::map<std::string, Rational> params;
    Scalar c[kAlphabet][kAlphabet][kAlphabet];

    const Scalar& cc(int i, int h, int k) const { return c[i][h][k]; }

    /// d phi^i as a 2-form (sum over increasing index pairs).
    Form d_generator(int gen) const {
        Form f;
        for (int h = 0; h < kAlphabet; ++h) {
            for (int k = h + 1; k < kAlphabet; ++k) {
                if (!c[h][k][gen].is_zero()) f[(1 << h) | (1 << k)] += -c[h][k][gen];
            }
        }
        return f;
    }
};

struct CheckResult {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

struct ValidationReport {
    CheckResult antisymmetry, reality, jacobi, integrability;
    bool ok() const { return antisymmetry.ok && reality.ok && jacobi.ok && integrability.ok; }
    std::string summary() const {
        auto line = [](const char* what, const CheckResult& c) {
            return std::string(what) + ": " + (c.ok ? "pass" : "FAIL (" + c.detail + ")") + "\n";
        };
        return line("antisymmetry", antisymmetry) + line("reality", reality) + line("jacobi", jacobi) +
               line("integrability", integrability);
    }
};

inline ValidationReport validate(const AlgebraSpec& spec) {
    ValidationReport rep;
    for (int i = 0; i < kAlphabet && rep.antisymmetry.ok; ++i)
        for (int h = 0; h < kAlphabet && rep.antisymmetry.ok; ++h)
            for (int k = 0; k < kAlphabet; ++k) {
                if (spec.c[i][h][k] != -spec.c[h][i][k]) {
                    rep.antisymmetry = {false, "c(" + index_name(i) + "," + index_name(h) + ")^" + index_name(k)};
                    break;
                }
            }
    for (int i = 0; i < kAlphabet && rep.reality.ok; ++i)
        for (int h = 0; h < kAlphabet && rep.reality.ok; ++h)
            for (int k = 0; k < kAlphabet; ++k) {
                if (spec.c[bar(i)][bar(h)][bar(k)] != spec.c[i][h][k].conj()) {
                    rep.reality = {false, "c(" + index_name(i) + "," + index_name(h) + ")^" + index_name(k)};
                    break;
                }
            }
    // Jacobi: [[I,H],K] + [[H,K],I] + [[K,I],H] = 0, exact loop over all triples
    for (int i = 0; i < kAlphabet && rep.jacobi.ok; ++i)
        for (int h = 0; h < kAlphabet && rep.jacobi.ok; ++h)
            for (int k = 0; k < kAlphabet && rep.jacobi.ok; ++k)
                for (int l = 0; l < kAlphabet; ++l) {
                    Scalar sum;
                    for (int m = 0; m < kAlphabet; ++m) {
                        sum += spec.c[i][h][m] * spec.c[m][k][l];
                        sum += spec.c[h][k][m] * spec.c[m][i][l];
                        sum += spec.c[k][i][m] * spec.c[m][h][l];
                    }
                    if (!sum.is_zero()) {
                        rep.jacobi = {false, "triple (" + index_name(i) + "," + index_name(h) + "," + index_name(k) +
                                                 ") on " + index_name(l)};
                        break;
                    }
                }
    // integrability: d phi^i has no (0,2)-component for i in {1,2}
    for (int gen = 0; gen < 2 && rep.integrability.ok; ++gen) {
        Form d = spec.d_generator(gen);
        for (int m = 0; m < kMonomials; ++m) {
            if (!d[m].is_zero() && mono_p(m) == 0 && mono_q(m) == 2) {
                rep.integrability = {false, "d phi^" + index_name(gen) + " has a (0,2) term"};
                break;
            }
        }
    }
    return rep;
}

namespace detail {

/// Writes one structure constant together with its antisymmetric and
/// conjugate partners; complains when an earlier assignment disagrees.
class ConstantTable {
public:
    void set(int i, int h, int k, const Scalar& v) {
        if (i == h && !v.is_zero()) throw ValidationError("structure constant c(I,I)^K must vanish");
        put(i, h, k, v);
        put(h, i, k, -v);
        put(bar(i), bar(h), bar(k), v.conj());
        put(bar(h), bar(i), bar(k), -v.conj());
    }
    void write_into(AlgebraSpec& spec) const {
        for (const auto& [key, val] : values_) spec.c[key[0]][key[1]][key[2]] = val;
    }

private:
    std::map<std::array<int, 3>, Scalar> values_;
    void put(int i, int h, int k, const Scalar& v) {
        std::array<int, 3> key{i, h, k};
        auto it = values_.find(key);
        if (it != values_.end()) {
            if (it->second != v)
                throw ValidationError("conflicting values for c(" + index_name(i) + "," + index_name(h) + ")^" +
                                      index_name(k));
            return;
        }
        values_.emplace(key, v);
    }
};

}  // namespace detail

/// Builds a spec from one representative per antisymmetric/conjugate orbit.
inline AlgebraSpec make_spec(std::string name, std::map<std::string, Rational> params,
                             const std::vector<std::tuple<int, int, int, Scalar>>& constants) {
    AlgebraSpec spec;
    spec.name = std::move(name);
    spec.params = std::move(params);
    detail::ConstantTable table;
    for (const auto& [i, h, k, v] : constants) table.set(i, h, k, v);
    table.write_into(spec);
    return spec;
}

inline Rational require_param(const std::map<std::string, Rational>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw MissingParam(key);
    return it->second;
}

/// The five built-in surface families. Parameters: inoue_sm takes alpha
/// (nonzero) and beta; inoue_spm takes q; the rest take none.
inline AlgebraSpec load_surface(const std::string& name, const std::map<std::string, Rational>& params = {}) {
    const Scalar I = Scalar::i();
    const Rational half(1, 2);
    if (name == "hopf") {
        return make_spec("hopf", {},
                         {
                             {0, 1, 0, -I},  // c_12^1
                             {0, 3, 0, -I},  // c_{1 2b}^1
                             {0, 2, 1, I},   // c_{1 1b}^2
                         });
    }
    if (name == "inoue_sm") {
        Rational alpha = require_param(params, "alpha");
        Rational beta = require_param(params, "beta");
        if (alpha.is_zero()) throw InvalidParam("inoue_sm requires alpha != 0");
        // w is the phi^12 coefficient of d phi^1: (alpha - i beta) / (2i)
        Scalar w = Scalar(alpha, -beta) / (Scalar(2) * I);
        return make_spec("inoue_sm", {{"alpha", alpha}, {"beta", beta}},
                         {
                             {0, 1, 0, -w},                      // c_12^1
                             {0, 3, 0, w},                       // c_{1 2b}^1
                             {1, 3, 1, Scalar(Rational(0), alpha)},  // c_{2 2b}^2 = i alpha
                         });
    }
    if (name == "inoue_spm") {
        Rational q = require_param(params, "q");
        Scalar ih = Scalar(Rational(0), half);  // i/2
        return make_spec("inoue_spm", {{"q", q}},
                         {
                             {0, 1, 0, ih},                          // c_12^1
                             {1, 2, 0, ih},                          // c_{2 1b}^1
                             {1, 3, 0, Scalar(Rational(0), -q * half)},  // c_{2 2b}^1 = -qi/2
                             {1, 3, 1, ih},                          // c_{2 2b}^2
                         });
    }
    if (name == "kodaira_primary") {
        return make_spec("kodaira_primary", {},
                         {
                             {0, 2, 1, Scalar(Rational(0), -half)},  // c_{1 1b}^2 = -i/2
                         });
    }
    if (name == "kodaira_secondary") {
        return make_spec("kodaira_secondary", {},
                         {
                             {0, 1, 0, Scalar(half)},                // c_12^1
                             {0, 3, 0, Scalar(-half)},               // c_{1 2b}^1
                             {0, 2, 1, Scalar(Rational(0), -half)},  // c_{1 1b}^2
                         });
    }
    throw UnknownSurface(name);
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"hopf", "inoue_sm", "inoue_spm", "kodaira_primary",
                                                "kodaira_secondary"};
    return names;
}

/// Structure equations of a spec, printable: one line per generator.
inline std::string structure_equations(const AlgebraSpec& spec) {
    std::string s;
    for (int gen = 0; gen < 2; ++gen) {
        s += "d phi^" + index_name(gen) + " = " + spec.d_generator(gen).to_string() + "\n";
    }
    return s;
}

}  // namespace liesurf
