// Command-line frontend: catalog browsing, spec ingestion, harmonic /
// curvature / flow / formality reports with exact rational output.
//
// Exit codes: 0 success, 1 parse/usage error, 2 invalid mathematical input,
// 3 time outside the flow existence interval.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <liesurf/liesurf.hpp>
#include <liesurf/specfile.hpp>

using namespace liesurf;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string surface;
    std::string spec_file;
    std::vector<std::string> params;
    std::string metric_text = "1,1,0";
    std::string format;
    std::string times_text;
    bool along_flow = false;
    bool table1_flag = false;
    int sweep = 0;
    uint64_t seed = 1;

    std::string resolved_format(const std::string& fallback) const {
        if (!format.empty()) return format;
        if (const char* env = std::getenv("LIESURF_FORMAT")) return env;
        return fallback;
    }
};

AlgebraSpec resolve_spec(const RunConfig& cfg) {
    if (!cfg.spec_file.empty() && !cfg.surface.empty())
        throw ParseError("give exactly one of --surface and --spec-file");
    if (!cfg.spec_file.empty()) return ingest_spec_file(cfg.spec_file);
    if (cfg.surface.empty()) throw ParseError("one of --surface or --spec-file is required");
    std::map<std::string, Rational> params;
    for (const std::string& kv : cfg.params) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("--param expects name=value, got \"" + kv + "\"");
        params[kv.substr(0, eq)] = Rational::from_string(kv.substr(eq + 1));
    }
    return load_surface(cfg.surface, params);
}

std::vector<Rational> parse_times(const std::string& text) {
    std::vector<Rational> times;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!piece.empty()) times.push_back(Rational::from_string(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (times.empty()) throw ParseError("--times expects a comma-separated list of rationals");
    return times;
}

Metric sweep_metric(std::mt19937_64& eng) {
    auto pick = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    };
    for (;;) {
        Rational r2(pick(1, 6), pick(1, 3)), s2(pick(1, 6), pick(1, 3));
        Scalar u(Rational(pick(-2, 2), pick(1, 3)), Rational(pick(-2, 2), pick(1, 3)));
        if (r2 * s2 - u.norm_sq_r() > Rational(0)) return Metric(r2, s2, u);
    }
}

// ---- harmonics -------------------------------------------------------

json harmonics_json(const HodgeContext& ctx) {
    json out;
    out["surface"] = ctx.spec().name;
    out["metric"] = metric_to_json(ctx.metric());
    json kinds;
    json de_rham;
    for (int k = 0; k <= 4; ++k) {
        json basis = json::array();
        for (const Form& f : harmonic_basis(ctx, Laplacian::DeRham, Grading::total(k)).basis)
            basis.push_back(form_to_json(f));
        de_rham[std::to_string(k)] = basis;
    }
    kinds["deRham"] = de_rham;
    for (Laplacian kind : {Laplacian::Dolbeault, Laplacian::BottChern, Laplacian::Aeppli}) {
        json table;
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                auto hb = harmonic_basis(ctx, kind, Grading::bidegree(p, q));
                json basis = json::array();
                for (const Form& f : hb.basis) basis.push_back(form_to_json(f));
                table[std::to_string(p) + "," + std::to_string(q)] = basis;
            }
        kinds[laplacian_name(kind)] = table;
    }
    out["harmonic"] = kinds;
    return out;
}

void harmonics_table(std::ostream& os, const HodgeContext& ctx) {
    os << "surface: " << ctx.spec().name << "\nmetric (r2,s2,u): " << ctx.metric().to_string() << "\n";
    os << "\nde Rham harmonic forms\n";
    for (int k = 0; k <= 4; ++k) {
        auto hb = harmonic_basis(ctx, Laplacian::DeRham, Grading::total(k));
        os << "  degree " << k << " (dim " << hb.dim() << ")\n";
        for (const Form& f : hb.basis) os << "    " << f.to_string() << "\n";
    }
    for (Laplacian kind : {Laplacian::Dolbeault, Laplacian::BottChern, Laplacian::Aeppli}) {
        os << "\n" << laplacian_name(kind) << " harmonic forms\n";
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                auto hb = harmonic_basis(ctx, kind, Grading::bidegree(p, q));
                if (hb.dim() == 0) continue;
                os << "  (" << p << "," << q << ") (dim " << hb.dim() << ")\n";
                for (const Form& f : hb.basis) os << "    " << f.to_string() << "\n";
            }
    }
}

int cmd_harmonics(const RunConfig& cfg) {
    AlgebraSpec spec = resolve_spec(cfg);
    HodgeContext ctx(spec, Metric::from_string(cfg.metric_text));
    std::string fmt = cfg.resolved_format("table");
    if (fmt == "json")
        std::cout << harmonics_json(ctx).dump(2) << "\n";
    else
        harmonics_table(std::cout, ctx);
    return 0;
}

// ---- flow ------------------------------------------------------------

int cmd_flow(const RunConfig& cfg) {
    AlgebraSpec spec = resolve_spec(cfg);
    Metric m0 = Metric::from_string(cfg.metric_text);
    FlowSolution sol = solve_flow(spec, m0);
    std::vector<Rational> times =
        cfg.times_text.empty() ? std::vector<Rational>{Rational(0)} : parse_times(cfg.times_text);
    std::string fmt = cfg.resolved_format("table");
    std::string tmax = sol.t_max ? sol.t_max->to_string() : "inf";
    if (fmt == "csv") {
        std::cout << trajectory_csv(sol, times);
        return 0;
    }
    if (fmt == "json") {
        json out;
        out["surface"] = spec.name;
        out["initial"] = metric_to_json(m0);
        out["rho"] = {{"rho_r", sol.rho.rho_r.to_string()},
                      {"rho_s", sol.rho.rho_s.to_string()},
                      {"rho_u", sol.rho.rho_u.to_string()}};
        out["t_max"] = tmax;
        json samples = json::array();
        for (const Rational& t : times) {
            Metric m = metric_at(sol, t);
            json row = metric_to_json(m);
            row["t"] = t.to_string();
            row["V"] = m.V().to_string();
            samples.push_back(row);
        }
        out["samples"] = samples;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "surface: " << spec.name << "\n"
              << "2 Ric = i(" << sol.rho.rho_r.to_string() << ") phi^11b + i(" << sol.rho.rho_s.to_string()
              << ") phi^22b + (" << sol.rho.rho_u.to_string() << ") phi^12b - conj phi^21b\n"
              << "t_max = " << tmax << "\n";
    std::cout << trajectory_csv(sol, times);
    return 0;
}

// ---- report ----------------------------------------------------------

void print_verdict(std::ostream& os, const FormalityVerdict& v) {
    auto line = [&os](const char* name, bool ok, const std::optional<Witness>& w) {
        os << "  " << name << ": " << (ok ? "yes" : "no") << "\n";
        if (!ok && w) os << "      witness: " << w->describe() << "\n";
    };
    line("kotschick geometric formality", v.kotschick, v.kotschick_witness);
    line("dolbeault geometric formality", v.dolbeault, v.dolbeault_witness);
    line("bott-chern geometric formality", v.bott_chern, v.bott_chern_witness);
    line("aeppli harmonic forms form an algebra", v.aeppli_algebra, v.aeppli_algebra_witness);
    line("aeppli harmonic forms are a bott-chern module", v.aeppli_bc_module, v.aeppli_bc_module_witness);
}

int cmd_report_table1(const std::string& fmt) {
    auto diagonal = table1(MetricChoice::Diagonal);
    auto generic = table1(MetricChoice::Generic);
    auto summarize = [](const TableRow& d, const TableRow& g) {
        auto cell = [](bool diag, bool gen) {
            if (diag && gen) return "always";
            if (diag && !gen) return "diagonal";
            if (!diag && !gen) return "never";
            return "generic-only";
        };
        return std::array<std::string, 5>{
            cell(d.verdict.kotschick, g.verdict.kotschick),
            cell(d.verdict.dolbeault, g.verdict.dolbeault),
            cell(d.verdict.bott_chern, g.verdict.bott_chern),
            cell(d.verdict.aeppli_algebra, g.verdict.aeppli_algebra),
            cell(d.verdict.aeppli_bc_module, g.verdict.aeppli_bc_module)};
    };
    if (fmt == "json") {
        json out;
        for (auto [choice, rows] : {std::pair{"diagonal", &diagonal}, std::pair{"generic", &generic}}) {
            json jrows = json::array();
            for (const TableRow& r : *rows) {
                json row;
                row["surface"] = r.surface;
                row["computed"] = r.computed;
                if (r.computed)
                    row["verdict"] = verdict_to_json(r.verdict);
                else
                    row["note"] = r.note;
                jrows.push_back(row);
            }
            out[choice] = jrows;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "verdict matrix (computed at u = 0 and u = 1/2; columns: kotschick,\n"
                 "dolbeault, bott-chern, aeppli-algebra, aeppli-bc-module)\n\n";
    for (size_t i = 0; i < diagonal.size(); ++i) {
        const TableRow& d = diagonal[i];
        std::cout << "  " << d.surface << ": ";
        if (!d.computed) {
            std::cout << d.note << "\n";
            continue;
        }
        auto cells = summarize(d, generic[i]);
        for (size_t c = 0; c < cells.size(); ++c) std::cout << (c ? ", " : "") << cells[c];
        std::cout << "   [diagonal " << d.verdict.flags() << ", generic " << generic[i].verdict.flags() << "]\n";
    }
    return 0;
}

int cmd_report(const RunConfig& cfg) {
    std::string fmt = cfg.resolved_format("table");
    if (cfg.table1_flag) return cmd_report_table1(fmt);

    AlgebraSpec spec = resolve_spec(cfg);
    Metric m = Metric::from_string(cfg.metric_text);

    if (cfg.sweep > 0) {
        std::mt19937_64 eng(cfg.seed);
        std::cout << "sweep over " << cfg.sweep << " random metrics, seed " << cfg.seed << "\n";
        FormalityVerdict first;
        bool constant = true;
        for (int i = 0; i < cfg.sweep; ++i) {
            Metric mm = sweep_metric(eng);
            FormalityVerdict v = formality_verdict(spec, mm);
            if (i == 0)
                first = v;
            else if (!(v == first))
                constant = false;
            std::cout << "  metric " << mm.to_string() << " -> " << v.flags() << "\n";
        }
        std::cout << "verdicts constant across sweep: " << (constant ? "yes" : "no") << "\n";
        return 0;
    }

    if (cfg.along_flow) {
        std::vector<Rational> times =
            cfg.times_text.empty() ? std::vector<Rational>{Rational(0)} : parse_times(cfg.times_text);
        auto verdicts = verdict_along_flow(spec, m, times);
        if (fmt == "json") {
            json out;
            out["surface"] = spec.name;
            out["initial"] = metric_to_json(m);
            json rows = json::array();
            for (const auto& [t, v] : verdicts) {
                json row = verdict_to_json(v);
                row["t"] = t.to_string();
                rows.push_back(row);
            }
            out["along_flow"] = rows;
            out["constant"] = verdicts_constant(verdicts);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << "surface: " << spec.name << ", initial metric " << m.to_string() << "\n";
        for (const auto& [t, v] : verdicts) std::cout << "  t = " << t.to_string() << ": " << v.flags() << "\n";
        std::cout << "verdicts constant along flow: " << (verdicts_constant(verdicts) ? "yes" : "no") << "\n";
        return 0;
    }

    FormalityVerdict v = formality_verdict(spec, m);
    if (fmt == "json") {
        json out;
        out["surface"] = spec.name;
        out["metric"] = metric_to_json(m);
        out["verdict"] = verdict_to_json(v);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "surface: " << spec.name << ", metric " << m.to_string() << "\n";
    print_verdict(std::cout, v);
    return 0;
}

// ---- catalog / validate ------------------------------------------------

int cmd_catalog() {
    for (const std::string& name : catalog_names()) {
        std::map<std::string, Rational> params;
        if (name == "inoue_sm") params = {{"alpha", Rational(1)}, {"beta", Rational(0)}};
        if (name == "inoue_spm") params = {{"q", Rational(0)}};
        AlgebraSpec spec = load_surface(name, params);
        std::cout << name;
        if (!params.empty()) {
            std::cout << "  (shown at";
            for (const auto& [k, v] : params) std::cout << " " << k << "=" << v.to_string();
            std::cout << ")";
        }
        std::cout << "\n" << structure_equations(spec) << "\n";
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    std::ifstream in(cfg.spec_file);
    if (!in) throw ParseError("spec file: cannot open " + cfg.spec_file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("spec file: " + std::string(e.what()));
    }
    AlgebraSpec spec = spec_from_json(j);
    ValidationReport rep = validate(spec);
    std::cout << rep.summary();
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant-form geometry on complex surface models"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--surface", cfg.surface, "catalog surface name");
        sub->add_option("--spec-file", cfg.spec_file, "path to a structure-constant spec file");
        sub->add_option("--param", cfg.params, "surface parameter name=value (repeatable)");
        sub->add_option("--metric", cfg.metric_text, "metric triple r2,s2,u (exact rationals)");
        sub->add_option("--format", cfg.format, "output format: table, json, csv");
    };

    CLI::App* harmonics = app.add_subcommand("harmonics", "harmonic bases for all four cohomologies");
    add_common(harmonics);
    CLI::App* flow = app.add_subcommand("flow", "closed-form Chern-Ricci flow trajectory");
    add_common(flow);
    flow->add_option("--times", cfg.times_text, "comma-separated sample times (exact rationals)");
    CLI::App* report = app.add_subcommand("report", "formality verdicts; --table1 for the full matrix");
    add_common(report);
    report->add_option("--times", cfg.times_text, "sample times for --along-flow");
    report->add_flag("--along-flow", cfg.along_flow, "evaluate verdicts along the flow");
    report->add_flag("--table1", cfg.table1_flag, "verdict matrix over the whole catalog");
    report->add_option("--sweep", cfg.sweep, "number of random metrics to sweep");
    report->add_option("--seed", cfg.seed, "seed for the metric sweep");
    CLI::App* catalog = app.add_subcommand("catalog", "list built-in surfaces and structure equations");
    CLI::App* validate_cmd = app.add_subcommand("validate", "validate a spec file and print the report");
    validate_cmd->add_option("--spec-file", cfg.spec_file, "path to the spec file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (harmonics->parsed()) return cmd_harmonics(cfg);
        if (flow->parsed()) return cmd_flow(cfg);
        if (report->parsed()) return cmd_report(cfg);
        if (catalog->parsed()) return cmd_catalog();
        if (validate_cmd->parsed()) return cmd_validate(cfg);
    } catch (const OutOfInterval& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
