// spectral-lab: exact eigenvalue counting for tensor-product model operators,
// spectral zeta continuation with Laurent data at the first pole, the
// Tauberian map to counting asymptotics, and the shifted divisor-count
// experiments (tables, remainder series, growth-exponent fits).
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "speclab/analysis.hpp"
#include "speclab/constants.hpp"
#include "speclab/counting.hpp"
#include "speclab/descriptor.hpp"
#include "speclab/laurent.hpp"
#include "speclab/parallel.hpp"
#include "speclab/weyl.hpp"
#include "speclab/zeta.hpp"

using json = nlohmann::json;
using namespace speclab;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Output {
    std::ostream* os = &std::cout;
    std::ofstream file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw usage_error("cannot open output file " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

// zeta evaluator for an operator or factor descriptor string
ZetaEvaluator evaluator_for(const std::string& desc) {
    if (desc == "riemann") return ZetaEvaluator::riemann();
    if (looks_like_product(desc))
        return ZetaEvaluator::for_operator(parse_product_descriptor(desc));
    return ZetaEvaluator::factor(parse_factor_descriptor(desc));
}

struct TableRow {
    int c;
    double estimate;
    double closed_form;
    double estimate_alt;  // from_one convention, only with --both
};

int run_table(int which, double lambda, int cmin, int cmax, bool both, unsigned threads,
              Output& out) {
    if (cmin < 1 || cmax < cmin) throw usage_error("need 1 <= cmin <= cmax");
    const std::size_t n = static_cast<std::size_t>(cmax - cmin + 1);
    auto rows = parallel_map<TableRow>(n, threads, [&](std::size_t i) {
        const int c = cmin + static_cast<int>(i);
        const auto [fe, se] = estimate_coefficients(c, lambda, IndexBase::from_zero);
        TableRow row{c, which == 1 ? fe : se, 0.0, 0.0};
        row.closed_form = (which == 1) ? 1.0 : second_divisor_coefficient(c, 1e-12);
        if (both) {
            const auto [fe1, se1] = estimate_coefficients(c, lambda, IndexBase::from_one);
            row.estimate_alt = (which == 1) ? fe1 : se1;
        }
        return row;
    });
    auto& os = out.stream();
    os << (both ? "c,estimate,closed_form,error,estimate_from_one\n"
                : "c,estimate,closed_form,error\n");
    for (const auto& r : rows) {
        os << r.c << ',' << fmt17(r.estimate) << ',' << fmt17(r.closed_form) << ','
           << fmt17(std::fabs(r.estimate - r.closed_form));
        if (both) os << ',' << fmt17(r.estimate_alt);
        os << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spectral-lab: spectral zeta functions, Tauberian asymptotics, and exact "
        "lattice counts for tensor-product model operators"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    unsigned threads = 0;  // 0 = auto; SPECTRAL_LAB_THREADS overrides either way
    app.add_option("--out", out_path, "write the artifact to a file instead of stdout");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads for grid sweeps");

    // ---- sieve ----
    auto* sieve_cmd = app.add_subcommand("sieve", "divisor counts d(1..n)");
    std::uint64_t sieve_n = 0;
    sieve_cmd->add_option("--n", sieve_n, "upper bound")->required();

    // ---- divisor-sum ----
    auto* dsum_cmd = app.add_subcommand("divisor-sum", "D(lambda) by the hyperbola method");
    double dsum_lambda = 0;
    dsum_cmd->add_option("--lambda", dsum_lambda)->required();

    // ---- dc ----
    auto* dc_cmd = app.add_subcommand("dc", "shifted pair count D_c(lambda)");
    double dc_c = 0, dc_lambda = 0;
    std::string dc_base = "from_zero";
    bool dc_both = false;
    dc_cmd->add_option("--c", dc_c)->required();
    dc_cmd->add_option("--lambda", dc_lambda)->required();
    dc_cmd->add_option("--base", dc_base)->check(CLI::IsMember({"from_zero", "from_one"}));
    dc_cmd->add_flag("--both", dc_both, "emit both index conventions");

    // ---- count ----
    auto* count_cmd = app.add_subcommand(
        "count", "N(lambda) for a product operator; a grid adds Weyl predictions");
    std::string count_op;
    double count_lambda = 0, count_max = 0;
    int count_points = 0;
    count_cmd->add_option("--op", count_op, "e.g. \"circle(c=2)⊗circle(c=2)\"")->required();
    count_cmd->add_option("--lambda", count_lambda)->required();
    count_cmd->add_option("--lambda-max", count_max, "sweep up to here (log-uniform grid)");
    count_cmd->add_option("--points", count_points, "grid size for the sweep");

    // ---- gamma-c ----
    auto* gc_cmd = app.add_subcommand("gamma-c", "generalized Euler-Mascheroni constant");
    double gc_c = 0, gc_tol = 1e-10;
    gc_cmd->add_option("--c", gc_c)->required();
    gc_cmd->add_option("--tol", gc_tol);

    // ---- zeta ----
    auto* zeta_cmd = app.add_subcommand("zeta", "evaluate a spectral zeta function");
    std::string zeta_op;
    double zeta_s = 0, zeta_tol = 1e-12;
    zeta_cmd->add_option("--op", zeta_op, "riemann | factor | product descriptor")->required();
    zeta_cmd->add_option("--s", zeta_s)->required();
    zeta_cmd->add_option("--tol", zeta_tol);

    // ---- laurent ----
    auto* laurent_cmd = app.add_subcommand("laurent", "Laurent data at the first pole");
    std::string laurent_op;
    double laurent_z0 = 0.5;
    int laurent_order = 2;
    laurent_cmd->add_option("--op", laurent_op)->required();
    laurent_cmd->add_option("--z0", laurent_z0)->required();
    laurent_cmd->add_option("--order", laurent_order)->check(CLI::IsMember({1, 2}));

    // ---- weyl-coeffs ----
    auto* weyl_cmd = app.add_subcommand("weyl-coeffs", "counting-function coefficients");
    std::string weyl_op;
    weyl_cmd->add_option("--op", weyl_op)->required();

    // ---- aramaki ----
    auto* aram_cmd = app.add_subcommand("aramaki", "Tauberian map from explicit Laurent data");
    double ar_z0 = 0.5, ar_a2 = 0.0, ar_a1 = 0.0;
    int ar_order = 2;
    aram_cmd->add_option("--z0", ar_z0)->required();
    aram_cmd->add_option("--order", ar_order)->check(CLI::IsMember({1, 2}));
    aram_cmd->add_option("--a2", ar_a2);
    aram_cmd->add_option("--a1", ar_a1)->required();

    // ---- tables ----
    auto* t1_cmd = app.add_subcommand("table1", "first-coefficient estimates, c sweep");
    auto* t2_cmd = app.add_subcommand("table2", "second-coefficient estimates, c sweep");
    double t1_lambda = 1e7, t2_lambda = 1e7;
    int t1_cmin = 2, t1_cmax = 20, t2_cmin = 2, t2_cmax = 20;
    bool t1_both = false, t2_both = false;
    t1_cmd->add_option("--lambda", t1_lambda);
    t1_cmd->add_option("--cmin", t1_cmin);
    t1_cmd->add_option("--cmax", t1_cmax);
    t1_cmd->add_flag("--both", t1_both, "add the from_one convention column");
    t2_cmd->add_option("--lambda", t2_lambda);
    t2_cmd->add_option("--cmin", t2_cmin);
    t2_cmd->add_option("--cmax", t2_cmax);
    t2_cmd->add_flag("--both", t2_both, "add the from_one convention column");

    // ---- remainder ----
    auto* rem_cmd = app.add_subcommand("remainder", "divisor remainder series and exponent fit");
    double rem_min = 1e4, rem_max = 1e8, rem_c = 0.0;
    int rem_points = 50;
    rem_cmd->add_option("--min", rem_min);
    rem_cmd->add_option("--max", rem_max);
    rem_cmd->add_option("--points", rem_points);
    rem_cmd->add_option("--c", rem_c, "shifted variant (0 = classical divisor)");

    // ---- wres ----
    auto* wres_cmd = app.add_subcommand("wres", "bisingular Wodzicki residue of an operator");
    std::string wres_op;
    wres_cmd->add_option("--op", wres_op)->required();

    // global --out/--format/--threads may follow the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    try {
        out.open(out_path);
        auto& os = out.stream();

        if (*sieve_cmd) {
            auto d = divisor_sieve(sieve_n);
            if (format == "json") {
                json j{{"n", sieve_n}, {"d", std::vector<std::uint32_t>(d.begin() + 1, d.end())}};
                os << j.dump() << '\n';
            } else {
                os << "h,d\n";
                for (std::uint64_t h = 1; h <= sieve_n; ++h) os << h << ',' << d[h] << '\n';
            }
        } else if (*dsum_cmd) {
            const auto v = divisor_summatory(dsum_lambda);
            if (format == "json")
                os << json{{"lambda", dsum_lambda}, {"value", v}}.dump() << '\n';
            else
                os << fmt17(dsum_lambda) << ',' << v << '\n';
        } else if (*dc_cmd) {
            const auto z = shifted_pair_count(dc_c, dc_lambda, IndexBase::from_zero);
            const auto o = shifted_pair_count(dc_c, dc_lambda, IndexBase::from_one);
            const auto chosen = (dc_base == "from_zero") ? z : o;
            if (format == "json") {
                json j{{"c", dc_c}, {"lambda", dc_lambda}};
                if (dc_both) {
                    j["from_zero"] = z;
                    j["from_one"] = o;
                } else {
                    j["base"] = dc_base;
                    j["count"] = chosen;
                }
                os << j.dump() << '\n';
            } else if (dc_both) {
                os << fmt17(dc_c) << ',' << fmt17(dc_lambda) << ',' << z << ',' << o << '\n';
            } else {
                os << fmt17(dc_c) << ',' << fmt17(dc_lambda) << ',' << chosen << '\n';
            }
        } else if (*count_cmd) {
            const auto op = parse_product_descriptor(count_op);
            if (count_points > 0) {
                if (!(count_max > count_lambda))
                    throw usage_error("count sweep needs --lambda-max > --lambda");
                const auto table = counting_table(
                    op, log_uniform_grid(count_lambda, count_max, count_points));
                if (format == "json") {
                    json rows = json::array();
                    for (const auto& r : table.rows)
                        rows.push_back({{"lambda", r.lambda},
                                        {"exact", r.exact_count},
                                        {"predicted", r.predicted},
                                        {"residual", r.residual}});
                    os << json{{"op", table.operator_text}, {"rows", rows}}.dump() << '\n';
                } else {
                    os << "lambda,exact,predicted,residual\n";
                    for (const auto& r : table.rows)
                        os << fmt17(r.lambda) << ',' << r.exact_count << ','
                           << fmt17(r.predicted) << ',' << fmt17(r.residual) << '\n';
                }
            } else {
                const auto n = counting_function(op, count_lambda);
                if (format == "json")
                    os << json{{"op", op.text()}, {"lambda", count_lambda}, {"count", n}}.dump()
                       << '\n';
                else
                    os << fmt17(count_lambda) << ',' << n << '\n';
            }
        } else if (*gc_cmd) {
            const auto r = gamma_c(gc_c, gc_tol);
            if (format == "json")
                os << json{{"c", gc_c},
                           {"value", r.value},
                           {"error_bound", r.error_bound},
                           {"terms_used", r.terms_used}}
                          .dump()
                   << '\n';
            else
                os << fmt17(gc_c) << ',' << fmt17(r.value) << ',' << fmt17(r.error_bound) << ','
                   << r.terms_used << '\n';
        } else if (*zeta_cmd) {
            const double v = evaluator_for(zeta_op)(zeta_s, zeta_tol);
            if (format == "json")
                os << json{{"op", zeta_op}, {"s", zeta_s}, {"value", v}}.dump() << '\n';
            else
                os << fmt17(zeta_s) << ',' << fmt17(v) << '\n';
        } else if (*laurent_cmd) {
            const auto ld = laurent_at_pole(evaluator_for(laurent_op), laurent_z0, laurent_order);
            os << json{{"z0", ld.z0},
                       {"order", ld.order},
                       {"A2", ld.A2},
                       {"A1", ld.A1},
                       {"finite_part", ld.finite_part},
                       {"err", std::max({ld.error_estimates[0], ld.error_estimates[1],
                                         ld.error_estimates[2]})}}
                      .dump()
               << '\n';
        } else if (*weyl_cmd) {
            const auto op = parse_product_descriptor(weyl_op);
            json j;
            if (op.pole_order() == 2) {
                const auto ld = laurent_at_pole(ZetaEvaluator::for_operator(op), op.z0(), 2);
                const auto w = aramaki_expansion(ld, op.z0());
                j = json{{"z0", w.z0},
                         {"coeff_log", w.coeff_log},
                         {"coeff_plain", w.coeff_plain},
                         {"method", "zeta-laurent-tauberian"}};
            } else {
                const double coeff = unequal_order_coefficient(op);
                j = json{{"z0", op.z0()},
                         {"coeff_log", 0.0},
                         {"coeff_plain", coeff},
                         {"method", "dominant-factor-trace"}};
            }
            os << j.dump() << '\n';
        } else if (*aram_cmd) {
            LaurentData ld;
            ld.z0 = ar_z0;
            ld.order = ar_order;
            ld.A2 = (ar_order == 2) ? ar_a2 : 0.0;
            ld.A1 = ar_a1;
            const auto w = aramaki_expansion(ld, ar_z0);
            os << json{{"z0", w.z0}, {"coeff_log", w.coeff_log}, {"coeff_plain", w.coeff_plain}}
                      .dump()
               << '\n';
        } else if (*t1_cmd) {
            return run_table(1, t1_lambda, t1_cmin, t1_cmax, t1_both, threads, out);
        } else if (*t2_cmd) {
            return run_table(2, t2_lambda, t2_cmin, t2_cmax, t2_both, threads, out);
        } else if (*rem_cmd) {
            auto grid = log_uniform_grid(rem_min, rem_max, rem_points);
            auto study = remainder_series(grid, rem_c);
            // the fit has its own eligibility rules (>= 20 samples, >= 3
            // decades); an ineligible grid still gets its samples
            std::optional<double> expo;
            std::string why;
            try {
                expo = exponent_fit(study);
            } catch (const domain_error& e) {
                why = e.what();
            }
            if (format == "json") {
                json samples = json::array();
                for (auto& [lam, delta] : study.samples)
                    samples.push_back({{"lambda", lam}, {"delta", delta}});
                json j{{"samples", samples},
                       {"references",
                        {{"hardy", RemainderStudy::hardy_exponent},
                         {"huxley", RemainderStudy::huxley_exponent}}}};
                if (expo) {
                    j["fitted_exponent"] = *expo;
                    j["fit_rsquared"] = study.fit_rsquared;
                } else {
                    j["fitted_exponent"] = nullptr;
                    j["fit_unavailable"] = why;
                }
                os << j.dump() << '\n';
            } else {
                os << "lambda,delta\n";
                for (auto& [lam, delta] : study.samples)
                    os << fmt17(lam) << ',' << fmt17(delta) << '\n';
                if (expo)
                    os << "# fitted_exponent=" << fmt17(*expo)
                       << " hardy=" << fmt17(RemainderStudy::hardy_exponent)
                       << " huxley=" << fmt17(RemainderStudy::huxley_exponent) << '\n';
                else
                    os << "# fitted_exponent=unavailable (" << why << ")\n";
            }
        } else if (*wres_cmd) {
            const auto op = parse_product_descriptor(wres_op);
            if (op.pole_order() != 2)
                throw domain_error("weyl", "wres needs equal factor ratios (double pole)");
            const auto ld = laurent_at_pole(ZetaEvaluator::for_operator(op), op.z0(), 2);
            os << json{{"wres", wodzicki_residue(ld, op.m1(), op.m2())},
                       {"m1", op.m1()},
                       {"m2", op.m2()},
                       {"A2", ld.A2}}
                      .dump()
               << '\n';
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
