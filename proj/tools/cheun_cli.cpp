// Command-line front end: evaluation, case classification, identity
// verification, closed forms, the 2F2 expansion, and termination search.
// Output is JSON-lines (default) or RFC-4180 CSV; complex numbers are
// serialized as {"re": ..., "im": ...} or re/im column pairs. Runs with a
// fixed --seed are byte-identical.
//
// Exit codes: 0 success, 2 input/validation failure, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cheun/batch.hpp"
#include "cheun/closed_forms.hpp"
#include "cheun/frobenius.hpp"
#include "cheun/goursat.hpp"
#include "cheun/relations.hpp"
#include "cheun/residual.hpp"
#include "json.hpp"

using namespace cheun;
using json = nlohmann::ordered_json;

namespace {

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
        return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a complex value as 're' or 're,im': " + s);
    }
}

json to_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Output {
    bool csv = false;
    void line(const json& record) const {
        if (!csv) std::cout << record.dump() << "\n";
    }
    void csv_row(const std::vector<std::string>& cells) const {
        if (!csv) return;
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << cells[i] << (i + 1 < cells.size() ? "," : "");
        std::cout << "\r\n";
    }
};

struct CommonOpts {
    std::string p = "0.25,0", gamma = "1,0", delta = "1,0", alpha = "0,0", sigma = "0,0";
    std::vector<std::string> zs;
    std::string disk;  // "R:COUNT"
    int order = 80;
    double tol = 1e-14;
    double rmax = default_r_max;
    std::string format = "json";
    std::uint64_t seed = 0;

    void attach(CLI::App* app, bool with_params = true) {
        if (with_params) {
            app->add_option("--p", p, "p as re,im");
            app->add_option("--gamma", gamma, "gamma as re,im");
            app->add_option("--delta", delta, "delta as re,im");
            app->add_option("--alpha", alpha, "alpha as re,im");
            app->add_option("--sigma", sigma, "sigma as re,im");
        }
        app->add_option("--z", zs, "evaluation point re,im (repeatable)");
        app->add_option("--disk", disk, "sample points uniformly in |z| <= R as R:COUNT");
        app->add_option("--order", order, "series/expansion order N");
        app->add_option("--tol", tol, "series truncation tolerance");
        app->add_option("--rmax", rmax, "evaluation disk radius (< 1)");
        app->add_option("--format", format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        app->add_option("--seed", seed, "seed for --disk sampling");
    }

    CheParams params() const {
        return validate(parse_complex(p), parse_complex(gamma), parse_complex(delta),
                        parse_complex(alpha), parse_complex(sigma));
    }

    std::vector<cplx> points(double fallback_radius = 0.4, int fallback_count = 0) const {
        std::vector<cplx> out;
        for (const auto& s : zs) out.push_back(parse_complex(s));
        double radius = 0.0;
        int count = 0;
        if (!disk.empty()) {
            const auto colon = disk.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--disk expects R:COUNT");
            radius = std::stod(disk.substr(0, colon));
            count = std::stoi(disk.substr(colon + 1));
        } else if (out.empty() && fallback_count > 0) {
            radius = fallback_radius;
            count = fallback_count;
        }
        std::mt19937_64 eng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < count; ++i) {
            const double r = radius * std::sqrt(unit(eng));
            const double th = 2.0 * 3.14159265358979323846 * unit(eng);
            out.emplace_back(r * std::cos(th), r * std::sin(th));
        }
        return out;
    }

    SeriesControl control() const {
        SeriesControl ctl;
        ctl.rel_tol = tol;
        return ctl;
    }
};

int exit_code_for(errc c) {
    switch (c) {
        case errc::zero_p:
        case errc::non_finite:
        case errc::out_of_disk:
        case errc::resonant_gamma:
        case errc::not_applicable:
        case errc::not_sigma_zero:
        case errc::degenerate_gamma:
        case errc::degenerate_alpha:
        case errc::degenerate_branches:
        case errc::zero_base:
            return 2;
        default:
            return 3;
    }
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const CommonOpts& opt, const std::string& branch) {
    const CheParams q = opt.params();
    const std::vector<cplx> pts = opt.points();
    if (pts.empty()) throw CLI::ValidationError("eval: no points (--z or --disk)");
    const C2Fn fn = branch == "second" ? second_solution_fn(q, opt.order, opt.rmax)
                                       : hc_fn(q, opt.order, opt.rmax);
    const auto samples = batch::eval_points(fn, pts);
    Output out{opt.format == "csv"};
    out.csv_row({"index", "z_re", "z_im", "u_re", "u_im", "du_re", "du_im", "d2u_re", "d2u_im"});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.line(json{{"index", i},
                      {"z", to_json(pts[i])},
                      {"u", to_json(samples[i].value)},
                      {"du", to_json(samples[i].d1)},
                      {"d2u", to_json(samples[i].d2)}});
        out.csv_row({std::to_string(i), csv_num(pts[i].real()), csv_num(pts[i].imag()),
                     csv_num(samples[i].value.real()), csv_num(samples[i].value.imag()),
                     csv_num(samples[i].d1.real()), csv_num(samples[i].d1.imag()),
                     csv_num(samples[i].d2.real()), csv_num(samples[i].d2.imag())});
    }
    return 0;
}

// -------------------------------------------------------------- relate ----

const char* case_name(ReductionCase c) {
    switch (c) {
        case ReductionCase::alpha_zero: return "AlphaZero";
        case ReductionCase::sigma_zero: return "SigmaZero";
        case ReductionCase::sigma_eq_4p_alpha: return "SigmaEq4pAlpha";
    }
    return "?";
}

json relation_record(const CheParams& q, const DerivRelation& rel,
                     std::span<const cplx> zs, int order) {
    json rec;
    rec["case"] = case_name(rel.reduction);
    rec["s"] = to_json(rel.s);
    rec["prefactor_center"] = rel.prefactor_center;
    rec["target"] = json{{"p", to_json(rel.target.p)},
                         {"gamma", to_json(rel.target.gamma)},
                         {"delta", to_json(rel.target.delta)},
                         {"alpha", to_json(rel.target.alpha)},
                         {"sigma", to_json(rel.target.sigma)}};
    rec["scale"] = to_json(rel.scale);
    rec["coeff_deviation"] = verify_relation_coeffs(q, rel, zs);
    try {
        rec["ratio_deviation"] = verify_relation_solutions(q, rel, zs, order).max_deviation;
    } catch (const error& e) {
        rec["ratio_deviation"] = nullptr;
        rec["note"] = e.what();
    }
    return rec;
}

int cmd_relate(const CommonOpts& opt) {
    const CheParams q = opt.params();
    std::vector<cplx> pts = opt.points(0.4, 10);
    // keep the sample clear of 0, 1 and the real rays (prefactor branch cuts)
    std::erase_if(pts, [](cplx z) {
        return std::abs(z) < 0.05 || std::abs(z - 1.0) < 0.05 ||
               std::abs(z.imag()) < 0.02 * std::abs(z);
    });
    if (pts.size() < 2) {
        std::mt19937_64 eng(opt.seed + 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (pts.size() < 10) {
            const double r = 0.1 + 0.3 * unit(eng);
            const double th = 0.3 + unit(eng) * (3.14159265358979323846 - 0.6);
            pts.emplace_back(r * std::cos(th), (unit(eng) < 0.5 ? 1.0 : -1.0) * r * std::sin(th));
        }
    }

    const CaseTag tag = classify(q);
    json rec;
    rec["cases"] = json::array();
    if (tag.alpha_zero) rec["cases"].push_back("AlphaZero");
    if (tag.sigma_zero) rec["cases"].push_back("SigmaZero");
    if (tag.sigma_eq_4p_alpha) rec["cases"].push_back("SigmaEq4pAlpha");
    rec["relations"] = json::array();

    if (tag.alpha_zero)
        rec["relations"].push_back(relation_record(q, relation_alpha_zero(q), pts, opt.order));
    if (tag.sigma_zero) {
        rec["relations"].push_back(
            relation_record(q, relation_sigma_zero(q, SigmaZeroBranch::s_one), pts, opt.order));
        try {
            rec["relations"].push_back(relation_record(
                q, relation_sigma_zero(q, SigmaZeroBranch::s_minus_gamma), pts, opt.order));
        } catch (const error&) {
            // gamma = -1: the branches coincide; only s = 1 is reported
        }
    }
    if (tag.sigma_eq_4p_alpha) {
        rec["relations"].push_back(relation_record(
            q, relation_sigma_4palpha(q, Sigma4pAlphaBranch::s_one), pts, opt.order));
        try {
            rec["relations"].push_back(relation_record(
                q, relation_sigma_4palpha(q, Sigma4pAlphaBranch::s_minus_delta), pts, opt.order));
        } catch (const error&) {
        }
    }

    Output out{opt.format == "csv"};
    out.line(rec);
    out.csv_row({"case", "s_re", "s_im", "prefactor_center", "scale_re", "scale_im",
                 "coeff_deviation", "ratio_deviation"});
    for (const auto& r : rec["relations"]) {
        out.csv_row({r["case"].get<std::string>(), csv_num(r["s"]["re"].get<double>()),
                     csv_num(r["s"]["im"].get<double>()),
                     std::to_string(r["prefactor_center"].get<int>()),
                     csv_num(r["scale"]["re"].get<double>()),
                     csv_num(r["scale"]["im"].get<double>()),
                     csv_num(r["coeff_deviation"].get<double>()),
                     r["ratio_deviation"].is_null() ? ""
                                                    : csv_num(r["ratio_deviation"].get<double>())});
    }
    return 0;
}

// -------------------------------------------------------------- verify ----

int cmd_verify(const CommonOpts& opt, const std::string& branch) {
    const CheParams q = opt.params();
    const std::vector<cplx> pts = opt.points(0.4, 20);
    if (pts.empty()) throw CLI::ValidationError("verify: no points (--z or --disk)");
    const C2Fn fn = branch == "second" ? second_solution_fn(q, opt.order, opt.rmax)
                                       : hc_fn(q, opt.order, opt.rmax);
    const ResidualReport rep = batch::residual_scan(
        [&q](cplx z) { return coeff_f(q, z); }, [&q](cplx z) { return coeff_g(q, z); }, fn, pts);
    Output out{opt.format == "csv"};
    out.csv_row({"index", "z_re", "z_im", "residual"});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.line(json{{"index", i}, {"z", to_json(pts[i])}, {"residual", rep.residuals[i]}});
        out.csv_row({std::to_string(i), csv_num(pts[i].real()), csv_num(pts[i].imag()),
                     csv_num(rep.residuals[i])});
    }
    out.line(json{{"max_residual", rep.max_residual}, {"scale", rep.scale}});
    return 0;
}

// --------------------------------------------------------- closed-form ----

int cmd_closed_form(const CommonOpts& opt, int which) {
    const cplx p = parse_complex(opt.p);
    ClosedFormFamily fam;
    if (which == 1)
        fam = case1_family(p, parse_complex(opt.gamma));
    else if (which == 2)
        fam = case2_family(p, parse_complex(opt.alpha));
    else
        fam = case3_family(p, parse_complex(opt.alpha));

    std::vector<cplx> pts = opt.points();
    if (pts.empty()) {
        std::mt19937_64 eng(opt.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (pts.size() < 20) {
            const double r = 0.08 + 0.32 * unit(eng);
            const double th = 0.3 + unit(eng) * (3.14159265358979323846 - 0.6);
            pts.emplace_back(r * std::cos(th), (unit(eng) < 0.5 ? 1.0 : -1.0) * r * std::sin(th));
        }
    }

    Output out{opt.format == "csv"};
    out.csv_row({"branch", "max_residual", "constant_re", "constant_im"});
    const auto emit = [&](const char* name, double resid, cplx constant) {
        out.line(json{{"branch", name},
                      {"max_residual", resid},
                      {"constant", to_json(constant)}});
        out.csv_row({name, csv_num(resid), csv_num(constant.real()), csv_num(constant.imag())});
    };
    emit("u1", che_residual(fam.locus, fam.u1, pts).max_residual,
         which == 1 ? cplx(0.0) : fam.u1_constant);
    emit("u2", che_residual(fam.locus, fam.u2, pts).max_residual, fam.u2_constant);
    emit("w1", batch::residual_scan(fam.w_a1, fam.w_a0, fam.w1, pts).max_residual, 0.0);
    emit("w2", batch::residual_scan(fam.w_a1, fam.w_a0, fam.w2, pts).max_residual, 0.0);
    return 0;
}

// -------------------------------------------------------------- goursat ----

int cmd_goursat(const CommonOpts& opt, const std::string& c0_flag) {
    const CheParams q = opt.params();
    const int N = std::min(opt.order, 200);
    GoursatExpansion e = compute_coefficients(init_expansion(q, N), N);

    json rec;
    rec["alpha0"] = to_json(e.alpha0);
    rec["gamma0"] = to_json(e.gamma0);
    rec["s0"] = to_json(e.s0);
    rec["a"] = json::array();
    for (cplx a : e.coeffs) rec["a"].push_back(to_json(a));

    double recur = 0.0;
    for (int n = 2; n <= N; ++n) {
        const cplx lhs = rqp(n, e).R * e.coeffs[n] + rqp(n - 1, e).Q * e.coeffs[n - 1] +
                         rqp(n - 2, e).P * e.coeffs[n - 2];
        const double scale = std::max(
            {std::abs(rqp(n, e).R * e.coeffs[n]), std::abs(rqp(n - 1, e).Q * e.coeffs[n - 1]),
             std::abs(rqp(n - 2, e).P * e.coeffs[n - 2]), 1e-300});
        recur = std::max(recur, std::abs(lhs) / scale);
    }
    rec["recurrence_check"] = recur;

    if (c0_flag == "auto") {
        try {
            e.C0 = determine_C0(e, cplx(0.27, 0.11), opt.control());
            rec["C0"] = to_json(*e.C0);
        } catch (const error& err) {
            rec["C0"] = nullptr;
            rec["note"] = err.what();
        }
    } else if (!c0_flag.empty()) {
        e.C0 = parse_complex(c0_flag);
        rec["C0"] = to_json(*e.C0);
    } else {
        rec["C0"] = nullptr;
    }

    rec["samples"] = json::array();
    for (cplx z : opt.points()) {
        json s;
        s["z"] = to_json(z);
        const C2Sample w = eval_w(e, z, opt.control());
        s["w"] = to_json(w.value);
        s["dw"] = to_json(w.d1);
        if (e.C0) {
            try {
                s["u"] = to_json(eval_u(e, z, opt.control()).value);
            } catch (const error& err) {
                s["u"] = nullptr;
                s["note"] = err.what();
            }
        }
        rec["samples"].push_back(s);
    }

    Output out{opt.format == "csv"};
    out.line(rec);
    out.csv_row({"n", "a_re", "a_im"});
    for (std::size_t n = 0; n < e.coeffs.size(); ++n)
        out.csv_row({std::to_string(n), csv_num(e.coeffs[n].real()), csv_num(e.coeffs[n].imag())});
    return 0;
}

// ------------------------------------------------------------ terminate ----

int cmd_terminate(const CommonOpts& opt, const std::string& branch_name) {
    const int N = opt.order;
    const TerminationBranch branch = branch_name == "alpha-gamma"
                                         ? TerminationBranch::alpha_minus_gamma_eq_minus_n
                                         : TerminationBranch::delta_eq_minus_n;
    const cplx gamma = parse_complex(opt.gamma);
    const cplx freev = branch == TerminationBranch::delta_eq_minus_n ? parse_complex(opt.alpha)
                                                                     : parse_complex(opt.delta);
    const TerminationCase tc = termination_case(N, branch, gamma, freev);

    json rec;
    rec["N"] = N;
    rec["branch"] = branch_name == "alpha-gamma" ? "AlphaMinusGammaEqMinusN" : "DeltaEqMinusN";
    rec["poly"] = json::array();
    for (cplx c : tc.aN.coefficients()) rec["poly"].push_back(to_json(c));
    rec["roots"] = json::array();

    std::mt19937_64 eng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<cplx> pts;
    while (pts.size() < 10) {
        const double r = 0.1 + 0.3 * unit(eng);
        const double th = 0.25 + unit(eng) * (3.14159265358979323846 - 0.5);
        pts.emplace_back(r * std::cos(th), (unit(eng) < 0.5 ? 1.0 : -1.0) * r * std::sin(th));
    }

    Output out{opt.format == "csv"};
    out.csv_row({"p_re", "p_im", "abs_aN", "abs_aN1", "u_residual"});
    for (cplx root : tc.p_roots) {
        const CheParams q = validate(root, tc.gamma, tc.delta, tc.alpha, 0.0);
        GoursatExpansion e = compute_coefficients(init_expansion(q, N + 1), N + 1);
        double big = 0.0;
        for (cplx a : e.coeffs) big = std::max(big, std::abs(a));
        json r;
        r["p"] = to_json(root);
        r["abs_aN"] = std::abs(e.coeffs[N]) / big;
        r["abs_aN1"] = std::abs(e.coeffs[N + 1]) / big;
        double resid = -1.0;
        try {
            e.C0 = 0.0;
            resid = che_residual(q, [&](cplx z) { return eval_u(e, z, opt.control()); }, pts)
                        .max_residual;
            r["u_residual"] = resid;
        } catch (const error& err) {
            r["u_residual"] = nullptr;
            r["note"] = err.what();
        }
        rec["roots"].push_back(r);
        out.csv_row({csv_num(root.real()), csv_num(root.imag()),
                     csv_num(r["abs_aN"].get<double>()), csv_num(r["abs_aN1"].get<double>()),
                     resid >= 0.0 ? csv_num(resid) : ""});
    }
    out.line(rec);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"confluent Heun function toolkit"};
    app.require_subcommand(1);

    CommonOpts o_eval, o_relate, o_verify, o_closed, o_goursat, o_term;
    std::string eval_branch = "first", verify_branch = "first";
    std::string term_branch = "delta", c0_flag = "auto";
    int cf_case = 1;

    auto* eval = app.add_subcommand("eval", "evaluate the local solution and derivatives");
    o_eval.attach(eval);
    eval->add_option("--branch", eval_branch, "first | second")
        ->check(CLI::IsMember({"first", "second"}));

    auto* relate = app.add_subcommand("relate", "list applicable derivative reductions");
    o_relate.attach(relate);

    auto* verify = app.add_subcommand("verify", "equation residual of the series solution");
    o_verify.attach(verify);
    verify->add_option("--branch", verify_branch, "first | second")
        ->check(CLI::IsMember({"first", "second"}));

    auto* closed = app.add_subcommand("closed-form", "explicit solution families");
    o_closed.attach(closed);
    closed->add_option("--case", cf_case, "1 | 2 | 3")->check(CLI::Range(1, 3));

    auto* goursat = app.add_subcommand("goursat", "Kummer-series expansion of w and its 2F2 integral");
    o_goursat.attach(goursat);
    goursat->add_option("--c0", c0_flag, "integration constant re,im, or 'auto'");

    auto* term = app.add_subcommand("terminate", "series-termination roots in p");
    o_term.attach(term);
    term->add_option("--branch", term_branch, "delta | alpha-gamma")
        ->check(CLI::IsMember({"delta", "alpha-gamma"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o_eval, eval_branch);
        if (relate->parsed()) return cmd_relate(o_relate);
        if (verify->parsed()) return cmd_verify(o_verify, verify_branch);
        if (closed->parsed()) return cmd_closed_form(o_closed, cf_case);
        if (goursat->parsed()) return cmd_goursat(o_goursat, c0_flag);
        if (term->parsed()) return cmd_terminate(o_term, term_branch);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
