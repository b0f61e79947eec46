// Command-line front end: spectra, the broken/unbroken boundary table,
// Richardson extrapolation of its differences, the WKB constants, and a
// self-verification suite. Emits csv / json / plot-data with byte-stable
// fixed-point formatting.

#include "qes/exact.hpp"
#include "qes/io.hpp"
#include "qes/richardson.hpp"
#include "qes/shooting.hpp"
#include "qes/spectrum.hpp"
#include "qes/wkb.hpp"

#include <CLI11.hpp>

#include <boost/math/constants/constants.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qes;

struct CommonOut {
    std::string format = "csv";
    std::string out_path;
};

void emit(const TableDocument& doc, const CommonOut& out) {
    std::string text = doc.render(out.format);
    if (out.out_path.empty()) std::cout << text;
    else write_text_file(out.out_path, text);
}

BoundaryMethod parse_method(const std::string& m) {
    if (m == "sturm") return BoundaryMethod::SturmBisection;
    if (m == "discriminant") return BoundaryMethod::DiscriminantRoot;
    throw std::invalid_argument("unknown method: " + m);
}

/// Boundary rows for J = 2..J_max at `decimals` printed decimals, through
/// the cache when one is configured.
std::vector<CriticalBoundary> boundary_table(int J_max, int decimals, BoundaryMethod method,
                                             BoundaryCache& cache) {
    const unsigned sig = static_cast<unsigned>(decimals) + 6;
    std::vector<CriticalBoundary> table;
    for (int J = 2; J <= J_max; ++J) {
        if (auto hit = cache.lookup(J, sig, method)) {
            table.push_back(*hit);
            continue;
        }
        CriticalBoundary cb = find_critical_a_squared(J, sig, method);
        cache.store(cb, sig);
        table.push_back(cb);
    }
    cache.flush();
    return table;
}

int cmd_spectrum(int J, const std::string& variant, double a2, double a_signed,
                 bool has_a2, bool has_a, int digits, const CommonOut& out) {
    if (digits < 15) throw std::invalid_argument("precision must be >= 15 digits");
    PrecisionGuard guard(static_cast<unsigned>(digits) + 10);
    QesProblem p = [&] {
        if (variant == "hermitian") {
            if (has_a2 || has_a)
                throw std::invalid_argument("the Hermitian family takes no parameter a");
            return QesProblem::hermitian(J);
        }
        if (has_a2 && has_a) throw std::invalid_argument("pass either --a or --a2, not both");
        Real a = has_a ? Real(a_signed) : sqrt(Real(a2));
        return QesProblem::pt(J, a);
    }();
    Spectrum s = qes_spectrum(p, static_cast<unsigned>(digits));

    TableDocument doc;
    doc.schema = "qes.spectrum/1";
    doc.config = {{"J", J},
                  {"variant", variant},
                  {"digits", digits},
                  {"residual_bound", s.residual_bound.str(3)}};
    if (has_a2) doc.config["a2"] = a2;
    if (has_a) doc.config["a"] = a_signed;
    doc.columns = {"index", "kind", "re", "im"};
    int idx = 0;
    for (const auto& e : s.real_values)
        doc.rows.push_back({std::to_string(idx++), "real", format_fixed(e, digits), ""});
    for (const auto& pr : s.complex_pairs)
        doc.rows.push_back({std::to_string(idx++), "pair", format_fixed(pr.first, digits),
                            format_fixed(pr.second, digits)});
    emit(doc, out);
    return 0;
}

int cmd_boundary(int J, int decimals, const std::string& method_name, const CommonOut& out,
                 const std::string& cache_path) {
    if (J < 2) throw std::invalid_argument("no transition at J=1: boundary needs J >= 2");
    BoundaryCache cache(cache_path);
    auto method = parse_method(method_name);
    const unsigned sig = static_cast<unsigned>(decimals) + 6;
    CriticalBoundary cb = [&] {
        if (auto hit = cache.lookup(J, sig, method)) return *hit;
        auto fresh = find_critical_a_squared(J, sig, method);
        cache.store(fresh, sig);
        cache.flush();
        return fresh;
    }();
    TableDocument doc;
    doc.schema = "qes.boundary/1";
    doc.config = {{"J", J}, {"digits", decimals}, {"method", method_name}};
    doc.columns = {"J", "a_crit_sq", "bracket_lo", "bracket_hi", "achieved_digits"};
    doc.rows.push_back({std::to_string(J), format_fixed(cb.a_crit_sq, decimals),
                        format_fixed(cb.lo, decimals + 4), format_fixed(cb.hi, decimals + 4),
                        std::to_string(cb.digits)});
    emit(doc, out);
    return 0;
}

int cmd_table1(int J_max, int decimals, const std::string& method_name, const CommonOut& out,
               const std::string& cache_path) {
    if (J_max < 2) throw std::invalid_argument("no transition at J=1: need --J-max >= 2");
    if (J_max > 24) throw std::invalid_argument("supported J cap is 24");
    BoundaryCache cache(cache_path);
    auto table = boundary_table(J_max, decimals, parse_method(method_name), cache);
    TableDocument doc;
    doc.schema = "qes.table1/1";
    doc.config = {{"J_max", J_max}, {"digits", decimals}, {"method", method_name}};
    doc.columns = {"J", "a_crit_sq", "difference"};
    for (std::size_t i = 0; i < table.size(); ++i) {
        std::string diff =
            i == 0 ? ""
                   : format_fixed(table[i].a_crit_sq - table[i - 1].a_crit_sq, decimals);
        doc.rows.push_back({std::to_string(table[i].J),
                            format_fixed(table[i].a_crit_sq, decimals), diff});
    }
    emit(doc, out);
    return 0;
}

int cmd_richardson(int J_max, int levels, int decimals, const CommonOut& out,
                   const std::string& cache_path) {
    if (J_max < 3) throw std::invalid_argument("need --J-max >= 3 for differences");
    BoundaryCache cache(cache_path);
    auto table = boundary_table(J_max, decimals, BoundaryMethod::SturmBisection, cache);
    Sequence diffs;
    for (std::size_t i = 1; i < table.size(); ++i)
        diffs.emplace_back(static_cast<int>(i),
                           table[i].a_crit_sq - table[i - 1].a_crit_sq);

    TableDocument doc;
    doc.schema = "qes.richardson/1";
    doc.config = {{"J_max", J_max}, {"levels", levels}, {"digits", decimals}};
    if (levels == 0) {
        doc.columns = {"J", "difference"};
        for (const auto& pr : diffs)
            doc.rows.push_back({std::to_string(pr.first), format_fixed(pr.second, decimals)});
        emit(doc, out);
        return 0;
    }
    auto ext = repeated_richardson(diffs, levels);
    std::pair<Real, Real> lim{ext.levels.back().back(), Real(0)};
    if (ext.levels.size() >= 3) lim = estimate_limit(ext);
    doc.config["limit_estimate"] = format_fixed(lim.first, decimals);
    doc.config["limit_uncertainty"] = format_fixed(lim.second, decimals);
    doc.columns = {"J"};
    for (int r = 1; r <= levels; ++r) doc.columns.push_back("R" + std::to_string(r));
    for (std::size_t n = 0; n < ext.levels[1].size(); ++n) {
        std::vector<std::string> row{std::to_string(n + 1)};
        for (int r = 1; r <= levels; ++r) {
            const auto& lv = ext.levels[static_cast<std::size_t>(r)];
            row.push_back(n < lv.size() ? format_fixed(lv[n], decimals) : "");
        }
        doc.rows.push_back(row);
    }
    emit(doc, out);
    return 0;
}

int cmd_fig1(int J_max, int decimals, const CommonOut& out, const std::string& cache_path) {
    if (J_max < 3) throw std::invalid_argument("need --J-max >= 3 for differences");
    BoundaryCache cache(cache_path);
    auto table = boundary_table(J_max, decimals, BoundaryMethod::SturmBisection, cache);
    TableDocument doc;
    doc.schema = "qes.fig1/1";
    doc.config = {{"J_max", J_max}, {"digits", decimals}};
    doc.columns = {"inv_J", "difference"};
    doc.comments = {"x = 1/J", "y = [a_crit(J+1)]^2 - [a_crit(J)]^2",
                    "reference: y -> 12 as 1/J -> 0"};
    PrecisionGuard guard(static_cast<unsigned>(decimals) + 10);
    for (std::size_t i = 0; i + 1 < table.size(); ++i) {
        Real inv_j = Real(1) / table[i].J;
        Real diff = table[i + 1].a_crit_sq - table[i].a_crit_sq;
        doc.rows.push_back({format_fixed(inv_j, 6), format_fixed(diff, decimals)});
    }
    emit(doc, out);
    return 0;
}

int cmd_wkb(double search_tol, double quad_tol, const CommonOut& out) {
    PrecisionGuard guard(40);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    Real b_crit = -2 * sqrt(Real(3));
    auto fac = factorization_from_b(b_crit);
    Real integral = quantization_integral(b_crit, fac.F, Real(quad_tol));
    Real b_found = wkb_boundary_constant(Real(search_tol));
    TableDocument doc;
    doc.schema = "qes.wkb/1";
    doc.config = {{"search_tol", search_tol}, {"quad_tol", quad_tol}};
    doc.columns = {"quantity", "value"};
    auto put = [&](const std::string& name, const Real& v) {
        doc.rows.push_back({name, format_fixed(v, 15)});
    };
    put("quantization_integral_at_critical", integral);
    put("two_pi", two_pi);
    put("b_squared", b_found * b_found);
    put("scaled_energy_F", fac.F);
    put("asymptotic_prefactor", asymptotic_energy(1));
    emit(doc, out);
    return 0;
}

struct VerifyReport {
    int checks = 0;
    int failures = 0;
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        ++checks;
        if (!ok) ++failures;
        std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : "  ", detail.c_str());
    }
};

void verify_spectra(VerifyReport& rep) {
    PrecisionGuard g(40);
    for (int ia : {-3, 0, 2}) {
        auto s = qes_spectrum(QesProblem::pt(1, Real(ia)), 30);
        rep.check("spectra: J=1 gives E = -a (a=" + std::to_string(ia) + ")",
                  s.real_values.size() == 1 && abs(s.real_values[0] + ia) < 1e-25);
    }
    auto s2 = qes_spectrum(QesProblem::pt(2, Real(2)), 30);
    Real r2 = sqrt(Real(2));
    rep.check("spectra: J=2 a=2 closed-form pair",
              s2.real_values.size() == 2 &&
                  abs(s2.real_values[0] + 6 + 2 * r2) < 1e-25 &&
                  abs(s2.real_values[1] + 6 - 2 * r2) < 1e-25);
    auto s0 = qes_spectrum(QesProblem::pt(2, Real(0)), 30);
    rep.check("spectra: J=2 a=0 conjugate pair +-2i sqrt2",
              s0.complex_pairs.size() == 1 && abs(s0.complex_pairs[0].first) < 1e-25 &&
                  abs(s0.complex_pairs[0].second - 2 * r2) < 1e-25);
    auto s5 = qes_spectrum(QesProblem::pt(5, Real(3)), 30);
    Real trace(0);
    for (const auto& e : s5.real_values) trace += e;
    for (const auto& p : s5.complex_pairs) trace += 2 * p.first;
    rep.check("spectra: J=5 trace identity -a J(2J-1)", abs(trace + 3 * 5 * 9) < 1e-22);
    auto h = qes_spectrum(QesProblem::hermitian(6), 30);
    Real ht(0);
    for (const auto& e : h.real_values) ht += e;
    rep.check("spectra: Hermitian J=6 all real with zero trace",
              h.complex_pairs.empty() && abs(ht) < 1e-22);
}

void verify_boundary(VerifyReport& rep) {
    auto b2 = find_critical_a_squared(2, 13);
    {
        PrecisionGuard g(40);
        rep.check("boundary: J=2 critical value 2", abs(b2.a_crit_sq - 2) < 1e-12);
    }
    auto b3 = find_critical_a_squared(3, 13);
    {
        PrecisionGuard g(40);
        rep.check("boundary: J=3 critical value 10.5874700363",
                  abs(b3.a_crit_sq - Real("10.5874700363")) < 5e-11);
    }
    auto d3 = find_critical_a_squared_discriminant(3, 13);
    {
        PrecisionGuard g(40);
        rep.check("boundary: sturm and discriminant agree at J=3",
                  abs(b3.a_crit_sq - d3.a_crit_sq) < 1e-12);
    }
}

void verify_richardson(VerifyReport& rep) {
    std::vector<CriticalBoundary> table;
    for (int J = 2; J <= 8; ++J) table.push_back(find_critical_a_squared(J, 14));
    PrecisionGuard g(40);
    Sequence diffs;
    for (std::size_t i = 1; i < table.size(); ++i)
        diffs.emplace_back(static_cast<int>(i),
                           table[i].a_crit_sq - table[i - 1].a_crit_sq);
    auto r1 = richardson_step(diffs);
    rep.check("richardson: first extrapolant row 1 = 11.3406567704",
              abs(r1[0].second - Real("11.3406567704")) < 1e-9);
    rep.check("richardson: first extrapolant row 4 = 11.7509034718",
              abs(r1[3].second - Real("11.7509034718")) < 1e-9);
    Sequence synth;
    for (int n = 1; n <= 9; ++n)
        synth.emplace_back(n, Real(12) + Real(3) / n + Real(5) / n / n + Real(7) / n / n / n);
    auto full = nth_richardson(synth, 3);
    bool exact = true;
    for (const auto& p : full)
        if (abs(p.second - 12) > 1e-28) exact = false;
    rep.check("richardson: order-3 extrapolation annihilates c_i/n^i", exact);
}

void verify_wkb(VerifyReport& rep) {
    PrecisionGuard g(40);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    Real b = -2 * sqrt(Real(3));
    auto fac = factorization_from_b(b);
    Real I = quantization_integral(b, fac.F, Real("1e-14"));
    rep.check("wkb: quantization integral = 2 pi at critical factorization",
              abs(I - two_pi) < 1e-10, "|I - 2pi| = " + Real(I - two_pi).str(3));
    Real bstar = wkb_boundary_constant(Real("1e-9"));
    rep.check("wkb: boundary constant b^2 = 12", abs(bstar * bstar - 12) < 1e-8);
    auto beta_f = [](const Real& u) -> Real {
        return pow(u, Real("-0.5")) * pow(1 - u, Real("1.5"));
    };
    Real beta = tanh_sinh(beta_f, Real(0), Real(1), Real("1e-16"));
    rep.check("wkb: beta integral = 3 pi / 8",
              abs(beta - 3 * boost::math::constants::pi<Real>() / 8) < 1e-12);
    rep.check("wkb: asymptotic prefactor = 64 sqrt3 / 9",
              abs(asymptotic_energy(1) - 64 * sqrt(Real(3)) / 9) < 1e-12);
}

void verify_ode(VerifyReport& rep) {
    for (int J = 1; J <= 3; ++J) {
        Real a(J + 3);  // comfortably inside the unbroken region for J <= 3
        auto s = qes_spectrum(QesProblem::pt(J, a), 30);
        bool ok = s.complex_pairs.empty();
        double worst = 0;
        for (const auto& e : s.real_values) {
            double r = shoot_eigenvalue_residual(QesProblem::pt(J, a),
                                                 {e.convert_to<double>(), 0.0});
            worst = std::max(worst, r);
            ok = ok && r < 1e-6;
        }
        rep.check("ode: PT J=" + std::to_string(J) + " residuals < 1e-6", ok,
                  "worst = " + std::to_string(worst));
    }
    auto h = qes_spectrum(QesProblem::hermitian(2), 30);
    bool ok = true;
    for (const auto& e : h.real_values)
        ok = ok && shoot_eigenvalue_residual(QesProblem::hermitian(2),
                                             {e.convert_to<double>(), 0.0}) < 1e-6;
    rep.check("ode: Hermitian J=2 residuals < 1e-6", ok);
    double control = shoot_eigenvalue_residual(QesProblem::hermitian(2), {0.0, 0.0});
    rep.check("ode: midpoint negative control > 1e-3", control > 1e-3);
}

int cmd_verify(const std::string& scope) {
    VerifyReport rep;
    if (scope == "spectra" || scope == "all") verify_spectra(rep);
    if (scope == "boundary" || scope == "all") verify_boundary(rep);
    if (scope == "richardson" || scope == "all") verify_richardson(rep);
    if (scope == "wkb" || scope == "all") verify_wkb(rep);
    if (scope == "ode" || scope == "all") verify_ode(rep);
    if (rep.checks == 0) throw std::invalid_argument("unknown scope: " + scope);
    std::printf("%d checks, %d failures\n", rep.checks, rep.failures);
    return rep.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-exactly-solvable sextic Hamiltonian toolkit"};
    app.require_subcommand(1);

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "quasi-exact eigenvalues of one Hamiltonian");
    int sp_J = 2;
    std::string sp_variant = "pt";
    double sp_a2 = 0, sp_a = 0;
    int sp_digits = 30;
    CommonOut sp_out;
    sp->add_option("--J", sp_J, "number of quasi-exact levels")->required();
    sp->add_option("--variant", sp_variant, "hermitian | pt")
        ->check(CLI::IsMember({"hermitian", "pt"}));
    auto* opt_a2 = sp->add_option("--a2", sp_a2, "a^2 (a = +sqrt(a2))");
    auto* opt_a = sp->add_option("--a", sp_a, "signed potential parameter a");
    sp->add_option("--digits", sp_digits, "working precision (significant digits, >= 15)");
    sp->add_option("--format", sp_out.format, "csv | json | plot-data")
        ->check(CLI::IsMember({"csv", "json", "plot-data"}));
    sp->add_option("--out", sp_out.out_path, "output path (stdout if omitted)");

    // boundary
    auto* bd = app.add_subcommand("boundary", "critical a^2 for one J");
    int bd_J = 2, bd_digits = 10;
    std::string bd_method = "sturm", bd_cache;
    CommonOut bd_out;
    bd->add_option("--J", bd_J)->required();
    bd->add_option("--digits", bd_digits, "printed decimal digits");
    bd->add_option("--method", bd_method)->check(CLI::IsMember({"sturm", "discriminant"}));
    bd->add_option("--format", bd_out.format)->check(CLI::IsMember({"csv", "json", "plot-data"}));
    bd->add_option("--out", bd_out.out_path);
    bd->add_option("--cache", bd_cache, "JSON cache path");

    // table1
    auto* t1 = app.add_subcommand("table1", "critical-value table for J = 2..J_max");
    int t1_Jmax = 20, t1_digits = 10;
    std::string t1_method = "sturm", t1_cache;
    CommonOut t1_out;
    t1->add_option("--J-max", t1_Jmax);
    t1->add_option("--digits", t1_digits, "printed decimal digits");
    t1->add_option("--method", t1_method)->check(CLI::IsMember({"sturm", "discriminant"}));
    t1->add_option("--format", t1_out.format)->check(CLI::IsMember({"csv", "json", "plot-data"}));
    t1->add_option("--out", t1_out.out_path);
    t1->add_option("--cache", t1_cache, "JSON cache path");

    // richardson
    auto* rc = app.add_subcommand("richardson", "extrapolate the difference sequence");
    int rc_Jmax = 20, rc_levels = 1, rc_digits = 12;
    std::string rc_cache;
    CommonOut rc_out;
    rc->add_option("--J-max", rc_Jmax);
    rc->add_option("--levels", rc_levels, "extrapolation depth (0 = differences only)");
    rc->add_option("--digits", rc_digits, "printed decimal digits");
    rc->add_option("--format", rc_out.format)->check(CLI::IsMember({"csv", "json", "plot-data"}));
    rc->add_option("--out", rc_out.out_path);
    rc->add_option("--cache", rc_cache, "JSON cache path");

    // fig1-data
    auto* fg = app.add_subcommand("fig1-data", "differences against 1/J (plot data)");
    int fg_Jmax = 20, fg_digits = 10;
    std::string fg_cache;
    CommonOut fg_out;
    fg_out.format = "plot-data";
    fg->add_option("--J-max", fg_Jmax);
    fg->add_option("--digits", fg_digits);
    fg->add_option("--format", fg_out.format)->check(CLI::IsMember({"csv", "json", "plot-data"}));
    fg->add_option("--out", fg_out.out_path);
    fg->add_option("--cache", fg_cache, "JSON cache path");

    // wkb
    auto* wk = app.add_subcommand("wkb", "scaling-limit constants of the boundary");
    double wk_search = 1e-9, wk_quad = 1e-12;
    CommonOut wk_out;
    wk->add_option("--search-tol", wk_search);
    wk->add_option("--quad-tol", wk_quad);
    wk->add_option("--format", wk_out.format)->check(CLI::IsMember({"csv", "json", "plot-data"}));
    wk->add_option("--out", wk_out.out_path);

    // verify
    auto* vf = app.add_subcommand("verify", "run the self-check suite");
    std::string vf_scope = "all";
    vf->add_option("--scope", vf_scope, "spectra | boundary | richardson | wkb | ode | all")
        ->check(CLI::IsMember({"spectra", "boundary", "richardson", "wkb", "ode", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sp))
            return cmd_spectrum(sp_J, sp_variant, sp_a2, sp_a, opt_a2->count() > 0,
                                opt_a->count() > 0, sp_digits, sp_out);
        if (app.got_subcommand(bd)) return cmd_boundary(bd_J, bd_digits, bd_method, bd_out, bd_cache);
        if (app.got_subcommand(t1)) return cmd_table1(t1_Jmax, t1_digits, t1_method, t1_out, t1_cache);
        if (app.got_subcommand(rc)) return cmd_richardson(rc_Jmax, rc_levels, rc_digits, rc_out, rc_cache);
        if (app.got_subcommand(fg)) return cmd_fig1(fg_Jmax, fg_digits, fg_out, fg_cache);
        if (app.got_subcommand(wk)) return cmd_wkb(wk_search, wk_quad, wk_out);
        if (app.got_subcommand(vf)) return cmd_verify(vf_scope);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const qes::Error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    }
    return 2;
}
