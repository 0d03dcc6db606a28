#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "selfcheck.hpp"
#include "vgcdf/errors.hpp"
#include "vgcdf/product_normal.hpp"
#include "vgcdf/quadrature_oracle.hpp"
#include "vgcdf/vg_distribution.hpp"

namespace vgcdf::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// printf rounds the exact binary value, ties to even.
std::string format_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// The double nearest the 10-digit decimal, so JSON shows the same digits as text output.
double rounded(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_sig(v).c_str(), nullptr);
}

void emit(std::ostream& out, bool json, const EvalResult& r) {
    if (!json) {
        out << format_sig(r.value) << '\n';
        return;
    }
    ordered_json j;
    j["value"] = rounded(r.value);
    j["abs_err_est"] = rounded(r.abs_err_est);
    j["terms_used"] = r.terms_used;
    j["method"] = std::string(to_string(r.method));
    out << j.dump() << '\n';
}

struct VGFlags {
    double nu = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
};

void add_vg_flags(CLI::App* cmd, VGFlags& f) {
    cmd->add_option("--nu", f.nu, "shape nu > -1/2")->required();
    cmd->add_option("--alpha", f.alpha, "scale alpha > 0")->required();
    cmd->add_option("--beta", f.beta, "skewness, |beta| < alpha")->required();
    cmd->add_option("--mu", f.mu, "location")->capture_default_str();
}

void print_table1(std::ostream& out, bool csv, const SeriesControl& ctl) {
    constexpr double kNu[] = {-0.25, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
    constexpr double kBeta[] = {0.05, 0.1, 0.25, 0.5, 0.75};
    const char* nu_label[] = {"-0.25", "0", "0.5", "1", "2", "3", "5"};
    const char* beta_label[] = {"0.05", "0.1", "0.25", "0.5", "0.75"};

    if (csv) {
        out << "beta";
        for (const char* l : nu_label) out << ",nu_" << l;
        out << '\n';
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%-6s", "beta");
        out << buf;
        for (const char* l : nu_label) {
            std::snprintf(buf, sizeof buf, " %8s", l);
            out << buf;
        }
        out << '\n';
    }
    for (int i = 0; i < 5; ++i) {
        if (csv) {
            out << beta_label[i];
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%-6s", beta_label[i]);
            out << buf;
        }
        for (double nu : kNu) {
            const std::string v = format_fixed4(cdf(VGParams(nu, 1.0, kBeta[i]), 0.0, ctl));
            if (csv) {
                out << ',' << v;
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %8s", v.c_str());
                out << buf;
            }
        }
        out << '\n';
    }
}

int print_selfcheck(std::ostream& out, bool json, const std::vector<FamilyReport>& reports) {
    bool all = true;
    for (const FamilyReport& f : reports) {
        all = all && f.pass;
        if (json) {
            ordered_json j;
            j["family"] = f.family;
            j["max_abs_dev"] = rounded(f.max_abs_dev);
            j["threshold"] = f.threshold;
            j["pass"] = f.pass;
            out << j.dump() << '\n';
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-24s max_abs_dev=%-18s threshold=%-8s %s",
                          f.family.c_str(), format_sig(f.max_abs_dev).c_str(),
                          format_sig(f.threshold).c_str(), f.pass ? "PASS" : "FAIL");
            out << buf << '\n';
        }
    }
    return all ? kOk : kSelfcheckFailed;
}

std::optional<int> max_terms_from_env(std::ostream& err) {
    const char* raw = std::getenv("VG_SERIES_MAX_TERMS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000000) {
        err << "error: VG_SERIES_MAX_TERMS must be an integer in [1, 1000000]\n";
        return -1;
    }
    return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    SeriesControl ctl;
    if (const auto env = max_terms_from_env(err)) {
        if (*env < 0) return kBadParameters;
        ctl.max_terms = *env;
    }

    CLI::App app{"Variance-gamma distribution functions", "vgcdf"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vgcdf 1.0.0");

    VGFlags vg;
    bool json = false;
    std::optional<double> tol;

    auto* cdf_cmd = app.add_subcommand("cdf", "P(X <= x)");
    add_vg_flags(cdf_cmd, vg);
    double x = 0.0;
    std::string formula = "auto";
    cdf_cmd->add_option("--x", x)->required();
    cdf_cmd->add_option("--formula", formula)
        ->check(CLI::IsMember({"auto", "eq1eq2", "eq3", "symmetric"}))
        ->capture_default_str();
    cdf_cmd->add_option("--tol", tol, "relative series tolerance");
    cdf_cmd->add_flag("--json", json);

    auto* pdf_cmd = app.add_subcommand("pdf", "density at x");
    add_vg_flags(pdf_cmd, vg);
    pdf_cmd->add_option("--x", x)->required();
    pdf_cmd->add_flag("--json", json);

    auto* surv_cmd = app.add_subcommand("survival", "P(X > x)");
    add_vg_flags(surv_cmd, vg);
    surv_cmd->add_option("--x", x)->required();
    surv_cmd->add_option("--tol", tol, "relative series tolerance");
    surv_cmd->add_flag("--json", json);

    auto* quant_cmd = app.add_subcommand("quantile", "x with P(X <= x) = q");
    add_vg_flags(quant_cmd, vg);
    double q = 0.5;
    quant_cmd->add_option("--q", q, "probability in (0, 1)")->required();
    quant_cmd->add_flag("--json", json);

    auto* table_cmd = app.add_subcommand("table1", "P(Y <= 0) for Y ~ VG(nu, 1, beta, 0)");
    bool csv = false;
    table_cmd->add_flag("--csv", csv);

    auto* prod_cmd = app.add_subcommand("prodnormal", "mean of n products of correlated normals");
    double rho = 0.0;
    double sigma_u = 1.0;
    double sigma_v = 1.0;
    int n = 1;
    std::optional<double> prod_x;
    bool nonpositive = false;
    prod_cmd->add_option("--rho", rho)->required();
    prod_cmd->add_option("--sigma-u", sigma_u)->capture_default_str();
    prod_cmd->add_option("--sigma-v", sigma_v)->capture_default_str();
    prod_cmd->add_option("--n", n)->capture_default_str();
    auto* x_opt = prod_cmd->add_option("--x", prod_x, "evaluate the CDF at x");
    auto* np_flag = prod_cmd->add_flag("--prob-nonpositive", nonpositive, "P(mean <= 0)");
    x_opt->excludes(np_flag);
    prod_cmd->add_flag("--json", json);

    auto* check_cmd = app.add_subcommand("selfcheck", "cross-check all CDF paths");
    std::string grid = "small";
    double check_tol = 1e-9;
    check_cmd->add_option("--grid", grid)
        ->check(CLI::IsMember({"small", "full"}))
        ->capture_default_str();
    check_cmd->add_option("--tol", check_tol, "oracle-equivalence threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    check_cmd->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadParameters;
    }

    try {
        if (tol) ctl.rel_tol = *tol;
        ctl.validate();

        if (*cdf_cmd) {
            const VGParams p(vg.nu, vg.alpha, vg.beta, vg.mu);
            EvalResult r;
            if (formula == "eq3") {
                r = cdf_eq3_eval(p, x, ctl);
            } else if (formula == "symmetric") {
                r = cdf_symmetric_eval(p, x, ctl);
            } else {
                r = cdf_eval(p, x, ctl);
            }
            emit(out, json, r);
        } else if (*pdf_cmd) {
            const VGParams p(vg.nu, vg.alpha, vg.beta, vg.mu);
            EvalResult r;
            r.value = pdf(p, x);
            emit(out, json, r);
        } else if (*surv_cmd) {
            emit(out, json, survival_eval(VGParams(vg.nu, vg.alpha, vg.beta, vg.mu), x, ctl));
        } else if (*quant_cmd) {
            EvalResult r;
            r.value = quantile(VGParams(vg.nu, vg.alpha, vg.beta, vg.mu), q, ctl);
            r.method = Method::RootFinding;
            emit(out, json, r);
        } else if (*table_cmd) {
            print_table1(out, csv, ctl);
        } else if (*prod_cmd) {
            if (prod_x.has_value() == nonpositive) {
                err << "error: give exactly one of --x and --prob-nonpositive\n";
                return kBadParameters;
            }
            const ProductNormalParams p(sigma_u, sigma_v, rho, n);
            if (nonpositive) {
                EvalResult r;
                r.value = prob_nonpositive(p, ctl);
                emit(out, json, r);
            } else {
                emit(out, json, mean_product_cdf_eval(p, *prod_x, ctl));
            }
        } else if (*check_cmd) {
            const Grid g = grid == "full" ? Grid::Full : Grid::Small;
            return print_selfcheck(out, json, run_selfcheck(g, check_tol, ctl));
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kBadParameters;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadParameters;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const std::exception& e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return kNoConvergence;
    }
    return kOk;
}

}  // namespace vgcdf::cli
