#include "vgcdf/vg_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "vgcdf/detail/gauss_kronrod.hpp"
#include "vgcdf/errors.hpp"
#include "vgcdf/g_kernels.hpp"
#include "vgcdf/special_functions.hpp"

namespace vgcdf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRangeSlack = 1e-12;
constexpr int kExtendedTermCap = 20000;

enum class Kernel { Upper, Lower };

struct SeriesSum {
    double sum = 0.0;
    double abs_err = 0.0;
    int terms = 0;
    int clamp_events = 0;
    int term_cap_raises = 0;
    double max_term = 0.0;
};

// sum_k C s^k |c_k| K_k(y), where c_k is the k-th series coefficient, s = step_sign,
// and K_k is G~_{nu+k,nu}(y) or G_{nu+k,nu}(y).
//
// Truncation: once the coefficient ratio c_{k+2}/c_k = z (2nu+k+1)/(k+2) stays below one,
// the remainder is bounded by (|c_{k+1}| + |c_{k+2}|) * kernel_bound / (1 - r); the sum
// stops when that bound is negligible for two consecutive k. G~ <= 1 and G_k decreases
// in k, which gives the kernel bound.
SeriesSum kernel_series(const VGParams& p, double y, Kernel kernel, int step_sign,
                        const SeriesControl& ctl) {
    const double nu = p.nu();
    const double ratio = std::abs(p.beta()) / p.alpha();
    const double z = ratio * ratio;
    const double log_c = detail::log_series_prefactor(p);
    const int sign = (p.beta() < 0.0 ? -1 : 1) * step_sign;

    detail::ScaledBesselPair bessel{};
    if (y > 0.0) bessel = detail::scaled_bessel_pair(nu, y);

    auto kernel_at = [&](int k) -> EvalResult {
        if (y == 0.0) {
            EvalResult r;
            r.value = kernel == Kernel::Upper ? 1.0 : 0.0;
            return r;
        }
        const KernelArgs args{nu + k, nu, y};
        return kernel == Kernel::Upper ? detail::g_upper_with(args, bessel, ctl)
                                       : detail::g_lower_with(args, bessel, ctl);
    };

    SeriesSum out;
    if (p.beta() == 0.0) {
        const EvalResult g = kernel_at(0);
        const double c0 = std::exp(log_c + detail::log_series_coefficient(nu, 0.0, 0));
        out.sum = c0 * g.value;
        out.max_term = out.sum;
        out.abs_err = c0 * g.abs_err_est;
        out.terms = 1;
        out.clamp_events = g.clamp_events;
        return out;
    }

    const double log_two_ratio = std::log(2.0 * ratio);
    const double k_min = (z * (2.0 * nu + 1.0) - 2.0) / (1.0 - z);
    double kernel_bound = 1.0;
    int cap = ctl.max_terms;
    int quiet = 0;
    for (int k = 0;; ++k) {
        const EvalResult g = kernel_at(k);
        const double coef = std::exp(log_c + detail::log_series_coefficient(nu, log_two_ratio, k));
        const double signed_coef = (sign < 0 && (k % 2 == 1)) ? -coef : coef;
        out.sum += signed_coef * g.value;
        out.max_term = std::max(out.max_term, coef * g.value);
        out.abs_err += coef * g.abs_err_est;
        out.clamp_events += g.clamp_events;
        ++out.terms;
        if (kernel == Kernel::Lower) kernel_bound = g.value;

        if (k > k_min) {
            const double r = z * std::max(1.0, (2.0 * nu + k + 2.0) / (k + 3.0));
            const double next =
                std::exp(log_c + detail::log_series_coefficient(nu, log_two_ratio, k + 1)) +
                std::exp(log_c + detail::log_series_coefficient(nu, log_two_ratio, k + 2));
            const double remainder = next * kernel_bound / (1.0 - r);
            quiet = ctl.negligible(remainder, out.sum) ? quiet + 1 : 0;
            if (quiet >= 2) {
                out.abs_err += remainder;
                break;
            }
        }
        if (out.terms >= cap) {
            if (cap >= kExtendedTermCap) {
                throw ConvergenceError("variance-gamma series: no convergence after " +
                                       std::to_string(out.terms) + " terms");
            }
            cap = kExtendedTermCap;
            ++out.term_cap_raises;
        }
    }
    // Rounding grows with the largest term, which exceeds the sum when the signs alternate.
    out.abs_err += out.terms * kEps * std::max(std::abs(out.sum), out.max_term);
    return out;
}

// Alternating tail sums (beta < 0 right of mu, beta > 0 left of it) cancel when the tail is
// much lighter than e^{-alpha |x - mu|}. Past this relative error the tail is integrated.
constexpr double kTailCancellation = 1e-11;

// P(X - mu > d0), d0 > 0, by quadrature of the density relative to its value at d0.
EvalResult right_tail_quadrature(const VGParams& p, double d0, const SeriesControl& ctl) {
    const double nu = p.nu();
    auto log_shape = [&](double d) {
        return (p.beta() - p.alpha()) * d + nu * std::log(d) +
               std::log(bessel_k(nu, p.alpha() * d, true).value);
    };
    const double ref = log_shape(d0);
    auto integrand = [&](double u) { return std::exp(log_shape(d0 + u) - ref); };

    // The shape behaves like d^{nu-1/2} e^{-rate d}.
    const double rate = p.alpha() - p.beta();
    const double u_peak = std::max(0.0, (nu - 0.5) / rate - d0);
    const double u_max = u_peak + (80.0 + 10.0 * std::sqrt(std::abs(nu) + 1.0)) / rate;
    std::vector<double> pts{0.0, u_max};
    for (double u = 1.0 / rate; u < u_max; u *= 2.0) pts.push_back(u);
    if (u_peak > 0.0) pts.push_back(u_peak);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const detail::QuadratureResult q =
        detail::integrate_adaptive(integrand, pts, 0.0, std::max(ctl.rel_tol, 1e-13));
    if (!q.converged) throw ConvergenceError("tail quadrature did not reach tolerance");
    const double scale = std::exp(log_normalizing_constant(p) + ref);
    EvalResult r;
    r.value = scale * q.value;
    r.abs_err_est = scale * q.abs_err;
    r.terms_used = q.evaluations;
    r.method = Method::TailQuadrature;
    return r;
}

double checked_probability(double v, EvalResult& r, const char* who) {
    if (!(v >= -kRangeSlack && v <= 1.0 + kRangeSlack)) {
        throw InvariantError(std::string(who) + ": value " + std::to_string(v) +
                             " outside [0, 1]");
    }
    if (v < 0.0 || v > 1.0) {
        ++r.clamp_events;
        return std::clamp(v, 0.0, 1.0);
    }
    return v;
}

EvalResult to_result(const SeriesSum& s, double value, Method method) {
    EvalResult r;
    r.value = value;
    r.abs_err_est = s.abs_err;
    r.terms_used = s.terms;
    r.method = method;
    r.clamp_events = s.clamp_events;
    r.term_cap_raises = s.term_cap_raises;
    return r;
}

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": x must be finite");
}

}  // namespace

VGParams::VGParams(double nu, double alpha, double beta, double mu_loc)
    : nu_(nu), alpha_(alpha), beta_(beta), mu_loc_(mu_loc) {
    if (!std::isfinite(nu) || !std::isfinite(alpha) || !std::isfinite(beta) ||
        !std::isfinite(mu_loc)) {
        throw ParameterError("require finite nu, alpha, beta, mu");
    }
    if (!(nu > -0.5)) throw ParameterError("require nu > -1/2");
    if (!(std::abs(beta) < alpha)) throw ParameterError("require 0 <= |beta| < alpha");
}

namespace detail {

double log_series_coefficient(double nu, double log_two_ratio, int k) {
    const double kk = k;
    const double power = k == 0 ? 0.0 : kk * log_two_ratio;
    return power - log_gamma(kk + 1.0) + log_gamma(0.5 * (kk + 1.0)) +
           log_gamma(nu + 0.5 * (kk + 1.0));
}

double log_series_prefactor(const VGParams& p) {
    const double ratio = p.beta() / p.alpha();
    return (p.nu() + 0.5) * std::log1p(-ratio * ratio) - std::numbers::ln2 -
           0.5 * std::log(std::numbers::pi) - log_gamma(p.nu() + 0.5);
}

}  // namespace detail

double log_normalizing_constant(const VGParams& p) {
    const double a = p.alpha();
    const double b = p.beta();
    return (p.nu() + 0.5) * std::log((a - b) * (a + b)) - 0.5 * std::log(std::numbers::pi) -
           p.nu() * std::log(2.0 * a) - log_gamma(p.nu() + 0.5);
}

double normalizing_constant(const VGParams& p) { return std::exp(log_normalizing_constant(p)); }

bool density_unbounded_at_location(const VGParams& p) noexcept { return p.nu() <= 0.0; }

namespace detail {

double pdf_at_offset(const VGParams& p, double d) {
    const double log_m = log_normalizing_constant(p);
    // |d|^nu K_nu(alpha |d|) -> 2^{nu-1} Gamma(nu) / alpha^nu as d -> 0 (nu > 0)
    auto log_limit_at_location = [&]() {
        return log_m + (p.nu() - 1.0) * std::numbers::ln2 + log_gamma(p.nu()) -
               p.nu() * std::log(p.alpha());
    };
    if (d == 0.0) {
        if (density_unbounded_at_location(p)) return std::numeric_limits<double>::infinity();
        return std::exp(log_limit_at_location());
    }
    const double ad = std::abs(d);
    const double y = p.alpha() * ad;
    try {
        const double k_scaled = bessel_k(p.nu(), y, true).value;
        // e^{beta d} K_nu(y) = e^{beta d - y} e^y K_nu(y); the fused exponent is <= 0.
        return std::exp(log_m + (p.beta() * d - y) + p.nu() * std::log(ad) + std::log(k_scaled));
    } catch (const OverflowError&) {
        if (p.nu() > 0.0) return std::exp(log_limit_at_location() + p.beta() * d);
        return std::numeric_limits<double>::infinity();
    }
}

EvalResult location_limit(const VGParams& p, int side, const SeriesControl& ctl) {
    ctl.validate();
    if (side > 0) {
        const SeriesSum s = kernel_series(p, 0.0, Kernel::Upper, 1, ctl);
        EvalResult r = to_result(s, 0.0, Method::SurvivalSeries);
        r.value = checked_probability(1.0 - s.sum, r, "location_limit");
        return r;
    }
    const SeriesSum s = kernel_series(p, 0.0, Kernel::Upper, -1, ctl);
    EvalResult r = to_result(s, 0.0, Method::LeftTailSeries);
    r.value = checked_probability(s.sum, r, "location_limit");
    return r;
}

}  // namespace detail

double pdf(const VGParams& p, double x) {
    require_finite(x, "pdf");
    return detail::pdf_at_offset(p, x - p.mu_loc());
}

EvalResult cdf_eval(const VGParams& p, double x, const SeriesControl& ctl) {
    require_finite(x, "cdf");
    ctl.validate();
    const double d = x - p.mu_loc();
    const double y = p.alpha() * std::abs(d);
    if (d >= 0.0) {
        const SeriesSum s = kernel_series(p, y, Kernel::Upper, 1, ctl);
        if (d > 0.0 && s.abs_err > kTailCancellation * std::abs(s.sum)) {
            EvalResult r = right_tail_quadrature(p, d, ctl);
            r.value = checked_probability(1.0 - r.value, r, "cdf");
            return r;
        }
        EvalResult r = to_result(s, 0.0, Method::SurvivalSeries);
        r.value = checked_probability(1.0 - s.sum, r, "cdf");
        return r;
    }
    const SeriesSum s = kernel_series(p, y, Kernel::Upper, -1, ctl);
    if (s.abs_err > kTailCancellation * std::abs(s.sum)) {
        EvalResult r = right_tail_quadrature(reflect(p), -d, ctl);
        r.value = checked_probability(r.value, r, "cdf");
        return r;
    }
    EvalResult r = to_result(s, 0.0, Method::LeftTailSeries);
    r.value = checked_probability(s.sum, r, "cdf");
    return r;
}

double cdf(const VGParams& p, double x, const SeriesControl& ctl) {
    return cdf_eval(p, x, ctl).value;
}

EvalResult survival_eval(const VGParams& p, double x, const SeriesControl& ctl) {
    require_finite(x, "survival");
    ctl.validate();
    const double d = x - p.mu_loc();
    if (d >= 0.0) {
        const SeriesSum s = kernel_series(p, p.alpha() * d, Kernel::Upper, 1, ctl);
        if (d > 0.0 && s.abs_err > kTailCancellation * std::abs(s.sum)) {
            EvalResult r = right_tail_quadrature(p, d, ctl);
            r.value = checked_probability(r.value, r, "survival");
            return r;
        }
        EvalResult r = to_result(s, 0.0, Method::SurvivalSeries);
        r.value = checked_probability(s.sum, r, "survival");
        return r;
    }
    EvalResult r = cdf_eval(p, x, ctl);
    r.value = 1.0 - r.value;
    return r;
}

double survival(const VGParams& p, double x, const SeriesControl& ctl) {
    return survival_eval(p, x, ctl).value;
}

double prob_at_most_location(const VGParams& p, const SeriesControl& ctl) {
    if (p.beta() == 0.0) return 0.5;
    const double ratio = p.beta() / p.alpha();
    const double z = ratio * ratio;
    const double log_factor = log_gamma(p.nu() + 1.0) - 0.5 * std::log(std::numbers::pi) -
                              log_gamma(p.nu() + 0.5) + (p.nu() + 0.5) * std::log1p(-z);
    const double skew = std::exp(log_factor) * ratio * hyp2f1_one(p.nu(), z, ctl).value;
#ifdef VGCDF_INJECT_S2_SIGN_FAULT
    return 0.5 + skew;
#else
    return 0.5 - skew;
#endif
}

EvalResult cdf_eq3_eval(const VGParams& p, double x, const SeriesControl& ctl) {
    require_finite(x, "cdf_eq3");
    ctl.validate();
    const double base = prob_at_most_location(p, ctl);
    const double d = x - p.mu_loc();
    if (d == 0.0) {
        EvalResult r;
        r.value = base;
        r.method = Method::SignedKernelSeries;
        return r;
    }
    // sgn(d)^{k+1} sgn(beta)^k = sgn(d) * (sgn(d) sgn(beta))^k
    const int s = d > 0.0 ? 1 : -1;
    const SeriesSum sum = kernel_series(p, p.alpha() * std::abs(d), Kernel::Lower, s, ctl);
    EvalResult r = to_result(sum, 0.0, Method::SignedKernelSeries);
    r.value = checked_probability(base + s * sum.sum, r, "cdf_eq3");
    return r;
}

double cdf_eq3(const VGParams& p, double x, const SeriesControl& ctl) {
    return cdf_eq3_eval(p, x, ctl).value;
}

EvalResult cdf_symmetric_eval(const VGParams& p, double x, const SeriesControl& ctl) {
    require_finite(x, "cdf_symmetric");
    if (p.beta() != 0.0) throw ParameterError("cdf_symmetric: require beta = 0");
    const double d = x - p.mu_loc();
    EvalResult r;
    r.method = Method::StruveForm;
    if (d == 0.0) {
        r.value = 0.5;
        return r;
    }
    const double y = p.alpha() * std::abs(d);
    const double nu = p.nu();
    const EvalResult k_nu = bessel_k(nu, y, true);
    const EvalResult k_nu1 = bessel_k(nu - 1.0, y, true);
    const EvalResult l_nu = modified_struve_l(nu, y, true, ctl);
    const EvalResult l_nu1 = modified_struve_l(nu - 1.0, y, true, ctl);
    const double g = y * (k_nu.value * l_nu1.value + l_nu.value * k_nu1.value);
    r.terms_used = l_nu.terms_used + l_nu1.terms_used;
    r.abs_err_est = 0.5 * y * (k_nu.value * l_nu1.abs_err_est + k_nu1.value * l_nu.abs_err_est);
    r.value = checked_probability(0.5 + (d > 0.0 ? 0.5 : -0.5) * g, r, "cdf_symmetric");
    return r;
}

double cdf_symmetric(const VGParams& p, double x, const SeriesControl& ctl) {
    return cdf_symmetric_eval(p, x, ctl).value;
}

double quantile(const VGParams& p, double q, const SeriesControl& ctl) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile: require 0 < q < 1");
    const double mu = p.mu_loc();
    if (p.beta() == 0.0 && q == 0.5) return mu;

    auto f = [&](double x) { return cdf(p, x, ctl) - q; };

    // Both tails decay at least like e^{-(alpha - |beta|) |x - mu|}; step outward on that
    // scale, doubling until the target is bracketed.
    const double scale = 1.0 / (p.alpha() - std::abs(p.beta()));
    double lo = mu;
    double hi = mu;
    double f_lo = f(mu);
    double f_hi = f_lo;
    if (f_lo == 0.0) return mu;
    double step = scale;
    if (f_lo > 0.0) {
        for (int i = 0; f_lo > 0.0; ++i) {
            if (i > 60) throw ConvergenceError("quantile: could not bracket the lower tail");
            hi = lo;
            f_hi = f_lo;
            lo = mu - step;
            f_lo = f(lo);
            step *= 2.0;
        }
    } else {
        for (int i = 0; f_hi < 0.0; ++i) {
            if (i > 60) throw ConvergenceError("quantile: could not bracket the upper tail");
            lo = hi;
            f_lo = f_hi;
            hi = mu + step;
            f_hi = f(hi);
            step *= 2.0;
        }
    }
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;

    // Illinois-modified false position, with bisection whenever a side stagnates.
    int stale_side = 0;
    int stale_count = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const double width = hi - lo;
        if (width <= 4.0 * kEps * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
        double x = lo - f_lo * width / (f_hi - f_lo);
        if (!(x > lo && x < hi) || stale_count >= 3) {
            x = 0.5 * (lo + hi);
            stale_count = 0;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
            if (stale_side == -1) {
                f_hi *= 0.5;
                ++stale_count;
            } else {
                stale_count = 0;
            }
            stale_side = -1;
        } else {
            hi = x;
            f_hi = fx;
            if (stale_side == 1) {
                f_lo *= 0.5;
                ++stale_count;
            } else {
                stale_count = 0;
            }
            stale_side = 1;
        }
        if (iter == 199) throw ConvergenceError("quantile: no convergence after 200 iterations");
    }
    // f_lo / f_hi may have been halved; report the end point with the smaller true residual.
    const double r_lo = std::abs(f(lo));
    const double r_hi = std::abs(f(hi));
    const double x = r_lo <= r_hi ? lo : hi;
    if (std::min(r_lo, r_hi) > 1e-12) {
        throw ConvergenceError("quantile: residual above 1e-12");
    }
    return x;
}

VGParams reflect(const VGParams& p) { return {p.nu(), p.alpha(), -p.beta(), -p.mu_loc()}; }

}  // namespace vgcdf
