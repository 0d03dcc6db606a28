#include "vgcdf/g_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "vgcdf/detail/gauss_kronrod.hpp"
#include "vgcdf/errors.hpp"
#include "vgcdf/special_functions.hpp"

namespace vgcdf {

namespace {

constexpr double kClampSlack = 1e-12;

// Rounding noise may push a kernel marginally outside [0, 1]; anything larger is a bug.
double clamp_unit(double v, EvalResult& r, const char* who) {
    if (v >= 0.0 && v <= 1.0) return v;
    if (v < 0.0 && v >= -kClampSlack) {
        ++r.clamp_events;
        return 0.0;
    }
    if (v > 1.0 && v <= 1.0 + kClampSlack) {
        ++r.clamp_events;
        return 1.0;
    }
    throw InvariantError(std::string(who) + ": kernel value " + std::to_string(v) +
                         " outside [0, 1]");
}

EvalResult tail_quadrature(const KernelArgs& args, const SeriesControl& ctl) {
    const double mu = args.mu_order;
    const double nu = args.nu_order;
    const double x = args.x;
    const double log_norm = log_kernel_normalizer(mu, nu);

    // t = x + u; the integrand t^mu e^t K_nu(t) e^{-x-u} / P is formed in log space.
    auto integrand = [&](double u) {
        const double t = x + u;
        const double log_f = mu * std::log(t) + std::log(bessel_k(nu, t, true).value) - x - u -
                             log_norm;
        return std::exp(log_f);
    };

    const double digits = std::clamp(-std::log10(ctl.rel_tol), 1.0, 17.0);
    const double width = std::sqrt(std::max(mu, 0.0) + 1.0);
    const double u_peak = std::max(0.0, mu - x);
    const double u_max = u_peak + 50.0 + 10.0 * std::numbers::ln10 * digits + 10.0 * width;

    std::vector<double> pts{0.0, u_max};
    for (double u = 1.0; u < u_max; u *= 2.0) pts.push_back(u);
    for (double off : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
        const double u = u_peak + off * width;
        if (u > 0.0 && u < u_max) pts.push_back(u);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const double rel = std::max(ctl.rel_tol, 1e-13);
    const detail::QuadratureResult q = detail::integrate_adaptive(integrand, pts, ctl.abs_tol, rel);
    if (!q.converged) {
        throw ConvergenceError("g_upper: tail quadrature did not reach tolerance (estimate " +
                               std::to_string(q.abs_err) + ")");
    }
    EvalResult r;
    r.value = clamp_unit(q.value, r, "g_upper");
    r.abs_err_est = q.abs_err;
    r.terms_used = q.evaluations;
    r.method = Method::TailQuadrature;
    return r;
}

}  // namespace

void KernelArgs::validate() const {
    if (!std::isfinite(mu_order) || !std::isfinite(nu_order) || !std::isfinite(x)) {
        throw DomainError("kernel: arguments must be finite");
    }
    if (!(nu_order > -0.5)) throw DomainError("kernel: require nu > -1/2");
    if (!(mu_order >= nu_order)) throw DomainError("kernel: require mu >= nu");
    if (!(x > 0.0)) throw DomainError("kernel: require x > 0");
}

double log_kernel_normalizer(double mu_order, double nu_order) {
    return (mu_order - 1.0) * std::numbers::ln2 + log_gamma(0.5 * (mu_order - nu_order + 1.0)) +
           log_gamma(0.5 * (mu_order + nu_order + 1.0));
}

namespace detail {

ScaledBesselPair scaled_bessel_pair(double nu_order, double x) {
    return {bessel_k(nu_order, x, true).value, bessel_k(nu_order - 1.0, x, true).value};
}

EvalResult g_lower_with(const KernelArgs& args, const ScaledBesselPair& k,
                        const SeriesControl& ctl) {
    // For mu >= nu > -1/2 the shifted Lommel parameters (mu-nu+3)/2 >= 3/2 and
    // (mu+nu+1)/2 > 0 stay clear of the Gamma poles.
    const EvalResult shifted = modified_lommel_tilde(args.mu_order - 1.0, args.nu_order - 1.0,
                                                     args.x, true, ctl);
    const EvalResult plain = modified_lommel_tilde(args.mu_order, args.nu_order, args.x, true, ctl);
    const double a = k.k_nu * shifted.value;
    const double b = k.k_nu_minus_1 * plain.value;
    EvalResult r;
    r.value = clamp_unit(args.x * (a + b), r, "g_lower");
    r.terms_used = shifted.terms_used + plain.terms_used;
    r.abs_err_est = args.x * (k.k_nu * shifted.abs_err_est + k.k_nu_minus_1 * plain.abs_err_est) +
                    8.0 * std::numeric_limits<double>::epsilon() * r.value;
    r.method = Method::LowerKernelSeries;
    return r;
}

EvalResult g_upper_with(const KernelArgs& args, const ScaledBesselPair& k,
                        const SeriesControl& ctl) {
    // Below the mode of t^mu K_nu(t) the lower kernel is the small one even for large x.
    if (args.x <= kKernelSwitch || args.x < args.mu_order) {
        const EvalResult lower = g_lower_with(args, k, ctl);
        if (lower.value <= 0.5) {
            EvalResult r = lower;
            r.value = 1.0 - lower.value;
            r.method = Method::ComplementOfLower;
            return r;
        }
    }
    return tail_quadrature(args, ctl);
}

}  // namespace detail

EvalResult g_lower(const KernelArgs& args, const SeriesControl& ctl) {
    args.validate();
    ctl.validate();
    return detail::g_lower_with(args, detail::scaled_bessel_pair(args.nu_order, args.x), ctl);
}

EvalResult g_upper(const KernelArgs& args, const SeriesControl& ctl) {
    args.validate();
    ctl.validate();
    if (args.x > kKernelSwitch && args.x >= args.mu_order) return tail_quadrature(args, ctl);
    return detail::g_upper_with(args, detail::scaled_bessel_pair(args.nu_order, args.x), ctl);
}

EvalResult incomplete_bessel_integral(double mu_order, double nu_order, double scale_a, double x,
                                      IntegralSide side, const SeriesControl& ctl) {
    if (!(scale_a > 0.0) || !std::isfinite(scale_a)) {
        throw DomainError("incomplete_bessel_integral: require a > 0");
    }
    const KernelArgs args{mu_order, nu_order, scale_a * x};
    const EvalResult kernel = side == IntegralSide::Lower ? g_lower(args, ctl) : g_upper(args, ctl);
    const double log_prefactor = log_kernel_normalizer(mu_order, nu_order) -
                                 (mu_order + 1.0) * std::log(scale_a);
    const double prefactor = std::exp(log_prefactor);
    if (!std::isfinite(prefactor)) {
        throw OverflowError("incomplete_bessel_integral: prefactor overflows");
    }
    EvalResult r = kernel;
    r.value = prefactor * kernel.value;
    r.abs_err_est = prefactor * kernel.abs_err_est;
    return r;
}

}  // namespace vgcdf
