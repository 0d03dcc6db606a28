#include "vgcdf/product_normal.hpp"

#include <cmath>
#include <numbers>

#include "vgcdf/errors.hpp"
#include "vgcdf/special_functions.hpp"

namespace vgcdf {

ProductNormalParams::ProductNormalParams(double sigma_u, double sigma_v, double rho, int n)
    : sigma_u_(sigma_u), sigma_v_(sigma_v), rho_(rho), n_(n) {
    if (!(sigma_u > 0.0) || !std::isfinite(sigma_u) || !(sigma_v > 0.0) ||
        !std::isfinite(sigma_v)) {
        throw ParameterError("require sigma_u > 0 and sigma_v > 0");
    }
    if (!(std::abs(rho) < 1.0)) throw ParameterError("require |rho| < 1");
    if (n < 1) throw ParameterError("require n >= 1");
}

VGParams to_vg(const ProductNormalParams& p) {
    const double n = p.n();
    const double denom = p.s() * (1.0 - p.rho()) * (1.0 + p.rho());
    return {0.5 * (n - 1.0), n / denom, n * p.rho() / denom, 0.0};
}

EvalResult mean_product_cdf_eval(const ProductNormalParams& p, double x,
                                 const SeriesControl& ctl) {
    return cdf_eval(to_vg(p), x, ctl);
}

double mean_product_cdf(const ProductNormalParams& p, double x, const SeriesControl& ctl) {
    return mean_product_cdf_eval(p, x, ctl).value;
}

double prob_nonpositive(const ProductNormalParams& p, const SeriesControl& ctl) {
    const double rho = p.rho();
    if (rho == 0.0) return 0.5;
    const double n = p.n();
    const double log_factor = log_gamma(0.5 * (n + 1.0)) - 0.5 * std::log(std::numbers::pi) -
                              log_gamma(0.5 * n) + 0.5 * n * std::log1p(-rho * rho);
    return 0.5 - std::exp(log_factor) * rho * hyp2f1_one(0.5 * (n - 1.0), rho * rho, ctl).value;
}

double single_product_sign_prob(double rho) {
    if (!(std::abs(rho) < 1.0)) throw DomainError("single_product_sign_prob: require |rho| < 1");
    return 0.5 - std::asin(rho) / std::numbers::pi;
}

}  // namespace vgcdf
