#pragma once

#include "vgcdf/series.hpp"
#include "vgcdf/vg_distribution.hpp"

namespace vgcdf {

/// Mean of n independent copies of Z = UV, where (U, V) is a zero-mean bivariate normal
/// vector with standard deviations sigma_u, sigma_v and correlation rho.
/// Requires sigma_u, sigma_v > 0, |rho| < 1, n >= 1.
class ProductNormalParams {
public:
    ProductNormalParams(double sigma_u, double sigma_v, double rho, int n = 1);

    [[nodiscard]] double sigma_u() const noexcept { return sigma_u_; }
    [[nodiscard]] double sigma_v() const noexcept { return sigma_v_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] double s() const noexcept { return sigma_u_ * sigma_v_; }

private:
    double sigma_u_;
    double sigma_v_;
    double rho_;
    int n_;
};

/// VG((n-1)/2, n/(s(1-rho^2)), n rho/(s(1-rho^2)), 0), s = sigma_u sigma_v.
VGParams to_vg(const ProductNormalParams& p);

EvalResult mean_product_cdf_eval(const ProductNormalParams& p, double x,
                                 const SeriesControl& ctl = {});
double mean_product_cdf(const ProductNormalParams& p, double x, const SeriesControl& ctl = {});

/// P(Zbar_n <= 0) = 1/2 - Gamma((n+1)/2)/(sqrt(pi) Gamma(n/2)) rho (1-rho^2)^{n/2}
///                  2F1(1, (n+1)/2; 3/2; rho^2). Does not depend on sigma_u, sigma_v.
double prob_nonpositive(const ProductNormalParams& p, const SeriesControl& ctl = {});

/// 1/2 - arcsin(rho)/pi, the n = 1 case.
double single_product_sign_prob(double rho);

}  // namespace vgcdf
