#pragma once

#include "vgcdf/series.hpp"

namespace vgcdf {

/// Parameters (nu, alpha, beta, mu) of the variance-gamma law with density
///
///   p(x) = M e^{beta (x-mu)} |x-mu|^nu K_nu(alpha |x-mu|).
///
/// Validated on construction: nu > -1/2, 0 <= |beta| < alpha, all finite.
class VGParams {
public:
    VGParams(double nu, double alpha, double beta, double mu_loc = 0.0);

    [[nodiscard]] double nu() const noexcept { return nu_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double mu_loc() const noexcept { return mu_loc_; }

    friend bool operator==(const VGParams&, const VGParams&) = default;

private:
    double nu_;
    double alpha_;
    double beta_;
    double mu_loc_;
};

/// M = (alpha^2 - beta^2)^{nu+1/2} / (sqrt(pi) (2 alpha)^nu Gamma(nu+1/2)).
double normalizing_constant(const VGParams& p);
double log_normalizing_constant(const VGParams& p);

/// Density at x. At x = mu the density is finite only for nu > 0; for nu <= 0 this
/// returns +infinity (see density_unbounded_at_location).
double pdf(const VGParams& p, double x);
[[nodiscard]] bool density_unbounded_at_location(const VGParams& p) noexcept;

/// P(X <= x) from the G~ series: 1 - S for x >= mu, the alternating-sign form left of mu.
/// When that alternating sum cancels (beta > 0, deep left tail) the tail is integrated
/// from the density instead; `method` reports which path ran.
EvalResult cdf_eval(const VGParams& p, double x, const SeriesControl& ctl = {});
double cdf(const VGParams& p, double x, const SeriesControl& ctl = {});

/// P(X <= x) from the all-x series in G with sgn(x - mu), anchored at P(X <= mu).
/// Independent of cdf_eval apart from the shared special functions.
EvalResult cdf_eq3_eval(const VGParams& p, double x, const SeriesControl& ctl = {});
double cdf_eq3(const VGParams& p, double x, const SeriesControl& ctl = {});

/// P(X > x). For x >= mu the G~ series is summed directly, so the right tail keeps its
/// relative accuracy: for beta >= 0 the terms are all positive, and for beta < 0 a sum
/// that loses digits to cancellation is replaced by quadrature of the density tail.
EvalResult survival_eval(const VGParams& p, double x, const SeriesControl& ctl = {});
double survival(const VGParams& p, double x, const SeriesControl& ctl = {});

/// P(X <= mu) = 1/2 - Gamma(nu+1)/(sqrt(pi) Gamma(nu+1/2)) (beta/alpha)
///              (1 - beta^2/alpha^2)^{nu+1/2} 2F1(1, nu+1; 3/2; beta^2/alpha^2).
double prob_at_most_location(const VGParams& p, const SeriesControl& ctl = {});

/// beta = 0 only: 1/2 + (alpha (x-mu)/2) [K_nu L_{nu-1} + L_nu K_{nu-1}](alpha |x-mu|).
EvalResult cdf_symmetric_eval(const VGParams& p, double x, const SeriesControl& ctl = {});
double cdf_symmetric(const VGParams& p, double x, const SeriesControl& ctl = {});

/// x with |cdf(p, x) - q| <= 1e-12, 0 < q < 1.
double quantile(const VGParams& p, double q, const SeriesControl& ctl = {});

/// Law of -X: (nu, alpha, -beta, -mu).
VGParams reflect(const VGParams& p);

namespace detail {

// ln[(1/k!) r^k Gamma((k+1)/2) Gamma(nu + (k+1)/2)] with r = 2|beta|/alpha, given ln r.
double log_series_coefficient(double nu, double log_two_ratio, int k);

// ln of C = (1 - beta^2/alpha^2)^{nu+1/2} / (2 sqrt(pi) Gamma(nu+1/2)).
double log_series_prefactor(const VGParams& p);

// Density at mu + d, taking the offset directly so tiny |d| keeps full precision.
double pdf_at_offset(const VGParams& p, double d);

// The x >= mu series (side = +1) or the x < mu series (side = -1) summed at x = mu itself,
// where every kernel equals one. Both must reproduce prob_at_most_location.
EvalResult location_limit(const VGParams& p, int side, const SeriesControl& ctl = {});

}  // namespace detail

}  // namespace vgcdf
