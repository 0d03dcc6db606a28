#pragma once

#include "vgcdf/series.hpp"

namespace vgcdf {

/// ln Gamma(x) for x > 0. Thread-safe (does not touch the global signgam).
double log_gamma(double x);

/// Modified Bessel function of the second kind K_order(x), x > 0.
///
/// With `scaled` set the result is e^x K_order(x), which stays finite for large x.
/// The fractional part of the order is handled by Temme's series (x <= 2) or Steed's
/// continued fraction (x > 2); integer steps use the forward recurrence, which is
/// stable for K. Negative orders use K_{-v} = K_v.
///
/// Throws DomainError for x <= 0 and OverflowError when the requested form is not
/// representable (tiny x with large order).
EvalResult bessel_k(double order, double x, bool scaled = false);

/// K_{m+1/2}(x) from the finite elementary sum; exact up to rounding.
EvalResult bessel_k_half_integer(int m, double x, bool scaled = false);

/// Gamma-normalised modified Lommel function of the first kind,
///
///   t~_{mu,nu}(x) = sum_k (x/2)^{mu+2k+1} / (Gamma(k + (mu-nu+3)/2) Gamma(k + (mu+nu+3)/2)).
///
/// With `scaled` set the result is e^{-x} t~_{mu,nu}(x). The series is summed outward
/// from its largest term in log space, so the scaled form stays finite for x up to 1e4.
EvalResult modified_lommel_tilde(double mu_order, double nu_order, double x, bool scaled = false,
                                 const SeriesControl& ctl = {});

/// Modified Struve function L_nu(x) = t~_{nu,nu}(x) (e^{-x} L_nu(x) when scaled).
EvalResult modified_struve_l(double nu_order, double x, bool scaled = false,
                             const SeriesControl& ctl = {});

/// 2F1(1, nu+1; 3/2; z) for 0 <= z < 1, nu > -1/2.
///
/// Power series for z <= 0.95; above that, Euler's transformation combined with the
/// incomplete-beta representation evaluated at 1 - z.
EvalResult hyp2f1_one(double nu_order, double z, const SeriesControl& ctl = {});

/// Regularised incomplete beta I_x(a, b), a, b > 0, 0 <= x <= 1 (continued fraction).
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace vgcdf
