#pragma once

#include "vgcdf/series.hpp"
#include "vgcdf/vg_distribution.hpp"

namespace vgcdf {

/// int_a^b of the VG density by adaptive quadrature, absolute error <= tol.
///
/// Either endpoint may be infinite. The range is split at mu; the piece next to mu is
/// handled by double-exponential (tanh-sinh) quadrature, which absorbs the |x-mu|^{2nu}
/// singularity for nu < 0, and the remainder by Gauss-Kronrod. Infinite ends are cut where
/// the log-density falls below ln(tol) - 40.
///
/// Uses only the density (and through it K_nu); never the series of the CDF.
/// Throws ConvergenceError, with the achieved error, when tol is not met.
EvalResult integrate_pdf(const VGParams& p, double a, double b, double tol = 1e-13);

/// P(X <= x): integrates (-inf, x] left of mu and returns 1 - int_x^inf otherwise.
EvalResult cdf_by_quadrature(const VGParams& p, double x, double tol = 1e-13);

}  // namespace vgcdf
