#pragma once

#include "vgcdf/series.hpp"

namespace vgcdf {

/// Orders and argument of the normalised incomplete Bessel integrals
///
///   G_{mu,nu}(x)  = int_0^x t^mu K_nu(t) dt / P_{mu,nu},
///   G~_{mu,nu}(x) = int_x^inf t^mu K_nu(t) dt / P_{mu,nu} = 1 - G_{mu,nu}(x),
///
/// with P_{mu,nu} = 2^{mu-1} Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2).
/// Requires mu_order >= nu_order > -1/2 and x > 0.
struct KernelArgs {
    double mu_order;
    double nu_order;
    double x;

    void validate() const;
};

/// Argument above which g_upper integrates the tail directly unless x < mu.
inline constexpr double kKernelSwitch = 30.0;

/// G_{mu,nu}(x) = x (K_nu(x) t~_{mu-1,nu-1}(x) + K_{nu-1}(x) t~_{mu,nu}(x)),
/// evaluated as products of e^x K and e^{-x} t~ so the exponentials cancel.
EvalResult g_lower(const KernelArgs& args, const SeriesControl& ctl = {});

/// G~_{mu,nu}(x) = 1 - G_{mu,nu}(x) with full relative accuracy when it is small.
///
/// Uses 1 - G when (x <= kKernelSwitch or x < mu) and G <= 1/2; otherwise integrates
/// t^mu K_nu(t) over [x, inf) with the exponential factored out.
EvalResult g_upper(const KernelArgs& args, const SeriesControl& ctl = {});

enum class IntegralSide { Lower, Upper };

/// int_0^x t^mu K_nu(a t) dt (Lower) or int_x^inf t^mu K_nu(a t) dt (Upper),
/// as (2^{mu-1} / a^{mu+1}) Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2) G(a x) (resp. G~).
EvalResult incomplete_bessel_integral(double mu_order, double nu_order, double scale_a, double x,
                                      IntegralSide side, const SeriesControl& ctl = {});

/// ln P_{mu,nu} = ln(2^{mu-1} Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2)).
double log_kernel_normalizer(double mu_order, double nu_order);

namespace detail {

// e^x K_nu(x) and e^x K_{nu-1}(x); the VG series reuse them for every k.
struct ScaledBesselPair {
    double k_nu;
    double k_nu_minus_1;
};

ScaledBesselPair scaled_bessel_pair(double nu_order, double x);

EvalResult g_lower_with(const KernelArgs& args, const ScaledBesselPair& k,
                        const SeriesControl& ctl);
EvalResult g_upper_with(const KernelArgs& args, const ScaledBesselPair& k,
                        const SeriesControl& ctl);

}  // namespace detail

}  // namespace vgcdf
