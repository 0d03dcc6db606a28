#pragma once

#include <string_view>

namespace vgcdf {

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once |term| <= rel_tol * |partial sum| + abs_tol has held for two
/// consecutive terms. Exceeding max_terms is a ConvergenceError unless the caller
/// documents an adaptive extension (the k-series of the VG CDF does).
struct SeriesControl {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    int max_terms = 2000;

    void validate() const;

    [[nodiscard]] bool negligible(double term, double partial_sum) const noexcept;
};

enum class Method {
    Exact,                // closed form or trivial value
    TemmeSeries,          // K: small-argument series for the fractional order
    SteedContinuedFraction,  // K: continued fraction for x > 2
    HalfIntegerClosedForm,   // K_{m+1/2}: finite sum
    PowerSeries,          // positive-term power series
    LinearTransformation, // 2F1 mapped to argument 1 - z
    LowerKernelSeries,    // G via K and Lommel products
    ComplementOfLower,    // G~ = 1 - G
    TailQuadrature,       // G~ by exp-scaled quadrature of the tail integral
    SurvivalSeries,       // VG: G~ series for the survival, x >= mu
    LeftTailSeries,       // VG: alternating G~ series, x < mu
    SignedKernelSeries,   // VG: all-x series in G with sgn(x - mu)
    StruveForm,           // VG: beta = 0 Struve expression
    Quadrature,           // adaptive numerical integration of the density
    RootFinding,
};

[[nodiscard]] std::string_view to_string(Method m) noexcept;

/// A computed value with a heuristic truncation-error estimate and diagnostics.
///
/// abs_err_est is an estimate derived from the stopping rule, not a rigorous bound.
struct EvalResult {
    double value = 0.0;
    double abs_err_est = 0.0;
    int terms_used = 0;
    Method method = Method::Exact;
    int clamp_events = 0;      // results nudged back into their admissible range
    int term_cap_raises = 0;   // series that needed more than SeriesControl::max_terms
};

}  // namespace vgcdf
