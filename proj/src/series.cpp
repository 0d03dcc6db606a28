#include "vgcdf/series.hpp"

#include <cmath>

#include "vgcdf/errors.hpp"

namespace vgcdf {

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
        throw DomainError("SeriesControl: require rel_tol > 0");
    }
    if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) {
        throw DomainError("SeriesControl: require abs_tol >= 0");
    }
    if (max_terms < 1) {
        throw DomainError("SeriesControl: require max_terms >= 1");
    }
}

bool SeriesControl::negligible(double term, double partial_sum) const noexcept {
    return std::abs(term) <= rel_tol * std::abs(partial_sum) + abs_tol;
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::TemmeSeries: return "temme_series";
        case Method::SteedContinuedFraction: return "steed_continued_fraction";
        case Method::HalfIntegerClosedForm: return "half_integer_closed_form";
        case Method::PowerSeries: return "power_series";
        case Method::LinearTransformation: return "linear_transformation";
        case Method::LowerKernelSeries: return "lower_kernel_series";
        case Method::ComplementOfLower: return "complement_of_lower";
        case Method::TailQuadrature: return "tail_quadrature";
        case Method::SurvivalSeries: return "survival_series";
        case Method::LeftTailSeries: return "left_tail_series";
        case Method::SignedKernelSeries: return "signed_kernel_series";
        case Method::StruveForm: return "struve_form";
        case Method::Quadrature: return "quadrature";
        case Method::RootFinding: return "root_finding";
    }
    return "unknown";
}

}  // namespace vgcdf
