#pragma once

namespace vgcdf::detail {

// ln|Gamma(x)| with the sign of Gamma(x) written to `sign`; x must not be a
// nonpositive integer. Reentrant.
double lgamma_signed(double x, int& sign);

}  // namespace vgcdf::detail
