#pragma once

#include <string>
#include <vector>

#include "vgcdf/series.hpp"

namespace vgcdf::cli {

enum class Grid { Small, Full };

struct FamilyReport {
    std::string family;
    double max_abs_dev = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Cross-checks of the CDF paths against each other and against quadrature of the density.
// Families are reported in a fixed order.
std::vector<FamilyReport> run_selfcheck(Grid grid, double oracle_threshold,
                                        const SeriesControl& ctl);

}  // namespace vgcdf::cli
