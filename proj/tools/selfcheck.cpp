#include "selfcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>

#include "vgcdf/quadrature_oracle.hpp"
#include "vgcdf/vg_distribution.hpp"

namespace vgcdf::cli {

namespace {

constexpr std::array<double, 7> kTableNu = {-0.25, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
constexpr std::array<double, 5> kTableBeta = {0.05, 0.1, 0.25, 0.5, 0.75};
// P(Y <= 0), Y ~ VG(nu, 1, beta, 0), published to four decimals.
constexpr double kTable[5][7] = {
    {0.4905, 0.4841, 0.4750, 0.4682, 0.4576, 0.4492, 0.4356},
    {0.4809, 0.4681, 0.4500, 0.4364, 0.4155, 0.3990, 0.3726},
    {0.4516, 0.4196, 0.3750, 0.3425, 0.2944, 0.2582, 0.2050},
    {0.3978, 0.3333, 0.2500, 0.1955, 0.1266, 0.0852, 0.0409},
    {0.3271, 0.2301, 0.1250, 0.0721, 0.0261, 0.0100, 0.0016},
};

struct GridSpec {
    std::vector<double> nu;
    std::vector<double> ratio;
    std::vector<double> alpha;
    std::vector<double> offset;
};

GridSpec make_grid(Grid g) {
    if (g == Grid::Small) {
        return {{-0.25, 0.5, 2.0}, {0.0, 0.5, -0.5}, {1.0}, {-10.0, -2.0, -0.1, 0.0, 0.1, 2.0, 10.0}};
    }
    return {{-0.25, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0},
            {0.0, 0.05, -0.05, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75},
            {0.5, 1.0, 3.0},
            {-10.0, -2.0, -0.1, 0.0, 0.1, 2.0, 10.0}};
}

// A check that throws (an invariant violation, say) counts as an infinite deviation.
template <class F>
double guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

std::vector<FamilyReport> run_selfcheck(Grid grid, double oracle_threshold,
                                        const SeriesControl& ctl) {
    FamilyReport table{"table1", 0.0, 5e-5, false};
    FamilyReport oracle{"oracle_equivalence", 0.0, oracle_threshold, false};
    FamilyReport eq3{"eq1eq2_vs_eq3", 0.0, 1e-12, false};
    FamilyReport sym{"eq3_vs_symmetric", 0.0, 1e-12, false};
    FamilyReport cont{"continuity_at_location", 0.0, 1e-10, false};
    FamilyReport loc{"location_constant", 0.0, 1e-12, false};
    FamilyReport refl{"reflection", 0.0, 1e-12, false};

    auto track = [](FamilyReport& f, double dev) {
        // A NaN deviation sticks and fails the family.
        if (std::isnan(dev) || dev > f.max_abs_dev) f.max_abs_dev = dev;
    };

    for (std::size_t i = 0; i < kTableBeta.size(); ++i) {
        for (std::size_t j = 0; j < kTableNu.size(); ++j) {
            const VGParams p(kTableNu[j], 1.0, kTableBeta[i]);
            track(table, guarded([&] { return std::abs(cdf(p, 0.0, ctl) - kTable[i][j]); }));
        }
    }

    const GridSpec g = make_grid(grid);
    for (double nu : g.nu) {
        for (double ratio : g.ratio) {
            for (double alpha : g.alpha) {
                const VGParams p(nu, alpha, ratio * alpha);
                track(loc, guarded([&] {
                          const double f0 = prob_at_most_location(p, ctl);
                          return std::max({std::abs(detail::location_limit(p, 1, ctl).value - f0),
                                           std::abs(detail::location_limit(p, -1, ctl).value - f0),
                                           std::abs(cdf_eq3(p, 0.0, ctl) - f0)});
                      }));

                // Jump across mu: the CDF increment minus the probability mass of the
                // interval, which is itself of order eps^{2 nu + 1}.
                const double eps = 1e-8 / alpha;
                track(cont, guarded([&] {
                          return std::abs(cdf(p, eps, ctl) - cdf(p, -eps, ctl) -
                                          integrate_pdf(p, -eps, eps).value);
                      }));

                const VGParams q = reflect(p);
                for (double x : g.offset) {
                    track(oracle, guarded([&] {
                              return std::abs(cdf(p, x, ctl) - cdf_by_quadrature(p, x).value);
                          }));
                    track(eq3, guarded([&] { return std::abs(cdf(p, x, ctl) - cdf_eq3(p, x, ctl)); }));
                    if (ratio == 0.0) {
                        track(sym, guarded([&] {
                                  return std::abs(cdf_eq3(p, x, ctl) - cdf_symmetric(p, x, ctl));
                              }));
                    }
                    if (x != 0.0) {
                        track(refl, guarded([&] {
                                  return std::abs(cdf(p, x, ctl) + cdf(q, -x, ctl) - 1.0);
                              }));
                    }
                }
            }
        }
    }

    std::vector<FamilyReport> out{table, oracle, eq3, sym, cont, loc, refl};
    for (FamilyReport& f : out) f.pass = f.max_abs_dev <= f.threshold;
    return out;
}

}  // namespace vgcdf::cli
