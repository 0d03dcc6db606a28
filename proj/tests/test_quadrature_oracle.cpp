#include <doctest.h>

#include <cmath>
#include <limits>

#include "vgcdf/errors.hpp"
#include "vgcdf/quadrature_oracle.hpp"
#include "vgcdf/vg_distribution.hpp"

using namespace vgcdf;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("normalization") {
    CHECK(std::abs(integrate_pdf(VGParams(0.5, 1, 0), -kInf, kInf).value - 1.0) < 1e-12);
    for (double nu : {-0.45, -0.25, 0.0, 2.0, 10.0}) {
        for (double ratio : {-0.9, 0.0, 0.6}) {
            const VGParams p(nu, 2.0, 2.0 * ratio, 1.5);
            CAPTURE(nu);
            CAPTURE(ratio);
            CHECK(std::abs(integrate_pdf(p, -kInf, kInf).value - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("worked integrals") {
    CHECK(std::abs(integrate_pdf(VGParams(0.5, 1, 0), 0.0, 1.0).value - (1 - std::exp(-1.0)) / 2) < 1e-14);
    CHECK(std::abs(integrate_pdf(VGParams(-0.25, 1, 0.05), -kInf, 0.0).value - 0.4905) < 5e-5);
    CHECK(std::abs(cdf_by_quadrature(VGParams(1.0, 3.0, 0.0, 2.0), 2.0).value - 0.5) < 1e-13);
    CHECK(std::abs(cdf_by_quadrature(VGParams(0.5, 1, 0), 1.0).value - 0.8160602794142788) < 1e-13);
    CHECK(cdf_by_quadrature(VGParams(0.5, 1, 0), 1.0).method == Method::Quadrature);
}

TEST_CASE("right tail matches the survival series") {
    for (double alpha : {0.5, 2.0}) {
        for (double ratio : {0.0, 0.5}) {
            const VGParams p(1.0, alpha, alpha * ratio);
            const double x = 20.0 / alpha;
            const double tail = integrate_pdf(p, x, kInf, 1e-20).value;
            CHECK(std::abs(tail / survival(p, x) - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("additivity and positivity") {
    const VGParams p(-0.25, 1.5, -0.5, 0.2);
    const double tol = 1e-13;
    const double pts[] = {-6.0, -1.0, 0.0, 0.2, 0.3, 4.0};
    for (double a : pts) {
        for (double c : pts) {
            if (!(a < c)) continue;
            for (double b : pts) {
                if (!(a < b && b < c)) continue;
                const double whole = integrate_pdf(p, a, c, tol).value;
                const double parts = integrate_pdf(p, a, b, tol).value + integrate_pdf(p, b, c, tol).value;
                CHECK(std::abs(whole - parts) <= 2 * tol);
            }
            CHECK(integrate_pdf(p, a, c, tol).value >= 0.0);
        }
    }
    CHECK(integrate_pdf(p, 1.0, 1.0).value == 0.0);
}

TEST_CASE("argument checks") {
    const VGParams p(1.0, 1.0, 0.0);
    CHECK_THROWS_AS(integrate_pdf(p, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate_pdf(p, NAN, 0.0), DomainError);
    CHECK_THROWS_AS(integrate_pdf(p, 0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(cdf_by_quadrature(p, kInf), DomainError);
}
