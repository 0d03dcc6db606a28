#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vgcdf/errors.hpp"
#include "vgcdf/product_normal.hpp"
#include "vgcdf/quadrature_oracle.hpp"

using namespace vgcdf;

namespace {

// n = 2: asymmetric Laplace with rates a + b (left) and a - b (right).
double asymmetric_laplace_cdf(const VGParams& p, double x) {
    const double a = p.alpha();
    const double b = p.beta();
    if (x < 0) return (a - b) / (2 * a) * std::exp((a + b) * x);
    return 1.0 - (a + b) / (2 * a) * std::exp(-(a - b) * x);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ProductNormalParams(0.0, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(ProductNormalParams(1.0, -1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(ProductNormalParams(1.0, 1.0, 1.0), ParameterError);
    CHECK_THROWS_AS(ProductNormalParams(1.0, 1.0, -1.2), ParameterError);
    CHECK_THROWS_AS(ProductNormalParams(1.0, 1.0, 0.0, 0), ParameterError);
    CHECK(ProductNormalParams(2.0, 3.0, 0.1).s() == 6.0);
}

TEST_CASE("VG representation") {
    CHECK(to_vg(ProductNormalParams(1, 1, 0, 1)) == VGParams(0, 1, 0, 0));
    const VGParams v = to_vg(ProductNormalParams(2, 3, 0.5, 2));
    CHECK(v.nu() == 0.5);
    CHECK(v.alpha() == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(v.beta() == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(v.mu_loc() == 0.0);
    for (double rho : {-0.7, 0.0, 0.95}) CHECK(to_vg(ProductNormalParams(0.3, 5, rho, 1)).nu() == 0.0);
}

TEST_CASE("mean product cdf") {
    CHECK(std::abs(mean_product_cdf(ProductNormalParams(1, 1, 0, 1), 0.0) - 0.5) < 1e-15);
    CHECK(std::abs(mean_product_cdf(ProductNormalParams(1, 1, 0.5, 2), 0.0) - 0.25) < 1e-14);
    CHECK(std::abs(mean_product_cdf(ProductNormalParams(2, 3, 0.5, 2), 1.5) - 0.46260151706965806218) <
          1e-14);
    CHECK(std::abs(mean_product_cdf(ProductNormalParams(1, 1, -0.3, 1), 0.2) - 0.76873828096700662853) <
          1e-14);
    CHECK(std::abs(mean_product_cdf(ProductNormalParams(0.5, 2, 0.8, 5), -0.1) -
                   0.0027815481087569365505) < 1e-14);
}

TEST_CASE("mean product cdf agrees with quadrature of the density") {
    for (double rho : {-0.8, -0.2, 0.0, 0.4, 0.9}) {
        for (int n : {1, 2, 3, 6}) {
            const ProductNormalParams p(1.3, 0.7, rho, n);
            for (double x : {-2.0, -0.3, 0.0, 0.05, 1.0, 3.0}) {
                CAPTURE(rho);
                CAPTURE(n);
                CAPTURE(x);
                CHECK(std::abs(mean_product_cdf(p, x) - cdf_by_quadrature(to_vg(p), x).value) < 1e-9);
            }
        }
    }
}

TEST_CASE("n = 2 is the asymmetric Laplace law") {
    for (double rho : {-0.6, 0.0, 0.5, 0.9}) {
        const ProductNormalParams p(1.5, 0.8, rho, 2);
        const VGParams v = to_vg(p);
        for (double x : {-5.0, -1.0, -0.1, 0.0, 0.1, 0.5, 1.0, 4.0, 12.0}) {
            CAPTURE(rho);
            CAPTURE(x);
            CHECK(std::abs(mean_product_cdf(p, x) - asymmetric_laplace_cdf(v, x)) < 1e-12);
        }
    }
}

TEST_CASE("sign probability") {
    CHECK(prob_nonpositive(ProductNormalParams(1, 1, 0.0, 7)) == 0.5);
    CHECK(std::abs(prob_nonpositive(ProductNormalParams(1, 1, 0.5, 1)) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(prob_nonpositive(ProductNormalParams(1, 1, 0.5, 2)) - 0.25) < 1e-15);
    CHECK(single_product_sign_prob(0.0) == 0.5);
    CHECK(std::abs(single_product_sign_prob(0.5) - 1.0 / 3.0) < 1e-16);
    CHECK(std::abs(single_product_sign_prob(-0.5) - 2.0 / 3.0) < 2.3e-16);
    CHECK_THROWS_AS(single_product_sign_prob(1.0), DomainError);
    CHECK_THROWS_AS(single_product_sign_prob(-3.0), DomainError);

    for (double rho : {-0.9, -0.5, -0.1, 0.0, 0.1, 0.5, 0.9}) {
        CHECK(std::abs(prob_nonpositive(ProductNormalParams(1, 1, rho, 1)) - single_product_sign_prob(rho)) <
              1e-13);
        for (int n : {1, 2, 5, 20}) {
            const double a = prob_nonpositive(ProductNormalParams(1, 1, rho, n));
            const double b = prob_nonpositive(ProductNormalParams(1, 1, -rho, n));
            CHECK(std::abs(a + b - 1.0) < 1e-13);
            // Independent of the two scales.
            CHECK(prob_nonpositive(ProductNormalParams(0.2, 9.0, rho, n)) == doctest::Approx(a).epsilon(1e-14));
            // And it is the CDF at zero.
            CHECK(std::abs(mean_product_cdf(ProductNormalParams(0.2, 9.0, rho, n), 0.0) - a) < 1e-12);
        }
    }
}

TEST_CASE("scale invariance") {
    for (double c : {0.25, 3.0}) {
        for (double x : {-1.0, 0.2, 2.0}) {
            const ProductNormalParams p(1.1, 0.6, 0.35, 3);
            const ProductNormalParams q(1.1 * c, 0.6, 0.35, 3);
            CHECK(std::abs(mean_product_cdf(p, x) - mean_product_cdf(q, x * c)) < 1e-13);
        }
    }
}
