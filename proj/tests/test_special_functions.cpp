#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>

#include "vgcdf/errors.hpp"
#include "vgcdf/special_functions.hpp"

using namespace vgcdf;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("log_gamma at exact points") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rel_err(log_gamma(0.5), 0.5 * std::log(std::numbers::pi)) < 1e-14);
    CHECK(rel_err(log_gamma(5.0), std::log(24.0)) < 1e-14);
    CHECK(rel_err(log_gamma(1e6), std::lgamma(1e6)) < 1e-14);
    CHECK(rel_err(log_gamma(1e-6), std::lgamma(1e-6)) < 1e-14);
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(log_gamma(NAN), DomainError);
}

TEST_CASE("bessel_k worked values") {
    CHECK(rel_err(bessel_k(0.5, 1.0).value, 0.4610685044478946) < 1e-13);
    CHECK(rel_err(bessel_k(1.5, 2.0).value, 0.1799066579520922) < 1e-13);
    CHECK(rel_err(bessel_k_half_integer(0, 1.0).value, 0.4610685044478946) < 1e-14);
    CHECK(rel_err(bessel_k_half_integer(1, 1.0).value, 0.9221370088957891) < 1e-14);
    for (double x : {0.01, 0.3, 2.0, 17.0, 900.0}) {
        CHECK(rel_err(bessel_k_half_integer(0, x, true).value, std::sqrt(std::numbers::pi / (2 * x))) <
              1e-15);
    }
}

TEST_CASE("bessel_k against 40-digit references") {
    struct Ref {
        double nu, x, k;
    };
    const Ref refs[] = {
        {0.0, 1.0, 0.42102443824070833334},     {1.0, 1.0, 0.60190723019723457474},
        {0.25, 0.5, 0.96031632493188602295},    {-0.25, 1.9, 0.13060056344708003456},
        {2.7, 2.1, 0.39703441651852026716},     {10.0, 10.0, 0.0016142553003906700235},
        {0.5, 50.0, 3.4186200954570746356e-23}, {3.5, 0.001, 594499035190.99709876},
        {0.1, 1e-8, 31.37710957497601713},      {1.3, 300.0, 3.7341805638397580115e-132},
    };
    for (const Ref& r : refs) {
        CAPTURE(r.nu);
        CAPTURE(r.x);
        CHECK(rel_err(bessel_k(r.nu, r.x).value, r.k) < 1e-13);
    }
    CHECK(rel_err(bessel_k(0.6, 700.0, true).value, 0.04737454122685408294) < 1e-13);
}

TEST_CASE("bessel_k against Boost over a grid") {
    for (double nu : {0.0, 0.2, 0.5, 0.9, 1.0, 2.25, 7.5, 20.0, 59.3}) {
        for (double x : {1e-3, 0.1, 0.5, 1.0, 1.99, 2.01, 5.0, 30.0, 120.0, 600.0}) {
            const double want = boost::math::cyl_bessel_k(nu, x);
            if (!(want > 1e-300 && want < 1e300)) continue;
            CAPTURE(nu);
            CAPTURE(x);
            CHECK(rel_err(bessel_k(nu, x).value, want) < 1e-12);
        }
    }
}

TEST_CASE("bessel_k scaled form stays finite out to 1e4") {
    for (double x : {1e3, 5e3, 1e4}) {
        const double s = bessel_k(2.3, x, true).value;
        CHECK(std::isfinite(s));
        CHECK(s > 0.0);
        // Three terms of the large-argument expansion are good to about 1e-10 here.
        const double m = 4 * 2.3 * 2.3;
        const double series = 1 + (m - 1) / (8 * x) + (m - 1) * (m - 9) / (2 * 64 * x * x);
        CHECK(rel_err(s, std::sqrt(std::numbers::pi / (2 * x)) * series) < 1e-8);
    }
}

TEST_CASE("bessel_k symmetry in the order") {
    for (double nu : {0.1, 0.25, 0.5, 1.7, 3.0, 12.4}) {
        for (double x : {0.05, 1.0, 2.5, 40.0}) {
            CHECK(rel_err(bessel_k(-nu, x).value, bessel_k(nu, x).value) < 1e-13);
        }
    }
}

TEST_CASE("bessel_k matches the half-integer sum") {
    for (int m = 0; m <= 10; ++m) {
        for (double x : {0.01, 0.1, 1.0, 10.0, 100.0}) {
            CAPTURE(m);
            CAPTURE(x);
            CHECK(rel_err(bessel_k(m + 0.5, x).value, bessel_k_half_integer(m, x).value) < 1e-12);
        }
    }
}

TEST_CASE("bessel_k limiting forms") {
    // The first correction is (4 nu^2 - 1)/(8x); keep it under the tolerance.
    for (double nu : {0.0, 0.25, 0.5, 1.0}) {
        const double x = 700.0;
        CHECK(std::abs(bessel_k(nu, x, true).value * std::sqrt(2 * x / std::numbers::pi) - 1.0) < 1e-3);
    }
    for (double nu : {0.5, 1.0, 2.5, 4.0}) {
        const double x = 1e-8;
        const double lead = std::exp((nu - 1) * std::numbers::ln2 + std::lgamma(nu) - nu * std::log(x));
        CHECK(std::abs(bessel_k(nu, x).value / lead - 1.0) < 1e-6);
    }
    CHECK(std::abs(bessel_k(1.0, 1e-9).value * 1e-9 - 1.0) < 1e-6);
}

TEST_CASE("bessel_k positivity and errors") {
    for (double nu : {-0.49, 0.0, 0.3, 5.0, 33.0}) {
        for (double x : {1e-4, 0.7, 3.0, 200.0}) CHECK(bessel_k(nu, x, true).value > 0.0);
    }
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0.5, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_k_half_integer(2, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(200.0, 1e-6), OverflowError);
}

TEST_CASE("modified Lommel tilde against references") {
    CHECK(rel_err(modified_lommel_tilde(0.5, 0.5, 1.0).value, 0.43331565379010212025) < 1e-13);
    CHECK(rel_err(modified_lommel_tilde(2.0, 0.5, 3.0).value, 2.664846103868209256) < 1e-13);
    CHECK(rel_err(modified_lommel_tilde(-0.5, -0.5, 2.0).value, 2.0462368630890550366) < 1e-13);
    CHECK(rel_err(modified_lommel_tilde(1.75, 0.75, 0.2).value, 0.0011076600767698239024) < 1e-13);
    CHECK(rel_err(modified_lommel_tilde(3.0, 1.0, 20.0, true).value, 0.087506045918270243789) < 1e-12);
    CHECK(rel_err(modified_lommel_tilde(0.5, 0.5, 500.0, true).value, 0.017841241161527710542) <
          1e-12);
}

TEST_CASE("modified Lommel tilde limits") {
    for (double x : {1e-6, 1e-8}) {
        CHECK(std::abs(modified_lommel_tilde(0.0, 0.0, x).value / x - 2.0 / std::numbers::pi) < 1e-10);
    }
    const double x = 500.0;
    for (auto [mu, nu] : {std::pair{0.5, 0.5}, std::pair{2.0, 1.0}, std::pair{0.0, -0.25}}) {
        const double r = modified_lommel_tilde(mu, nu, x, true).value * std::sqrt(2 * std::numbers::pi * x);
        CHECK(std::abs(r - 1.0) < 1e-2);
    }
    CHECK(std::isfinite(modified_lommel_tilde(1.0, 0.5, 1e4, true).value));
}

TEST_CASE("modified Lommel tilde grows as more terms are kept") {
    // All terms are positive, so tightening the stopping rule can only add mass.
    for (double x : {0.5, 4.0, 25.0}) {
        double prev = 0.0;
        for (double tol : {1e-1, 1e-3, 1e-6, 1e-10, 1e-14}) {
            SeriesControl ctl;
            ctl.rel_tol = tol;
            const double v = modified_lommel_tilde(1.5, 0.5, x, false, ctl).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("modified Lommel tilde errors") {
    SeriesControl tight;
    tight.max_terms = 2;
    tight.rel_tol = 1e-16;
    CHECK_THROWS_AS(modified_lommel_tilde(0.5, 0.5, 40.0, false, tight), ConvergenceError);
    CHECK_THROWS_AS(modified_lommel_tilde(0.5, 0.5, 0.0), DomainError);
    // (mu - nu + 3)/2 = -1 is a pole of Gamma.
    CHECK_THROWS_AS(modified_lommel_tilde(-3.0, 2.0, 1.0), DomainError);
}

TEST_CASE("modified Struve L") {
    CHECK(rel_err(modified_struve_l(0.5, 1.0).value, 0.43331565379010209063) < 1e-13);
    CHECK(rel_err(modified_struve_l(0.0, 2.0).value, 1.9374337579914456612) < 1e-13);
    CHECK(rel_err(modified_struve_l(-0.5, 3.0).value, 4.6148229034076009479) < 1e-13);
    CHECK(rel_err(modified_struve_l(1.5, 0.3).value, 0.0049411056587894684626) < 1e-13);
    CHECK(rel_err(modified_struve_l(2.0, 15.0).value, 295896.24246432523942) < 1e-13);
    CHECK(modified_struve_l(0.5, 1.0).value == modified_lommel_tilde(0.5, 0.5, 1.0).value);
    CHECK(std::abs(modified_struve_l(0.0, 1e-7).value / 1e-7 - 2.0 / std::numbers::pi) < 1e-10);
    for (double nu : {-0.4, 0.0, 1.0, 4.5}) {
        for (double x : {1e-3, 0.5, 9.0, 60.0}) CHECK(modified_struve_l(nu, x, true).value > 0.0);
    }
}

TEST_CASE("hyp2f1_one worked values") {
    for (double nu : {-0.3, 0.0, 1.0, 7.0}) CHECK(hyp2f1_one(nu, 0.0).value == 1.0);
    CHECK(rel_err(hyp2f1_one(0.0, 0.25).value, 1.2091995761561452337) < 1e-14);
    CHECK(rel_err(hyp2f1_one(1.0, 0.25).value, 1.4727997174374301558) < 1e-14);
    CHECK(rel_err(hyp2f1_one(-0.25, 0.5).value, 1.3973952992688515295) < 1e-14);
    CHECK(rel_err(hyp2f1_one(3.0, 0.9).value, 1636.089346248182945) < 1e-13);
    CHECK(rel_err(hyp2f1_one(5.0, 0.99).value, 38851059232.504034044) < 1e-12);
    CHECK(rel_err(hyp2f1_one(0.5, 0.9999).value, 10000.000000001101341) < 1e-12);
}

TEST_CASE("hyp2f1_one arcsine reduction") {
    for (double z : {0.01, 0.25, 0.5, 0.9, 0.97, 0.999}) {
        CAPTURE(z);
        const double want = std::asin(std::sqrt(z)) / std::sqrt(z * (1 - z));
        CHECK(rel_err(hyp2f1_one(0.0, z).value, want) < 1e-12);
    }
}

TEST_CASE("hyp2f1_one agrees with Boost across the transformation threshold") {
    for (double nu : {-0.45, -0.25, 0.0, 0.5, 1.3, 4.0}) {
        for (double z : {0.1, 0.6, 0.94, 0.95, 0.951, 0.99}) {
            const double want = boost::math::hypergeometric_pFq({1.0, nu + 1.0}, {1.5}, z);
            CAPTURE(nu);
            CAPTURE(z);
            CHECK(rel_err(hyp2f1_one(nu, z).value, want) < 1e-11);
        }
    }
}

TEST_CASE("hyp2f1_one errors") {
    CHECK_THROWS_AS(hyp2f1_one(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(hyp2f1_one(0.5, -0.1), DomainError);
    CHECK_THROWS_AS(hyp2f1_one(-0.5, 0.3), DomainError);
}

TEST_CASE("regularized incomplete beta against Boost") {
    for (double a : {0.5, 1.0, 2.5, 30.0}) {
        for (double b : {0.5, 3.0, 12.0}) {
            for (double x : {0.0, 1e-4, 0.2, 0.5, 0.93, 1.0}) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(x);
                CHECK(std::abs(regularized_incomplete_beta(a, b, x) - boost::math::ibeta(a, b, x)) <
                      1e-14);
            }
        }
    }
}
