#include "vgcdf/quadrature_oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <limits>

#include "vgcdf/errors.hpp"

namespace vgcdf {

namespace {

struct Piece {
    double value = 0.0;
    double err = 0.0;
};

// int_{s1}^{s2} pdf(mu + sigma s) ds with 0 <= s1 < s2 <= inf.
Piece integrate_side(const VGParams& p, int sigma, double s1, double s2, double tol) {
    auto f = [&](double s) { return detail::pdf_at_offset(p, sigma * s); };
    auto log_f = [&](double s) {
        const double v = f(s);
        return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    };

    if (std::isinf(s2)) {
        const double threshold = std::log(tol) - 40.0;
        double cut = std::max(2.0 * s1, 1.0 / p.alpha());
        while (log_f(cut) > threshold) cut *= 2.0;
        s2 = cut;
    }
    if (!(s2 > s1)) return {};

    Piece out;
    const double near = 1.0 / p.alpha();
    double from = s1;
    if (s1 < near) {
        const double to = std::min(s2, near);
        // integrate() is not const-qualified in every Boost release; one instance per thread.
        thread_local boost::math::quadrature::tanh_sinh<double> ts;
        double err = 0.0;
        double l1 = 0.0;
        out.value += ts.integrate(f, s1, to, 1e-15, &err, &l1);
        out.err += err * l1;
        from = to;
    }
    // Geometric breakpoints keep each panel smooth; a capped depth stops adaptive
    // refinement from chasing rounding noise.
    while (s2 > from) {
        const double to = std::min(s2, 2.0 * from);
        double err = 0.0;
        out.value += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            f, from, to, 8, 1e-12, &err);
        out.err += err;
        from = to;
    }
    return out;
}

}  // namespace

EvalResult integrate_pdf(const VGParams& p, double a, double b, double tol) {
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate_pdf: NaN bound");
    if (!(tol > 0.0)) throw DomainError("integrate_pdf: require tol > 0");
    if (a > b) throw DomainError("integrate_pdf: require a <= b");
    EvalResult r;
    r.method = Method::Quadrature;
    if (a == b) return r;

    const double mu = p.mu_loc();
    Piece total;
    auto add = [&total](const Piece& piece) {
        total.value += piece.value;
        total.err += piece.err;
    };
    if (a < mu) {
        const double upper = std::min(b, mu);
        add(integrate_side(p, -1, mu - upper, mu - a, tol));
    }
    if (b > mu) {
        const double lower = std::max(a, mu);
        add(integrate_side(p, 1, lower - mu, b - mu, tol));
    }
    if (!(total.err <= tol)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "integrate_pdf: tolerance %g not met, achieved %g", tol, total.err);
        throw ConvergenceError(msg);
    }
    r.value = std::max(0.0, total.value);
    r.abs_err_est = total.err;
    return r;
}

EvalResult cdf_by_quadrature(const VGParams& p, double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("cdf_by_quadrature: x must be finite");
    const double inf = std::numeric_limits<double>::infinity();
    if (x < p.mu_loc()) return integrate_pdf(p, -inf, x, tol);
    EvalResult r = integrate_pdf(p, x, inf, tol);
    r.value = 1.0 - r.value;
    return r;
}

}  // namespace vgcdf
