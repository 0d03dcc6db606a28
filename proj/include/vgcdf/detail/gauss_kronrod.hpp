#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace vgcdf::detail {

struct QuadratureResult {
    double value = 0.0;
    double abs_err = 0.0;
    int evaluations = 0;
    int intervals = 0;
    bool converged = false;
};

namespace gk15 {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1] (nonnegative nodes).
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kNodes[1], kNodes[3], kNodes[5], kNodes[7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double err;
};

template <class F>
Segment apply(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace gk15

/// Globally adaptive 15-point Gauss-Kronrod integration over the partition given by
/// `breakpoints` (sorted, at least two entries). Bisects the segment with the largest
/// error estimate until the total estimate falls below max(abs_tol, rel_tol * |I|).
template <class F>
QuadratureResult integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                                    double rel_tol, int max_segments = 4000) {
    using gk15::Segment;
    QuadratureResult out;
    std::vector<Segment> heap;
    heap.reserve(static_cast<std::size_t>(max_segments) + breakpoints.size());
    auto by_err = [](const Segment& l, const Segment& r) { return l.err < r.err; };
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] > breakpoints[i]) {
            heap.push_back(gk15::apply(f, breakpoints[i], breakpoints[i + 1]));
            out.evaluations += 15;
        }
    }
    std::make_heap(heap.begin(), heap.end(), by_err);

    auto totals = [&heap]() {
        double value = 0.0;
        double err = 0.0;
        for (const Segment& s : heap) {
            value += s.value;
            err += s.err;
        }
        return std::pair{value, err};
    };

    auto [value, err] = totals();
    while (!heap.empty() && err > std::max(abs_tol, rel_tol * std::abs(value)) &&
           static_cast<int>(heap.size()) < max_segments) {
        std::pop_heap(heap.begin(), heap.end(), by_err);
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_err);
            break;
        }
        const Segment left = gk15::apply(f, worst.a, mid);
        const Segment right = gk15::apply(f, mid, worst.b);
        out.evaluations += 30;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_err);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_err);
    }

    // Final totals in left-to-right order so the result does not depend on heap layout.
    std::sort(heap.begin(), heap.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    std::tie(value, err) = totals();
    out.value = value;
    out.abs_err = err;
    out.intervals = static_cast<int>(heap.size());
    out.converged = err <= std::max(abs_tol, rel_tol * std::abs(value));
    return out;
}

}  // namespace vgcdf::detail
