#pragma once

// Adaptive composite Gauss-Legendre integration for matrix-valued integrands
// on a real interval. Each panel carries the difference between its own
// 16-point value and the sum over its two halves as an error estimate; the
// worst panel is split until the accumulated estimate drops below
// max(abs_tol, rel_tol * |I|) or the panel budget runs out. The integrands
// here are smooth but develop sharp peaks when the transverse block of the
// rotated triple approaches singularity, hence the budgeted refinement.

#include <algorithm>
#include <queue>
#include <type_traits>
#include <utility>
#include <vector>

#include "voidsurf/errors.hpp"

namespace voidsurf {

template <typename Value>
struct QuadratureResult {
    Value value;
    double error = 0.0;  // accumulated per-panel error estimate
    int panels = 0;      // panels in the final partition
};

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1], positive half (rule is symmetric).
struct GaussNode {
    double x, w;
};
inline constexpr GaussNode k_gauss16[8] = {
        {9.50125098376374544e-02, 1.89450610455068585e-01},
        {2.81603550779258915e-01, 1.82603415044923612e-01},
        {4.58016777657227370e-01, 1.69156519395002619e-01},
        {6.17876244402643771e-01, 1.49595988816576764e-01},
        {7.55404408355002999e-01, 1.24628971255534030e-01},
        {8.65631202387831755e-01, 9.51585116824925914e-02},
        {9.44575023073232600e-01, 6.22535239386477063e-02},
        {9.89400934991649939e-01, 2.71524594117540374e-02},
};

template <typename Value, typename F>
Value gauss16(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value acc = Value::Zero();
    for (const auto& node : k_gauss16)
        acc += node.w * (f(mid + half * node.x) + f(mid - half * node.x));
    return Value(half * acc);
}

}  // namespace detail

// f maps double -> fixed-size Eigen matrix/vector type.
template <typename F>
auto integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                              int max_panels = 4096)
        -> QuadratureResult<std::decay_t<decltype(f(a))>> {
    using Value = std::decay_t<decltype(f(a))>;

    struct Panel {
        double a, b;
        Value value;   // two-half estimate (the better one)
        double error;  // |single-panel estimate - two-half estimate|
    };

    auto make_panel = [&f](double pa, double pb) {
        const double mid = 0.5 * (pa + pb);
        const Value coarse = detail::gauss16<Value>(f, pa, pb);
        const Value fine = Value(detail::gauss16<Value>(f, pa, mid) +
                                                          detail::gauss16<Value>(f, mid, pb));
        return Panel{pa, pb, fine, (coarse - fine).norm()};
    };

    auto less_error = [](const Panel& lhs, const Panel& rhs) {
        return lhs.error < rhs.error;
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(less_error)> panels(
            less_error);

    panels.push(make_panel(a, b));
    Value total = panels.top().value;
    double total_error = panels.top().error;

    while (total_error > std::max(abs_tol, rel_tol * total.norm())) {
        if (static_cast<int>(panels.size()) >= max_panels)
            throw NumericalError(
                    "adaptive quadrature: panel budget exhausted (integrand near "
                    "singular)");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = make_panel(worst.a, mid);
        const Panel right = make_panel(mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        // Guard against a stale accumulated estimate once splits stop helping.
        if (total_error < 0) total_error = 0;
        panels.push(left);
        panels.push(right);
    }

    return {total, total_error, static_cast<int>(panels.size())};
}

}  // namespace voidsurf
