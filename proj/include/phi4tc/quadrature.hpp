#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace phi4tc {

// Adaptive Gauss-Kronrod 15(7) panels. Deterministic: panels are refined
// in a fixed left-to-right order and summed in that order.
namespace gk {

// nodes/weights on [-1,1]; Kronrod 15 points, Gauss 7 subset at odd indices
inline constexpr double xk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double wk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double value;
    double error;
};

template <class F>
PanelResult panel(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double rk = 0.0, rg = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + h * xk[i]);
        rk += wk[i] * v;
        if (i % 2 == 1) rg += wg[(i - 1) / 2 < 4 ? (i - 1) / 2 : 6 - (i - 1) / 2] * v;
    }
    const double value = rk * h;
    const double err = std::abs((rk - rg) * h);
    return {value, err};
}

}  // namespace gk

/// Integrate f over [a,b] to absolute tolerance `abstol`.
/// Bisects the worst panel until the summed error estimate is below target.
template <class F>
double integrate(const F& f, double a, double b, double abstol, int max_panels = 4096) {
    struct Seg {
        double a, b, value, error;
    };
    std::vector<Seg> segs;
    auto r0 = gk::panel(f, a, b);
    segs.push_back({a, b, r0.value, r0.error});
    while (static_cast<int>(segs.size()) < max_panels) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        if (total_err <= abstol) break;
        Seg s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        auto rl = gk::panel(f, s.a, m);
        auto rr = gk::panel(f, m, s.b);
        segs[worst] = {s.a, m, rl.value, rl.error};
        segs.insert(segs.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                    {m, s.b, rr.value, rr.error});
    }
    // sum left to right, compensated
    double sum = 0.0, comp = 0.0;
    for (const auto& s : segs) {
        double y = s.value - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace phi4tc
