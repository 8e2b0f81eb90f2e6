#include <cmath>
#include <stdexcept>

#include "phi4tc/phi4_oracle.hpp"

namespace phi4tc {

std::pair<std::vector<int>, std::vector<double>> CorrelationRequest::folded() const {
    std::vector<int> vol;
    if (volume) {
        vol = *volume;
    } else {
        vol.resize(static_cast<std::size_t>(graph.size()));
        for (int i = 0; i < graph.size(); ++i) vol[static_cast<std::size_t>(i)] = i;
    }
    std::vector<bool> inside(static_cast<std::size_t>(graph.size()), false);
    for (int v : vol) inside[static_cast<std::size_t>(v)] = true;
    std::vector<double> field = h;
    if (field.empty()) field.assign(static_cast<std::size_t>(graph.size()), 0.0);
    if (eta) {
        for (int x : vol)
            for (int y = 0; y < graph.size(); ++y)
                if (!inside[static_cast<std::size_t>(y)])
                    field[static_cast<std::size_t>(x)] +=
                        graph.coupling(x, y) * (*eta)[static_cast<std::size_t>(y)];
    }
    return {vol, field};
}

namespace {

// Composite Gauss-Legendre(16) with panel doubling until both the numerator
// and the denominator stabilise; same grid for both so roundoff correlates.
constexpr double kGlx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                            0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGlw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                            0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

struct TensorGrid {
    std::vector<double> nodes;
    std::vector<double> logweights;
};

TensorGrid build_grid(double T, int panels) {
    TensorGrid grid;
    const double hw = T / panels;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double c = -T + (2 * pnl + 1) * hw;
        for (int i = 0; i < 8; ++i) {
            grid.nodes.push_back(c - hw * kGlx[i]);
            grid.logweights.push_back(std::log(hw * kGlw[i]));
            grid.nodes.push_back(c + hw * kGlx[i]);
            grid.logweights.push_back(std::log(hw * kGlw[i]));
        }
    }
    return grid;
}

}  // namespace

double correlate_quadrature(const CorrelationRequest& req, double tol) {
    if (req.beta < 0.0) throw std::invalid_argument("correlate_quadrature: beta must be >= 0");
    req.params.validate();
    auto [vol, field] = req.folded();
    const int n = static_cast<int>(vol.size());
    if (n < 1 || n > 4)
        throw std::length_error("correlate_quadrature: capacity is 1..4 vertices");
    // ghost component of A multiplies by phi_g = 1: no-op
    for (int x = 0; x < req.graph.size(); ++x) {
        bool inside = false;
        for (int v : vol) inside |= (v == x);
        if (!inside && req.a.at(x) != 0)
            throw std::invalid_argument("correlate_quadrature: A supported outside volume");
    }

    const double g = req.params.g, a = req.params.a;
    // cutoff: g T^4 dominates the quadratic tilt and any field by a margin
    double tilt = std::abs(a);
    for (int i = 0; i < n; ++i) {
        double row = std::abs(field[static_cast<std::size_t>(vol[static_cast<std::size_t>(i)])]);
        for (int j = 0; j < n; ++j)
            row += req.beta * std::abs(req.graph.coupling(vol[static_cast<std::size_t>(i)],
                                                          vol[static_cast<std::size_t>(j)]));
        tilt = std::max(tilt, std::abs(a) + row);
    }
    double T = std::max(2.5, std::sqrt(2.0 * (tilt + 2.0) / g));
    int total_a = 0;
    for (int v : vol) total_a += req.a.at(v);
    for (int i = 0; i < 60; ++i) {
        double logtail = total_a * std::log(T) - g * T * T * T * T + tilt * T * T + tilt * T;
        if (logtail < -50.0) break;
        T *= 1.2;
    }

    double prev = 0.0;
    bool have_prev = false;
    const int start_panels = (n <= 3) ? 4 : 2;
    const int max_panels = (n <= 2) ? 128 : (n == 3 ? 16 : 4);
    for (int panels = start_panels; panels <= max_panels; panels *= 2) {
        auto grid = build_grid(T, panels);
        const std::size_t m = grid.nodes.size();
        std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
        double num = 0.0, den = 0.0, cnum = 0.0, cden = 0.0;
        // log-weight baseline to keep exponentials in range
        while (true) {
            double logw = 0.0;
            double obs = 1.0;
            for (int i = 0; i < n; ++i) {
                const double t = grid.nodes[index[static_cast<std::size_t>(i)]];
                const int x = vol[static_cast<std::size_t>(i)];
                logw += grid.logweights[index[static_cast<std::size_t>(i)]];
                logw += -g * t * t * t * t - a * t * t +
                        req.beta * field[static_cast<std::size_t>(x)] * t;
                for (int j = i + 1; j < n; ++j) {
                    const double s = grid.nodes[index[static_cast<std::size_t>(j)]];
                    logw += req.beta *
                            req.graph.coupling(x, vol[static_cast<std::size_t>(j)]) * t * s;
                }
                for (int k = 0; k < req.a.at(x); ++k) obs *= t;
            }
            const double w = std::exp(logw);
            double y = w - cden;  // Kahan
            double tt = den + y;
            cden = (tt - den) - y;
            den = tt;
            y = w * obs - cnum;
            tt = num + y;
            cnum = (tt - num) - y;
            num = tt;
            // advance the tensor index
            int d = 0;
            while (d < n) {
                if (++index[static_cast<std::size_t>(d)] < m) break;
                index[static_cast<std::size_t>(d)] = 0;
                ++d;
            }
            if (d == n) break;
        }
        const double value = num / den;
        if (have_prev && std::abs(value - prev) <= tol * std::max(1.0, std::abs(value)))
            return value;
        prev = value;
        have_prev = true;
    }
    return prev;
}

}  // namespace phi4tc
