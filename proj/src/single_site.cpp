#include "phi4tc/single_site.hpp"

#include <algorithm>
#include <cmath>

#include "phi4tc/quadrature.hpp"

namespace phi4tc {

namespace {

// Cutoff T with exp(-g T^4 - a T^2) small enough that the tail integral of
// t^order is below `eps` relative to a crude lower bound of the bulk.
// For t >= T with g t^4/2 >= |a| t^2 the integrand is <= exp(-g t^4 / 2).
double tail_cutoff(const SingleSiteParams& p, int order, double eps) {
    double T = std::max(1.0, std::sqrt(2.0 * std::abs(p.a) / p.g));
    // bulk lower bound: integrand near its max over [0,1] is >= exp(-g-|a|)
    const double log_bulk = -(p.g + std::abs(p.a));
    // grow T until t^order exp(-g t^4/2) integrated tail is certifiably tiny:
    // tail <= T^order exp(-g T^4/2) * (1 + ...) ; iterate a few times
    for (int i = 0; i < 200; ++i) {
        double log_tail = order * std::log(T) - 0.5 * p.g * T * T * T * T;
        if (log_tail < log_bulk + std::log(eps) - 3.0) break;
        T *= 1.25;
    }
    return T;
}

}  // namespace

double partition_value(const SingleSiteParams& p, double tol) {
    p.validate();
    const double T = tail_cutoff(p, 0, tol * 0.1);
    auto f = [&](double t) { return std::exp(-p.g * t * t * t * t - p.a * t * t); };
    const double rough = integrate(f, -T, T, 0.0, 128);
    return integrate(f, -T, T, std::max(tol * rough, 1e-300));
}

namespace {

// two passes: a forced-refinement estimate, then an absolute target from it
template <class F>
double integrate_rel(const F& f, double a, double b, double reltol) {
    const double rough = integrate(f, a, b, 0.0, 128);
    const double abstol = std::max(reltol * std::abs(rough), 1e-300);
    return integrate(f, a, b, abstol);
}

}  // namespace

double raw_moment(const SingleSiteParams& p, int order, double tol) {
    p.validate();
    if (order < 0) throw std::domain_error("moment order must be >= 0");
    if (order % 2 == 1) return 0.0;  // rho_{g,a} is even
    const double T = tail_cutoff(p, order, tol * 0.1);
    auto w = [&](double t) { return std::exp(-p.g * t * t * t * t - p.a * t * t); };
    auto f = [&](double t) { return std::pow(t, order) * w(t); };
    const double den = integrate_rel(w, -T, T, tol);
    const double num = integrate_rel(f, -T, T, tol);
    return num / den;
}

double single_site_moment(const SingleSiteParams& p, int order, double tol) {
    if (order % 2 != 0) throw std::domain_error("single_site_moment: order must be even");
    return raw_moment(p, order, tol);
}

MomentTable::MomentTable(SingleSiteParams p, int max_order, double tol)
    : params_(p), max_order_(max_order), tol_(tol) {
    p.validate();
    if (max_order < 0 || max_order % 2 != 0)
        throw std::invalid_argument("MomentTable: max_order must be even and >= 0");
    // one quadrature per order against a shared normalisation
    const double T = tail_cutoff(p, max_order, tol * 0.1);
    auto w = [&](double t) { return std::exp(-p.g * t * t * t * t - p.a * t * t); };
    const double den = integrate_rel(w, -T, T, tol);
    u_.resize(static_cast<std::size_t>(max_order / 2) + 1);
    for (int k = 0; 2 * k <= max_order; ++k) {
        auto f = [&](double t) { return std::pow(t, 2 * k) * w(t); };
        u_[static_cast<std::size_t>(k)] = integrate_rel(f, -T, T, tol) / den;
    }
}

double MomentTable::max_step_ratio() const {
    double r = 0.0;
    for (std::size_t k = 0; k + 1 < u_.size(); ++k) r = std::max(r, u_[k + 1] / u_[k]);
    return r;
}

double MomentTable::step_ratio_bound(int order) const {
    if (order < 0 || order % 2 != 0) throw std::domain_error("step_ratio_bound: even order");
    if (order + 2 <= max_order_) {
        // housed: ratios are nondecreasing in the order (log-convexity),
        // so the ratio at `order` bounds everything below it
        double r = 0.0;
        for (int m = 0; m + 2 <= order + 2; m += 2)
            r = std::max(r, u(m + 2) / u(m));
        return r;
    }
    // Closed form valid at every even order m: combining the recursion
    // (m+1)u[m] = 2a u[m+2] + 4g u[m+4] with log-convexity R(m)^2 <= u[m+4]/u[m]
    // gives R(m) <= (|a| + sqrt(a^2 + 4g(m+1)))/(4g).
    const double aa = std::abs(params_.a);
    const double m = static_cast<double>(order);
    double bound = (aa + std::sqrt(aa * aa + 4.0 * params_.g * (m + 1.0))) / (4.0 * params_.g);
    return std::max(bound, max_step_ratio());
}

double moment_recursion_residual(const MomentTable& table, int k) {
    if (k < 0 || 2 * k + 4 > table.max_order())
        throw std::out_of_range("moment_recursion_residual: orders 2k..2k+4 must be housed");
    const auto& p = table.params();
    return (2.0 * k + 1.0) * table.u(2 * k) - 2.0 * p.a * table.u(2 * k + 2) -
           4.0 * p.g * table.u(2 * k + 4);
}

GSParams gs_couplings(const SingleSiteParams& p, int N) {
    p.validate();
    if (N < 1) throw std::invalid_argument("gs_couplings: N must be >= 1");
    GSParams out;
    out.N = N;
    out.g_tilde = std::pow(12.0 * p.g, -0.25);
    out.a_tilde = 2.0 * p.a * out.g_tilde * out.g_tilde;
    out.c_N = out.g_tilde * std::pow(static_cast<double>(N), -0.75);
    out.d_N = (1.0 - out.a_tilde / std::sqrt(static_cast<double>(N))) / static_cast<double>(N);
    return out;
}

}  // namespace phi4tc
