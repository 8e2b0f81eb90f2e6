#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace phi4tc {

/// Parameters of the single-site measure rho_{g,a}(t) ~ exp(-g t^4 - a t^2).
struct SingleSiteParams {
    double g = 1.0;  // quartic coupling, must be > 0
    double a = 0.0;  // quadratic coupling, any sign

    void validate() const {
        if (!(g > 0.0)) throw std::invalid_argument("SingleSiteParams: g must be positive");
    }
};

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr double kDefaultResidualTol = 1e-8;

/// <t^order> under rho_{g,a}, by adaptive quadrature on [-T,T] with a
/// certified quartic tail cutoff. Odd orders are rejected; by symmetry they
/// vanish, and callers that need the raw-moment path use raw_moment().
double single_site_moment(const SingleSiteParams& p, int order, double tol = kDefaultQuadTol);

/// Raw moment allowing odd orders (returns exactly 0 for odd order).
double raw_moment(const SingleSiteParams& p, int order, double tol = kDefaultQuadTol);

/// Normalisation z_{g,a} = integral of exp(-g t^4 - a t^2).
double partition_value(const SingleSiteParams& p, double tol = kDefaultQuadTol);

/// Cache of even moments u[2k] = <t^{2k}>, built once, read concurrently.
class MomentTable {
  public:
    MomentTable(SingleSiteParams p, int max_order = 64, double tol = kDefaultQuadTol);

    double u(int order) const {
        if (order < 0 || order % 2 != 0) throw std::domain_error("MomentTable: order must be even and >= 0");
        if (order > max_order_) throw std::out_of_range("MomentTable: order beyond housed range");
        return u_[static_cast<std::size_t>(order / 2)];
    }
    int max_order() const { return max_order_; }
    double tol() const { return tol_; }
    const SingleSiteParams& params() const { return params_; }

    /// Largest u[2k+2]/u[2k] over the housed range (ratios are nondecreasing
    /// in k by log-convexity, so this is the last one).
    double max_step_ratio() const;

    /// Upper bound on u[m+2]/u[m] valid for ALL even m >= housed orders:
    /// from the integration-by-parts recursion and u[2k]/u[2k+2] <= u0/u2.
    double step_ratio_bound(int order) const;

  private:
    SingleSiteParams params_;
    int max_order_;
    double tol_;
    std::vector<double> u_;
};

/// (2k+1)u[2k] - 2a u[2k+2] - 4g u[2k+4]; vanishes exactly for rho_{g,a}.
double moment_recursion_residual(const MomentTable& table, int k);

/// Griffiths-Simon coupling constants for the block Ising model on K_N.
/// Chosen so that (c_N N)^p mu[sigma_1...sigma_p] -> u[p] as N -> infinity.
struct GSParams {
    int N = 1;
    double g_tilde = 0.0;  // (12 g)^{-1/4}
    double a_tilde = 0.0;  // 2 a g_tilde^2
    double c_N = 0.0;      // g_tilde N^{-3/4}
    double d_N = 0.0;      // (1/N)(1 - a_tilde/sqrt(N))
};

GSParams gs_couplings(const SingleSiteParams& p, int N);

}  // namespace phi4tc
