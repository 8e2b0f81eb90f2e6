#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phi4tc/graph.hpp"
#include "phi4tc/moment_map.hpp"
#include "phi4tc/single_site.hpp"

namespace phi4tc {

/// A correlation request for the phi^4 measure on `graph` (or on the
/// sub-volume `volume` when set; exterior spins are then frozen to eta and
/// folded into the field, h'_x = sum_{y outside} J_{x,y} eta_y).
struct CorrelationRequest {
    InteractionGraph graph;
    SingleSiteParams params;
    double beta = 1.0;
    std::vector<double> h;                  // per-vertex external field
    Moment a;                               // the observable phi_A
    std::optional<std::vector<int>> volume; // vertex subset; default = all
    std::optional<std::vector<double>> eta; // boundary condition on the complement

    /// Effective (volume, folded field) pair.
    std::pair<std::vector<int>, std::vector<double>> folded() const;
};

/// <phi_A> by tensor-product quadrature. Capacity: |volume| <= 4.
double correlate_quadrature(const CorrelationRequest& req, double tol = 1e-9);

struct EstimateWithError {
    double value = 0.0;
    double stderror = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// Metropolis estimate of <phi_A>; single-site uniform proposals with a step
/// calibrated to acceptance in [0.3,0.6] during a discarded 20% warm-up.
/// Error bars by batch means over 32 batches. Deterministic given the seed.
EstimateWithError correlate_mc(const CorrelationRequest& req, std::int64_t sweeps,
                               std::uint64_t seed);

/// Tagged monotone local functions for FKG tests.
struct MonotoneFn {
    enum Kind { kCoordinate, kClamp, kHalfSpaceIndicator } kind = kCoordinate;
    int vertex = 0;
    double lo = -1.0, hi = 1.0;  // clamp bounds
    double level = 0.0;          // half-space level
    double operator()(const std::vector<double>& phi) const;
};

struct FkgPairEstimate {
    EstimateWithError fg, f, g;
    double covariance = 0.0;     // <fg> - <f><g>
    double cov_stderror = 0.0;   // jackknife over batches
};

/// Joint single-chain estimates of <fg>, <f>, <g> with jackknifed covariance.
FkgPairEstimate fkg_pair_estimate(const CorrelationRequest& req, const MonotoneFn& f,
                                  const MonotoneFn& g, std::int64_t sweeps, std::uint64_t seed);

}  // namespace phi4tc
