#pragma once

#include <functional>
#include <vector>

#include "phi4tc/current.hpp"
#include "phi4tc/graph.hpp"
#include "phi4tc/moment_map.hpp"
#include "phi4tc/single_site.hpp"

namespace phi4tc {

struct TruncationPolicy {
    int edge_cap = 14;         // per-pair cap on positive-coupling pairs
    int site_degree_cap = 62;  // keeps Delta n(x) + A_x inside the housed moments
};

/// w_{A,beta,h}(n). Requires dn = dA and h >= 0. Computed in log space.
double current_weight(const Current& n, const Moment& A, double beta,
                      const std::vector<double>& h, const InteractionGraph& graph,
                      const MomentTable& moments);

/// Visits every current with dn = d(source_moment), n_e <= cap on pairs with
/// positive coupling (ghost pairs where beta*h_x > 0), zero elsewhere.
/// Deterministic lexicographic order in a fixed edge order. Returns false if
/// the source parity is infeasible on some component (stream is then empty).
bool enumerate_currents(const InteractionGraph& graph, double beta,
                        const std::vector<double>& h, const Moment& source_moment,
                        const TruncationPolicy& policy,
                        const std::function<void(const Current&)>& visit);

/// Rigorous upper bound on the total weight mass of currents excluded by the
/// per-edge cap from the source sector of A (Taylor remainder of e^z per edge,
/// factorised into per-vertex tilted absolute moments).
double truncation_tail_mass(const TruncationPolicy& policy, const InteractionGraph& graph,
                            double beta, const std::vector<double>& h,
                            const SingleSiteParams& params, const Moment& A);

/// Same bound for the sourceless sector, relative to the n == 0 term (= 1).
double truncation_tail_ratio(const TruncationPolicy& policy, const InteractionGraph& graph,
                             double beta, const std::vector<double>& h,
                             const MomentTable& moments);

struct ExpansionResult {
    double value = 0.0;        // truncated sum ratio
    double tail_bound = 0.0;   // certified bound on the truncation-induced relative error
    double numerator = 0.0;
    double denominator = 0.0;
    bool parity_feasible = true;
    bool degree_cap_bound = false;  // true if the per-site degree cap pruned anything
};

/// <phi_A> by the current expansion over the truncated space.
ExpansionResult current_expansion(const InteractionGraph& graph, const SingleSiteParams& params,
                                  double beta, const std::vector<double>& h, const Moment& A,
                                  const TruncationPolicy& policy, const MomentTable& moments);

}  // namespace phi4tc
