#include "phi4tc/current_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "phi4tc/quadrature.hpp"

namespace phi4tc {

namespace {

struct Edge {
    int x, y;         // y == graph.size() means ghost
    double coupling;  // beta*J or beta*h_x
};

std::vector<Edge> active_edges(const InteractionGraph& graph, double beta,
                               const std::vector<double>& h) {
    if (static_cast<int>(h.size()) != graph.size())
        throw std::invalid_argument("field size mismatch");
    std::vector<Edge> edges;
    for (auto [x, y] : graph.positive_edges())
        if (beta * graph.coupling(x, y) > 0.0) edges.push_back({x, y, beta * graph.coupling(x, y)});
    for (int x = 0; x < graph.size(); ++x) {
        if (h[static_cast<std::size_t>(x)] < 0.0)
            throw std::invalid_argument("current weights require h >= 0");
        if (beta * h[static_cast<std::size_t>(x)] > 0.0)
            edges.push_back({x, graph.size(), beta * h[static_cast<std::size_t>(x)]});
    }
    return edges;
}

// Odd-multiplicity vertices must sit in a component of the active-edge graph
// that either pairs them up or reaches the ghost.
bool parity_feasible(const InteractionGraph& graph, const std::vector<Edge>& edges,
                     const Moment& A) {
    const int n = graph.size();
    std::vector<int> comp(static_cast<std::size_t>(n + 1), -1);
    int ncomp = 0;
    for (int s = 0; s <= n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                int w = -1;
                if (e.x == v) w = e.y;
                else if (e.y == v) w = e.x;
                if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<int> odd(static_cast<std::size_t>(ncomp), 0);
    for (int x = 0; x < n; ++x)
        if (A.at(x) % 2 != 0) odd[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])] ^= 1;
    const int ghost_comp = comp[static_cast<std::size_t>(n)];
    for (int c = 0; c < ncomp; ++c)
        if (odd[static_cast<std::size_t>(c)] && c != ghost_comp) return false;
    return true;
}

// (1/z) * integral |t|^p exp(q t^2) drho_{g,a}(t); finite since g > 0.
double abs_moment_tilted(const SingleSiteParams& p, int power, double q) {
    const double gq = p.g, aq = p.a - q;
    // cutoff: g t^4 dominates everything past T
    double T = std::max(2.0, std::pow((power + 8.0 + 4.0 * std::abs(aq)) / gq, 0.5));
    for (int i = 0; i < 100; ++i) {
        double logtail = power * std::log(T) - gq * T * T * T * T + std::abs(aq) * T * T;
        if (logtail < -60.0) break;
        T *= 1.25;
    }
    auto f = [&](double t) {
        return std::pow(std::abs(t), power) * std::exp(-gq * t * t * t * t - aq * t * t);
    };
    auto w = [&](double t) { return std::exp(-p.g * t * t * t * t - p.a * t * t); };
    const double scale = std::exp(-(p.g + std::abs(p.a)));
    double num = integrate(f, -T, T, 1e-12 * scale * std::max(1.0, std::pow(T, power)));
    double den = integrate(w, -T, T, 1e-12 * scale);
    return num / den;
}

}  // namespace

double current_weight(const Current& n, const Moment& A, double beta,
                      const std::vector<double>& h, const InteractionGraph& graph,
                      const MomentTable& moments) {
    if (!n.sources_equal(A)) throw std::invalid_argument("current_weight: dn != dA");
    double lg = 0.0;
    for (int x = 0; x < graph.size(); ++x) {
        for (int y = x + 1; y < graph.size(); ++y) {
            int v = n.value(x, y);
            if (v == 0) continue;
            double k = beta * graph.coupling(x, y);
            if (k <= 0.0) return 0.0;
            lg += v * std::log(k) - std::lgamma(v + 1.0);
        }
        int vg = n.value(x, n.ghost());
        if (vg > 0) {
            double k = beta * h[static_cast<std::size_t>(x)];
            if (k <= 0.0) return 0.0;
            lg += vg * std::log(k) - std::lgamma(vg + 1.0);
        }
    }
    double mom = 1.0;
    for (int x = 0; x < graph.size(); ++x) mom *= moments.u(n.degree(x) + A.at(x));
    return std::exp(lg) * mom;
}

bool enumerate_currents(const InteractionGraph& graph, double beta,
                        const std::vector<double>& h, const Moment& source_moment,
                        const TruncationPolicy& policy,
                        const std::function<void(const Current&)>& visit) {
    auto edges = active_edges(graph, beta, h);
    if (!parity_feasible(graph, edges, source_moment)) return false;

    const int n = graph.size();
    std::vector<int> last_edge(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].x < n) last_edge[static_cast<std::size_t>(edges[i].x)] = static_cast<int>(i);
        if (edges[i].y < n) last_edge[static_cast<std::size_t>(edges[i].y)] = static_cast<int>(i);
    }
    Current cur(n);
    std::vector<int> want_parity(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) want_parity[static_cast<std::size_t>(x)] = source_moment.at(x) % 2;

    for (int x = 0; x < n; ++x)
        if (last_edge[static_cast<std::size_t>(x)] < 0 &&
            want_parity[static_cast<std::size_t>(x)] != 0)
            return false;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == edges.size()) {
            visit(cur);
            return;
        }
        const auto& e = edges[i];
        for (int v = 0; v <= policy.edge_cap; ++v) {
            cur.set(e.x, e.y, v);
            bool ok = true;
            if (e.x < n && last_edge[static_cast<std::size_t>(e.x)] == static_cast<int>(i) &&
                cur.degree(e.x) % 2 != want_parity[static_cast<std::size_t>(e.x)])
                ok = false;
            if (ok && e.y < n && last_edge[static_cast<std::size_t>(e.y)] == static_cast<int>(i) &&
                cur.degree(e.y) % 2 != want_parity[static_cast<std::size_t>(e.y)])
                ok = false;
            if (ok && (cur.degree(e.x) > policy.site_degree_cap ||
                       (e.y < n && cur.degree(e.y) > policy.site_degree_cap)))
                ok = false;
            if (ok) rec(i + 1);
        }
        cur.set(e.x, e.y, 0);
    };
    rec(0);
    return true;
}

// Absolute bound on the weight mass excluded by the per-edge truncation from
// the source sector of A (same normalisation as the weight sums).
// For each edge, |e^z - T_cap(z)| <= |z|^{cap+1} e^{|z|} / (cap+1)! inside the
// phi integral, then e^{K|phi_x phi_y|} <= e^{K phi_x^2/2} e^{K phi_y^2/2}
// factorises the certificate into per-vertex tilted absolute moments.
double truncation_tail_mass(const TruncationPolicy& policy, const InteractionGraph& graph,
                            double beta, const std::vector<double>& h,
                            const SingleSiteParams& params, const Moment& A) {
    auto edges = active_edges(graph, beta, h);
    const int n = graph.size();

    // per-vertex quadratic tilt from AM-GM over all incident active edges
    std::vector<double> tilt(static_cast<std::size_t>(n), 0.0);
    double ghost_const = 0.0;  // ghost side of e^{K(phi^2+1)/2}
    for (const auto& e : edges) {
        tilt[static_cast<std::size_t>(e.x)] += 0.5 * e.coupling;
        if (e.y < n) tilt[static_cast<std::size_t>(e.y)] += 0.5 * e.coupling;
        else ghost_const += 0.5 * e.coupling;
    }

    double total = 0.0;
    for (const auto& e : edges) {
        const int m = policy.edge_cap + 1;
        double log_term = m * std::log(e.coupling) - std::lgamma(m + 1.0) + ghost_const;
        double prod = std::exp(log_term);
        for (int x = 0; x < n; ++x) {
            int extra = (x == e.x || x == e.y) ? m : 0;
            prod *= abs_moment_tilted(params, A.at(x) + extra,
                                      tilt[static_cast<std::size_t>(x)]);
        }
        total += prod;
    }
    return total;
}

double truncation_tail_ratio(const TruncationPolicy& policy, const InteractionGraph& graph,
                             double beta, const std::vector<double>& h,
                             const MomentTable& moments) {
    // relative to the n == 0 sourceless term, whose weight is u0^n = 1
    return truncation_tail_mass(policy, graph, beta, h, moments.params(),
                                Moment::zero(graph.size()));
}

ExpansionResult current_expansion(const InteractionGraph& graph, const SingleSiteParams& params,
                                  double beta, const std::vector<double>& h, const Moment& A,
                                  const TruncationPolicy& policy, const MomentTable& moments) {
    if (!A.admissible()) throw std::invalid_argument("current_expansion: A not in M(Lambda_g)");
    if (beta < 0.0) throw std::invalid_argument("current_expansion: beta must be >= 0");
    // degree guard: every reachable degree must be housed
    int max_a = 0;
    for (int x = 0; x < graph.size(); ++x) max_a = std::max(max_a, A.at(x));
    {
        int max_incident = 0;
        for (int x = 0; x < graph.size(); ++x) {
            int inc = static_cast<int>(graph.neighbors(x).size()) +
                      (h[static_cast<std::size_t>(x)] > 0.0 && beta > 0.0 ? 1 : 0);
            max_incident = std::max(max_incident, inc);
        }
        if (max_incident * policy.edge_cap + max_a > moments.max_order())
            throw std::range_error(
                "current_expansion: site degrees can leave the housed moment range; "
                "lower edge_cap or raise max_order");
    }

    ExpansionResult out;
    auto kahan = [](double& sum, double& comp, double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };

    double num = 0.0, cnum = 0.0;
    bool feasible = enumerate_currents(graph, beta, h, A, policy, [&](const Current& n) {
        kahan(num, cnum, current_weight(n, A, beta, h, graph, moments));
    });
    double den = 0.0, cden = 0.0;
    Moment zero = Moment::zero(graph.size());
    enumerate_currents(graph, beta, h, zero, policy, [&](const Current& n) {
        kahan(den, cden, current_weight(n, zero, beta, h, graph, moments));
    });
    out.parity_feasible = feasible;
    out.numerator = feasible ? num : 0.0;
    out.denominator = den;
    out.value = out.numerator / out.denominator;

    // absolute excluded mass bounds; weights are >= 0 (h >= 0), so
    //   value in [num/(den+t_den), (num+t_num)/den]
    double t_num = truncation_tail_mass(policy, graph, beta, h, params, A);
    double t_den =
        truncation_tail_mass(policy, graph, beta, h, params, Moment::zero(graph.size()));
    if (den > 0.0) {
        double lo = out.numerator / (out.denominator + t_den);
        double hi = (out.numerator + t_num) / out.denominator;
        out.tail_bound = std::max(std::abs(hi - out.value), std::abs(out.value - lo));
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

}  // namespace phi4tc
