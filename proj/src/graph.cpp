#include "phi4tc/graph.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace phi4tc {

InteractionGraph::InteractionGraph(int n_vertices, std::vector<std::string> labels)
    : n_(n_vertices), j_(static_cast<std::size_t>(n_vertices) * n_vertices, 0.0),
      labels_(std::move(labels)) {
    if (n_vertices < 0) throw std::invalid_argument("InteractionGraph: negative size");
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) labels_.push_back("v" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("InteractionGraph: label count mismatch");
}

void InteractionGraph::set_coupling(int x, int y, double value) {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("set_coupling: vertex");
    j_[idx(x, y)] = value;
    j_[idx(y, x)] = value;
}

std::vector<int> InteractionGraph::neighbors(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (y != x && coupling(x, y) > 0.0) out.push_back(y);
    return out;
}

std::vector<std::pair<int, int>> InteractionGraph::positive_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (coupling(x, y) > 0.0) out.emplace_back(x, y);
    return out;
}

std::vector<int> InteractionGraph::distances_from(int origin) const {
    if (origin < 0 || origin >= n_) throw std::out_of_range("distances_from: origin");
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::deque<int> queue{origin};
    dist[static_cast<std::size_t>(origin)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

ValidationReport validate_interaction(const InteractionGraph& g) {
    ValidationReport rep;
    const int n = g.size();
    for (int x = 0; x < n; ++x) {
        if (g.coupling(x, x) != 0.0) {
            rep.zero_diagonal = false;
            rep.messages.push_back("nonzero diagonal at " + g.label(x));
        }
        for (int y = 0; y < n; ++y) {
            if (g.coupling(x, y) < 0.0) {
                rep.ferromagnetic = false;
                rep.messages.push_back("C1 violation: J(" + g.label(x) + "," + g.label(y) +
                                       ") < 0");
            }
            if (g.coupling(x, y) != g.coupling(y, x)) {
                rep.symmetric = false;
                rep.messages.push_back("asymmetry at (" + g.label(x) + "," + g.label(y) + ")");
            }
        }
    }
    if (n > 0) {
        auto dist = g.distances_from(0);
        for (int x = 0; x < n; ++x) {
            if (dist[static_cast<std::size_t>(x)] < 0) {
                rep.irreducible = false;
                rep.messages.push_back("C3 violation: " + g.label(x) +
                                       " unreachable on positive-J support");
            }
        }
    }
    rep.messages.push_back("C2, C4: not applicable on a finite graph");
    return rep;
}

BoundaryProfile boundary_profile(double M, const InteractionGraph& g, int origin) {
    if (!(M > 0.0)) throw std::invalid_argument("boundary_profile: M must be positive");
    BoundaryProfile out;
    out.M = M;
    out.origin = origin;
    auto dist = g.distances_from(origin);
    out.values.resize(static_cast<std::size_t>(g.size()));
    for (int x = 0; x < g.size(); ++x) {
        int d = dist[static_cast<std::size_t>(x)];
        if (d < 0) throw std::runtime_error("boundary_profile: disconnected graph");
        double dd = std::max(1.0, static_cast<double>(d));
        out.values[static_cast<std::size_t>(x)] = std::pow(M * std::log(dd), 0.25);
    }
    return out;
}

}  // namespace phi4tc
