#pragma once

#include <cstdint>
#include <vector>

#include "phi4tc/graph.hpp"
#include "phi4tc/single_site.hpp"

namespace phi4tc {

/// Weighted edge of a spin system; `y == n_spins` denotes the ghost.
struct CouplingEdge {
    int x, y;
    double k;
    bool internal = false;
};

/// The Griffiths-Simon graph Lambda x K_N with a ghost: internal edges carry
/// d_N, external ones beta c_N^2 J_{x,y}, ghost ones beta c_N h_x.
class BlockGraph {
  public:
    BlockGraph(InteractionGraph base, int N, const SingleSiteParams& params, double beta,
               std::vector<double> h);

    int n_blocks() const { return base_.size(); }
    int N() const { return gs_.N; }
    int n_spins() const { return base_.size() * gs_.N; }
    int ghost() const { return n_spins(); }
    int spin(int block, int i) const { return block * gs_.N + i; }
    int block_of(int spin) const { return spin / gs_.N; }

    const GSParams& gs() const { return gs_; }
    double beta() const { return beta_; }
    const InteractionGraph& base() const { return base_; }
    const std::vector<double>& field() const { return h_; }

    /// All positive-coupling edges in a fixed deterministic order
    /// (internal by block then pair, external by base pair, ghost last).
    const std::vector<CouplingEdge>& edges() const { return edges_; }
    std::int64_t n_internal() const { return n_internal_; }

  private:
    InteractionGraph base_;
    GSParams gs_;
    double beta_;
    std::vector<double> h_;
    std::vector<CouplingEdge> edges_;
    std::int64_t n_internal_ = 0;
};

}  // namespace phi4tc
