#pragma once

#include <string>
#include <vector>

namespace phi4tc {

/// Finite weighted interaction graph. The ghost vertex is not stored here;
/// it enters through per-vertex field couplings beta*h_x at the point of use.
class InteractionGraph {
  public:
    InteractionGraph() = default;
    explicit InteractionGraph(int n_vertices, std::vector<std::string> labels = {});

    int size() const { return n_; }
    double coupling(int x, int y) const { return j_[idx(x, y)]; }
    void set_coupling(int x, int y, double value);

    /// Vertices y with J_{x,y} > 0, ascending.
    std::vector<int> neighbors(int x) const;
    /// Unordered pairs {x,y}, x<y, with J_{x,y} > 0, lexicographic.
    std::vector<std::pair<int, int>> positive_edges() const;

    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }

    /// BFS graph distance on the positive-J support; -1 if unreachable.
    std::vector<int> distances_from(int origin) const;

  private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y);
    }
    int n_ = 0;
    std::vector<double> j_;
    std::vector<std::string> labels_;
};

struct ValidationReport {
    bool ferromagnetic = true;   // C1
    bool symmetric = true;       // part of the matrix contract
    bool zero_diagonal = true;
    bool irreducible = true;     // C3 on the positive support
    // C2 (Gamma-invariance) and C4 (integrability) are statements about
    // infinite graphs; on a finite graph they are vacuous.
    std::vector<std::string> messages;
    bool valid() const { return ferromagnetic && symmetric && zero_diagonal && irreducible; }
};

ValidationReport validate_interaction(const InteractionGraph& g);

struct BoundaryProfile {
    double M = 1.0;
    int origin = 0;
    std::vector<double> values;  // p_x = (M log(d(o,x) v 1))^{1/4}
};

BoundaryProfile boundary_profile(double M, const InteractionGraph& g, int origin);

}  // namespace phi4tc
