#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace phi4tc {

/// Finitely supported multiplicity function A: vertices -> N with a ghost
/// component in {0,1}. phi_A = prod_x phi_x^{A_x}.
struct Moment {
    std::vector<int> a;  // per-vertex multiplicities
    int ghost = 0;       // A_g in {0,1}

    static Moment zero(int n_vertices) { return Moment{std::vector<int>(n_vertices, 0), 0}; }

    int at(int x) const { return a[static_cast<std::size_t>(x)]; }
    int total() const { return std::accumulate(a.begin(), a.end(), 0); }

    /// Membership in M(Lambda_g): total multiplicity (incl. ghost) even.
    bool admissible() const {
        return ghost >= 0 && ghost <= 1 && (total() + ghost) % 2 == 0;
    }

    /// Source set: vertices with odd multiplicity (ghost excluded by convention).
    std::vector<int> sources() const {
        std::vector<int> s;
        for (std::size_t x = 0; x < a.size(); ++x)
            if (a[x] % 2 != 0) s.push_back(static_cast<int>(x));
        return s;
    }

    /// Pointwise sum; ghost adds mod 2.
    friend Moment operator+(const Moment& lhs, const Moment& rhs) {
        if (lhs.a.size() != rhs.a.size()) throw std::invalid_argument("Moment: size mismatch");
        Moment out = lhs;
        for (std::size_t x = 0; x < out.a.size(); ++x) out.a[x] += rhs.a[x];
        out.ghost = (lhs.ghost + rhs.ghost) % 2;
        return out;
    }
};

}  // namespace phi4tc
