#pragma once

#include <cstdint>
#include <vector>

#include "phi4tc/moment_map.hpp"

namespace phi4tc {

/// Integer-valued current on the pairs of a finite vertex set plus a ghost.
/// Vertices are 0..n-1; the ghost is index n. Values are stored dense on
/// unordered pairs; degree and source caches are kept consistent.
class Current {
  public:
    explicit Current(int n_vertices)
        : n_(n_vertices),
          values_(static_cast<std::size_t>(n_vertices + 1) * (n_vertices + 1), 0),
          degree_(static_cast<std::size_t>(n_vertices + 1), 0) {}

    int size() const { return n_; }
    int ghost() const { return n_; }

    int value(int x, int y) const { return values_[idx(x, y)]; }
    void set(int x, int y, int v);
    void add(int x, int y, int delta) { set(x, y, value(x, y) + delta); }

    /// Degree Delta n(x) = sum_y n_{x,y} (y runs over vertices and ghost).
    int degree(int x) const { return degree_[static_cast<std::size_t>(x)]; }
    /// L1 norm |n|.
    std::int64_t total() const { return total_; }

    /// Sources: vertices (ghost excluded) of odd degree.
    std::vector<int> sources() const {
        std::vector<int> s;
        for (int x = 0; x < n_; ++x)
            if (degree(x) % 2 != 0) s.push_back(x);
        return s;
    }
    bool sources_equal(const Moment& m) const {
        auto s = sources();
        auto t = m.sources();
        return s == t;
    }

    friend Current operator+(const Current& lhs, const Current& rhs) {
        Current out = lhs;
        for (int x = 0; x <= lhs.n_; ++x)
            for (int y = x + 1; y <= lhs.n_; ++y)
                if (rhs.value(x, y) != 0) out.add(x, y, rhs.value(x, y));
        return out;
    }

  private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(y);
    }
    int n_;
    std::vector<int> values_;
    std::vector<int> degree_;
    std::int64_t total_ = 0;
};

inline void Current::set(int x, int y, int v) {
    if (x == y || x < 0 || y < 0 || x > n_ || y > n_)
        throw std::out_of_range("Current::set: bad pair");
    if (v < 0) throw std::invalid_argument("Current::set: negative value");
    int old = value(x, y);
    values_[idx(x, y)] = v;
    values_[idx(y, x)] = v;
    degree_[static_cast<std::size_t>(x)] += v - old;
    degree_[static_cast<std::size_t>(y)] += v - old;
    total_ += v - old;
}

}  // namespace phi4tc
