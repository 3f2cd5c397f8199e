#pragma once

#include <numeric>
#include <vector>

namespace lateops {

// Union-find with path halving and union by size.
class DisjointSet {
  public:
    explicit DisjointSet(int n = 0) { reset(n); }

    void reset(int n) {
        parent_.resize(static_cast<std::size_t>(n));
        std::iota(parent_.begin(), parent_.end(), 0);
        size_.assign(static_cast<std::size_t>(n), 1);
        components_ = n;
    }

    // Extends the universe with singleton elements.
    void grow_to(int n) {
        while (static_cast<int>(parent_.size()) < n) {
            parent_.push_back(static_cast<int>(parent_.size()));
            size_.push_back(1);
            ++components_;
        }
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    bool same(int a, int b) { return find(a) == find(b); }
    int components() const { return components_; }
    int size() const { return static_cast<int>(parent_.size()); }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_ = 0;
};

}  // namespace lateops
