#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace tomoroute {

/// A cyclic visiting order: a permutation of {0..n-1}, interpreted cyclically
/// (the transition from the last index back to the first is part of the cost).
struct Tour {
    std::vector<int> order;

    Tour() = default;
    explicit Tour(std::vector<int> o) : order(std::move(o)) {}

    int size() const { return static_cast<int>(order.size()); }

    /// 0,1,...,n-1 — the conventional order of a settings set.
    static Tour identity(int n) {
        if (n < 1) throw std::invalid_argument("tour size must be >= 1");
        Tour t;
        t.order.resize(static_cast<std::size_t>(n));
        std::iota(t.order.begin(), t.order.end(), 0);
        return t;
    }

    bool is_permutation() const {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : order) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
        return n > 0;
    }
};

/// Block-wise product tour: for each element of `outer` (slow index over set
/// A), visit the whole `inner` tour (fast index over set B). Product indexing
/// matches product_settings: index(a, b) = a * |B| + b.
inline Tour nest_tours(const Tour& inner, const Tour& outer) {
    if (!inner.is_permutation() || !outer.is_permutation())
        throw std::invalid_argument("nest_tours requires valid tours on both factors");
    const int nb = inner.size();
    Tour out;
    out.order.reserve(static_cast<std::size_t>(outer.size()) * static_cast<std::size_t>(nb));
    for (int a : outer.order)
        for (int b : inner.order) out.order.push_back(a * nb + b);
    return out;
}

} // namespace tomoroute
