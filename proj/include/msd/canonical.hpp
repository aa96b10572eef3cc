#pragma once

#include "msd/curves.hpp"

namespace msd {

namespace detail {

// Deterministic relabeling: breadth-first over darts from `start`, exploring
// rot before alpha. Returns old->new permutation.
inline std::vector<int> bfs_labels(const CombinatorialMap& m, int start) {
    std::vector<int> perm(m.dart_count(), -1);
    std::vector<int> queue{start};
    perm[start] = 0;
    int next = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
        int x = queue[q];
        for (int y : {m.rot[x], m.alpha[x]})
            if (perm[y] < 0) {
                perm[y] = next++;
                queue.push_back(y);
            }
    }
    return perm;
}

inline std::vector<int> encode(const CombinatorialMap& m,
                               const std::vector<std::vector<Curve>>& families,
                               const std::vector<int>& perm) {
    int n = m.dart_count();
    std::vector<int> inv(n);
    for (int d = 0; d < n; ++d) inv[perm[d]] = d;
    std::vector<int> code;
    code.reserve(2 * n + 16);
    for (int i = 0; i < n; ++i) {
        code.push_back(perm[m.rot[inv[i]]]);
        code.push_back(perm[m.alpha[inv[i]]]);
    }
    for (const auto& fam : families) {
        code.push_back(-2);
        std::vector<std::vector<int>> curves;
        for (const auto& c : fam) {
            std::vector<int> ds;
            for (int d : c.walk) {
                ds.push_back(perm[d]);
                ds.push_back(perm[m.alpha[d]]);
            }
            std::sort(ds.begin(), ds.end());
            curves.push_back(std::move(ds));
        }
        std::sort(curves.begin(), curves.end());
        for (auto& cv : curves) {
            code.push_back(-3);
            code.insert(code.end(), cv.begin(), cv.end());
        }
    }
    return code;
}

}  // namespace detail

// Lexicographically least encoding over all start darts; the permutation that
// realizes it gives a numbering invariant under dart relabeling.
inline std::pair<std::vector<int>, std::vector<int>> canonical_permutation(
    const CombinatorialMap& m, const std::vector<std::vector<Curve>>& families) {
    require(m.connected(), "Disconnected", "canonical form needs a connected map");
    std::vector<int> best_code, best_perm;
    for (int s = 0; s < m.dart_count(); ++s) {
        auto perm = detail::bfs_labels(m, s);
        auto code = detail::encode(m, families, perm);
        if (best_code.empty() || code < best_code) {
            best_code = std::move(code);
            best_perm = std::move(perm);
        }
    }
    if (m.dart_count() == 0) best_perm.clear();
    return {best_perm, best_code};
}

inline std::vector<int> canonical_code(const CombinatorialMap& m,
                                       const std::vector<std::vector<Curve>>& families) {
    return canonical_permutation(m, families).second;
}

// Dart bijection test commuting with rot and alpha and carrying curve
// families onto each other (family indices matter unless allow_relabel).
inline bool map_isomorphic(const CombinatorialMap& m1,
                           const std::vector<std::vector<Curve>>& f1,
                           const CombinatorialMap& m2,
                           const std::vector<std::vector<Curve>>& f2,
                           bool allow_family_relabel = false) {
    if (m1.dart_count() != m2.dart_count()) return false;
    if (f1.size() != f2.size()) return false;
    if (m1.dart_count() == 0) return true;
    require(m1.connected() && m2.connected(), "Disconnected",
            "map_isomorphic compares connected maps");
    if (!allow_family_relabel) return canonical_code(m1, f1) == canonical_code(m2, f2);
    std::vector<int> idx(f2.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto c1 = canonical_code(m1, f1);
    do {
        std::vector<std::vector<Curve>> g;
        for (int i : idx) g.push_back(f2[i]);
        if (c1 == canonical_code(m2, g)) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

inline bool map_isomorphic(const CombinatorialMap& m1, const CombinatorialMap& m2) {
    return map_isomorphic(m1, {}, m2, {});
}

}  // namespace msd
