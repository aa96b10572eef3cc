#pragma once

#include "msd/curves.hpp"

namespace msd {

// GF(2) vectors as bool vectors; tiny dimensions here.
using Gf2Vec = std::vector<uint8_t>;

inline void gf2_add(Gf2Vec& a, const Gf2Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Row-reduce in place; returns pivot columns. Deterministic (lowest column
// first).
inline std::vector<int> gf2_reduce(std::vector<Gf2Vec>& rows) {
    std::vector<int> pivots;
    size_t r = 0;
    if (rows.empty()) return pivots;
    size_t cols = rows[0].size();
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c]) gf2_add(rows[i], rows[r]);
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline int gf2_rank(std::vector<Gf2Vec> rows) { return static_cast<int>(gf2_reduce(rows).size()); }

// First-homology coordinates with Z/2 coefficients in a canonical basis.
// The basis comes from the lowest-dart-first breadth-first spanning tree of
// the map's graph: cycle-space coordinates are the indicators of non-tree
// edges, and the face-boundary relations are eliminated with fixed pivots.
// Face boundaries map to the zero vector.
class H1Basis {
public:
    explicit H1Basis(const CombinatorialMap& m) : map_(&m) {
        int V = m.vertex_count();
        std::vector<char> in_tree_edge(m.edge_count(), 0);
        std::vector<char> seen(V, 0);
        if (m.dart_count() > 0) {
            std::vector<int> queue{m.vertex_of(0)};
            seen[m.vertex_of(0)] = 1;
            for (size_t q = 0; q < queue.size(); ++q) {
                int v = queue[q];
                for (int d : m.vertex_darts(v)) {
                    int w = m.head(d);
                    if (!seen[w]) {
                        seen[w] = 1;
                        in_tree_edge[m.edge_of(d)] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        nontree_col_.assign(m.edge_count(), -1);
        for (int e = 0; e < m.edge_count(); ++e)
            if (!in_tree_edge[e]) nontree_col_[e] = ncols_++;
        // face relations
        std::vector<Gf2Vec> rels;
        for (int f = 0; f < m.face_count(); ++f) {
            Gf2Vec row(ncols_, 0);
            for (int e : m.face_edges(f)) {
                if (nontree_col_[e] >= 0) row[nontree_col_[e]] ^= 1;
            }
            rels.push_back(std::move(row));
        }
        rel_pivots_ = gf2_reduce(rels);
        rels_ = std::move(rels);
    }

    int dimension() const { return ncols_; }

    Gf2Vec class_vector(const Curve& c) const {
        Gf2Vec v(ncols_, 0);
        for (int d : c.walk) {
            int col = nontree_col_[map_->edge_of(d)];
            if (col >= 0) v[col] ^= 1;
        }
        // canonical coset representative mod the face relations
        for (size_t i = 0; i < rels_.size(); ++i)
            if (v[rel_pivots_[i]]) gf2_add(v, rels_[i]);
        return v;
    }

private:
    const CombinatorialMap* map_;
    int ncols_ = 0;
    std::vector<int> nontree_col_;
    std::vector<Gf2Vec> rels_;
    std::vector<int> rel_pivots_;
};

inline Gf2Vec h1_class_vector(const CombinatorialMap& m, const Curve& c) {
    return H1Basis(m).class_vector(c);
}

inline int h1_span_rank(const CombinatorialMap& m, const std::vector<Curve>& curves) {
    H1Basis basis(m);
    std::vector<Gf2Vec> rows;
    for (const auto& c : curves) rows.push_back(basis.class_vector(c));
    return gf2_rank(std::move(rows));
}

inline bool is_zero(const Gf2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return !x; });
}

}  // namespace msd
