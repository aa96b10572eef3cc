#pragma once

#include <functional>
#include <set>
#include <sstream>

#include "msd/core.hpp"

namespace msd {

// Finite simplicial complex: simplices as sorted vertex lists, closed under
// taking faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_top_cells(const std::vector<std::vector<int>>& tops) {
        SimplicialComplex k;
        for (auto t : tops) {
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            k.insert_with_faces(t);
        }
        return k;
    }

    const std::set<std::vector<int>>& simplices() const { return simplices_; }

    int dimension() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, (int)s.size() - 1);
        return d;
    }

    bool contains(const std::vector<int>& s) const { return simplices_.count(s) > 0; }

    int euler() const {
        int chi = 0;
        for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
        return chi;
    }

    std::vector<std::vector<int>> cells_of_dim(int d) const {
        std::vector<std::vector<int>> out;
        for (const auto& s : simplices_)
            if ((int)s.size() == d + 1) out.push_back(s);
        return out;
    }

    std::vector<std::vector<int>> top_cells() const { return cells_of_dim(dimension()); }

    bool pure() const {
        int d = dimension();
        for (const auto& s : simplices_) {
            if ((int)s.size() - 1 == d) continue;
            bool has_coface = false;
            for (const auto& t : cells_of_dim((int)s.size()))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    has_coface = true;
                    break;
                }
            if (!has_coface) return false;
        }
        return true;
    }

    // components via shared vertices
    int component_count() const {
        std::map<int, int> root;
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& s : simplices_)
            for (int v : s)
                if (!root.count(v)) root[v] = v;
        for (const auto& s : simplices_)
            for (size_t i = 1; i < s.size(); ++i) {
                int a = find(s[0]), b = find(s[i]);
                if (a != b) root[a] = b;
            }
        std::set<int> reps;
        for (auto& [v, r] : root) reps.insert(find(v));
        return (int)reps.size();
    }

    SimplicialComplex link(int v) const {
        SimplicialComplex l;
        for (const auto& s : simplices_) {
            auto it = std::find(s.begin(), s.end(), v);
            if (it == s.end()) continue;
            std::vector<int> t;
            for (int w : s)
                if (w != v) t.push_back(w);
            if (!t.empty()) l.simplices_.insert(t);
        }
        return l;
    }

    std::set<int> vertex_set() const {
        std::set<int> out;
        for (const auto& s : simplices_) out.insert(s.begin(), s.end());
        return out;
    }

    // Greedy elementary collapses, lexicographic free-face order. True when
    // the complex collapses to a single vertex.
    bool collapses_to_point() const {
        std::set<std::vector<int>> cur = simplices_;
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = cur.begin(); it != cur.end(); ++it) {
                const auto& sigma = *it;
                // count proper cofaces
                std::vector<int> coface;
                bool several = false;
                for (const auto& tau : cur) {
                    if (tau.size() != sigma.size() + 1) continue;
                    if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
                        if (!coface.empty()) {
                            several = true;
                            break;
                        }
                        coface = tau;
                    }
                }
                if (several || coface.empty()) continue;
                // sigma must have no larger cofaces either
                bool larger = false;
                for (const auto& tau : cur) {
                    if (tau.size() <= sigma.size() + 1) continue;
                    if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
                        larger = true;
                        break;
                    }
                }
                if (larger) continue;
                cur.erase(coface);
                cur.erase(sigma);
                progress = true;
                break;
            }
        }
        return cur.size() == 1 && cur.begin()->size() == 1;
    }

private:
    void insert_with_faces(const std::vector<int>& s) {
        int n = (int)s.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> f;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) f.push_back(s[i]);
            simplices_.insert(f);
        }
    }

    std::set<std::vector<int>> simplices_;
    friend SimplicialComplex barycentric_subdivision(const SimplicialComplex&,
                                                     std::map<std::vector<int>, int>*);
};

// Standard barycentric subdivision. New vertex ids are assigned to the old
// simplices in lexicographic order; `names` (optional) receives the mapping.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k,
                                                 std::map<std::vector<int>, int>* names = nullptr) {
    std::map<std::vector<int>, int> id;
    int next = 0;
    for (const auto& s : k.simplices()) id[s] = next++;
    if (names) *names = id;
    // top cells of sd = maximal chains; generate per top cell via vertex
    // orderings
    std::vector<std::vector<int>> tops;
    for (const auto& t : k.top_cells()) {
        std::vector<int> perm = t;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> chain_cell;
            std::vector<int> prefix;
            for (int v : perm) {
                prefix.push_back(v);
                std::vector<int> sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain_cell.push_back(id.at(sorted));
            }
            std::sort(chain_cell.begin(), chain_cell.end());
            tops.push_back(chain_cell);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_top_cells(tops);
}

// boundary of the standard d+1-simplex (a triangulated d-sphere)
inline SimplicialComplex boundary_of_simplex(int d) {
    std::vector<std::vector<int>> tops;
    std::vector<int> all(d + 2);
    std::iota(all.begin(), all.end(), 0);
    for (int skip = 0; skip < d + 2; ++skip) {
        std::vector<int> f;
        for (int v : all)
            if (v != skip) f.push_back(v);
        tops.push_back(f);
    }
    return SimplicialComplex::from_top_cells(tops);
}

// Closed-manifold surrogate: pure, ridges in exactly two facets, vertex
// links connected with the sphere Euler characteristic.
inline void check_closed_manifold(const SimplicialComplex& k) {
    int d = k.dimension();
    require(d >= 1, "NotClosedManifold", "dimension too small");
    require(k.pure(), "NotClosedManifold", "complex is not pure");
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& t : k.top_cells())
        for (size_t i = 0; i < t.size(); ++i) {
            std::vector<int> r;
            for (size_t j = 0; j < t.size(); ++j)
                if (j != i) r.push_back(t[j]);
            ridge_count[r]++;
        }
    for (auto& [r, c] : ridge_count)
        require(c == 2, "NotClosedManifold", "a ridge lies in " + std::to_string(c) + " facets");
    int want = 1 + ((d - 1) % 2 == 0 ? 1 : -1);
    for (int v : k.vertex_set()) {
        auto l = k.link(v);
        require(l.euler() == want, "NotClosedManifold", "vertex link has wrong chi");
        if (d >= 2)
            require(l.component_count() == 1, "NotClosedManifold", "vertex link disconnected");
    }
}

// plain text: one simplex per line, sorted integer vertex lists, '#' comments
inline SimplicialComplex parse_complex(const std::string& text) {
    std::vector<std::vector<int>> tops;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<int> s;
        int v;
        while (ls >> v) s.push_back(v);
        if (!ls.eof())
            fail("MalformedLine", "bad simplex on line " + std::to_string(lineno));
        if (!s.empty()) tops.push_back(s);
    }
    require(!tops.empty(), "MalformedLine", "no simplices in input");
    return SimplicialComplex::from_top_cells(tops);
}

inline std::string serialize_complex(const SimplicialComplex& k) {
    std::string out;
    for (const auto& t : k.top_cells()) {
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(t[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace msd
