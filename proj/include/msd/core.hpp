#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msd {

// Error with a stable machine-readable code ("AlphaFixedPoint", ...).
struct error : std::runtime_error {
    std::string code;
    error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

// An orientable surface as a rotation system: darts 0..n-1, `alpha` the
// fixed-point-free edge involution, `rot` the counterclockwise successor
// around each vertex. Faces are the orbits of d -> rot[alpha[d]].
class CombinatorialMap {
public:
    std::vector<int> alpha;
    std::vector<int> rot;

    CombinatorialMap() = default;
    CombinatorialMap(std::vector<int> a, std::vector<int> r)
        : alpha(std::move(a)), rot(std::move(r)) {
        check_structure();
        rebuild();
    }

    int dart_count() const { return static_cast<int>(alpha.size()); }

    int vertex_of(int d) const { return vertex_id_[d]; }
    int edge_of(int d) const { return edge_id_[d]; }
    int face_of(int d) const { return face_id_[d]; }

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return n_edges_; }
    int face_count() const { return n_faces_; }

    // phi = rot∘alpha traces faces.
    int phi(int d) const { return rot[alpha[d]]; }
    int rot_inv(int d) const { return rot_inv_[d]; }

    // Other endpoint's vertex of the edge through d.
    int head(int d) const { return vertex_id_[alpha[d]]; }

    const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[v]; }

    std::vector<int> vertex_cycle(int d) const { return orbit_of(rot, d); }
    std::vector<int> face_cycle_at(int d) const {
        std::vector<int> out;
        int x = d;
        do {
            out.push_back(x);
            x = phi(x);
        } while (x != d);
        return out;
    }
    // Face orbit of face id f, starting from its least dart.
    std::vector<int> face_cycle(int f) const { return face_cycle_at(face_min_dart_[f]); }
    int face_min_dart(int f) const { return face_min_dart_[f]; }
    int face_size(int f) const { return face_size_[f]; }

    int component_of(int d) const { return comp_id_[d]; }
    int component_count() const { return n_components_; }
    bool connected() const { return dart_count() == 0 || n_components_ == 1; }

    int euler() const { return n_vertices_ - n_edges_ + n_faces_; }

    int genus() const {
        require(connected(), "Disconnected", "genus needs a connected map");
        int chi = euler();
        require((2 - chi) % 2 == 0, "OddEuler", "non-even Euler characteristic");
        return (2 - chi) / 2;
    }

    // Corner between dart d and rot[d] at vertex_of(d); it lies on the face
    // orbit containing rot[d].
    int corner_face(int d) const { return face_id_[rot[d]]; }

    // --- surgeries (append new darts, keep existing ids stable) ---

    // Split the edge through dart d with a fresh degree-2 vertex. Returns the
    // pair of new darts (n1 pairs with d, n2 pairs with old alpha[d]); a walk
    // ... d ... becomes ... d n2 ..., a walk ... alpha(d) ... becomes
    // ... alpha(d) n1 ....
    std::pair<int, int> subdivide_edge(int d) {
        int db = alpha[d];
        int n1 = dart_count(), n2 = n1 + 1;
        alpha.push_back(0);
        alpha.push_back(0);
        rot.push_back(0);
        rot.push_back(0);
        alpha[d] = n1;
        alpha[n1] = d;
        alpha[db] = n2;
        alpha[n2] = db;
        rot[n1] = n2;
        rot[n2] = n1;
        rebuild();
        return {n1, n2};
    }

    // Insert a new edge between corner c1 and corner c2 (both corner tokens:
    // the corner after dart ci in rot order). The corners must lie on one
    // face, which splits in two. Returns the new darts (at c1, at c2).
    std::pair<int, int> insert_edge(int c1, int c2) {
        require(corner_face(c1) == corner_face(c2), "CornersNotCofacial",
                "insert_edge needs corners on a single face");
        int n1 = dart_count(), n2 = n1 + 1;
        alpha.push_back(n2);
        alpha.push_back(n1);
        rot.push_back(0);
        rot.push_back(0);
        if (c1 == c2) {
            // loop in one corner
            rot[n2] = rot[c1];
            rot[n1] = n2;
            rot[c1] = n1;
        } else {
            rot[n1] = rot[c1];
            rot[c1] = n1;
            rot[n2] = rot[c2];
            rot[c2] = n2;
        }
        rebuild();
        return {n1, n2};
    }

    // Insert a pendant bigon at the corner after dart c: a fresh vertex u and
    // two parallel edges from vertex_of(c) to u. Returns the four new darts
    // {p1,q1 at the old vertex, p2,q2 at u}; the bigon face is {q1,p2}.
    std::array<int, 4> insert_bigon(int c) {
        int p1 = dart_count(), q1 = p1 + 1, p2 = p1 + 2, q2 = p1 + 3;
        for (int i = 0; i < 4; ++i) {
            alpha.push_back(0);
            rot.push_back(0);
        }
        alpha[p1] = p2;
        alpha[p2] = p1;
        alpha[q1] = q2;
        alpha[q2] = q1;
        rot[q1] = rot[c];
        rot[c] = p1;
        rot[p1] = q1;
        rot[p2] = q2;
        rot[q2] = p2;
        rebuild();
        return {p1, q1, p2, q2};
    }

    void check_structure() const {
        int n = dart_count();
        require(static_cast<int>(rot.size()) == n, "BadMap", "alpha/rot size mismatch");
        std::vector<char> seen(n, 0);
        for (int d = 0; d < n; ++d) {
            require(alpha[d] >= 0 && alpha[d] < n, "BadMap", "alpha out of range");
            require(rot[d] >= 0 && rot[d] < n, "BadMap", "rot out of range");
            require(alpha[d] != d, "AlphaFixedPoint", "alpha fixes dart " + std::to_string(d));
            seen[rot[d]]++;
        }
        for (int d = 0; d < n; ++d) {
            require(alpha[alpha[d]] == d, "AlphaNotInvolution", "alpha is not an involution");
            require(seen[d] == 1, "BadMap", "rot is not a permutation");
        }
    }

    void rebuild() {
        int n = dart_count();
        rot_inv_.assign(n, 0);
        for (int d = 0; d < n; ++d) rot_inv_[rot[d]] = d;
        n_vertices_ = label_orbits(rot, vertex_id_);
        {
            edge_id_.assign(n, -1);
            n_edges_ = 0;
            for (int d = 0; d < n; ++d)
                if (edge_id_[d] < 0) {
                    edge_id_[d] = edge_id_[alpha[d]] = n_edges_++;
                }
        }
        {
            face_id_.assign(n, -1);
            face_min_dart_.clear();
            face_size_.clear();
            n_faces_ = 0;
            for (int d = 0; d < n; ++d)
                if (face_id_[d] < 0) {
                    int x = d, sz = 0;
                    do {
                        face_id_[x] = n_faces_;
                        x = phi(x);
                        ++sz;
                    } while (x != d);
                    face_min_dart_.push_back(d);
                    face_size_.push_back(sz);
                    ++n_faces_;
                }
        }
        vertex_darts_.assign(n_vertices_, {});
        for (int d = 0; d < n; ++d) vertex_darts_[vertex_id_[d]].push_back(d);
        // components via <alpha, rot>
        comp_id_.assign(n, -1);
        n_components_ = 0;
        std::vector<int> stack;
        for (int d = 0; d < n; ++d) {
            if (comp_id_[d] >= 0) continue;
            stack.push_back(d);
            comp_id_[d] = n_components_;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : {alpha[x], rot[x]})
                    if (comp_id_[y] < 0) {
                        comp_id_[y] = n_components_;
                        stack.push_back(y);
                    }
            }
            ++n_components_;
        }
    }

    // Edge ids of a face boundary, with multiplicity.
    std::vector<int> face_edges(int f) const {
        std::vector<int> out;
        for (int d : face_cycle(f)) out.push_back(edge_id_[d]);
        return out;
    }

private:
    static std::vector<int> orbit_of(const std::vector<int>& perm, int d) {
        std::vector<int> out;
        int x = d;
        do {
            out.push_back(x);
            x = perm[x];
        } while (x != d);
        return out;
    }

    int label_orbits(const std::vector<int>& perm, std::vector<int>& id) {
        int n = dart_count(), k = 0;
        id.assign(n, -1);
        for (int d = 0; d < n; ++d)
            if (id[d] < 0) {
                int x = d;
                do {
                    id[x] = k;
                    x = perm[x];
                } while (x != d);
                ++k;
            }
        return k;
    }

    std::vector<int> rot_inv_, vertex_id_, edge_id_, face_id_, comp_id_;
    std::vector<int> face_min_dart_, face_size_;
    std::vector<std::vector<int>> vertex_darts_;
    int n_vertices_ = 0, n_edges_ = 0, n_faces_ = 0, n_components_ = 0;
};

// build_map: validated constructor; rejects disconnected maps unless allowed.
inline CombinatorialMap build_map(std::vector<int> alpha, std::vector<int> rot,
                                  bool allow_disconnected = false) {
    CombinatorialMap m(std::move(alpha), std::move(rot));
    if (!allow_disconnected)
        require(m.connected(), "Disconnected", "map has several components");
    return m;
}

inline int genus(const CombinatorialMap& m) { return m.genus(); }
inline int euler(const CombinatorialMap& m) { return m.euler(); }
inline int components(const CombinatorialMap& m) { return m.component_count(); }

// The canonical sphere: two vertices joined by two parallel edges. This is
// the terminal genus-0 object for the destabilization calculus.
inline CombinatorialMap sphere_bigon_map() {
    // darts: 0=a1,1=b1 at vertex s1; 2=a2,3=b2 at s2; edges {0,2},{1,3}
    return CombinatorialMap({2, 3, 0, 1}, {1, 0, 3, 2});
}

}  // namespace msd
