#pragma once

#include "msd/gen1.hpp"
#include "msd/surgery.hpp"

namespace msd {

namespace detail {

// Collapse removable bigons whose edges lie in `candidate_edges`; repeats to
// a fixpoint. Updates families through the remaps.
inline void collapse_candidate_bigons(CombinatorialMap& m, std::vector<std::vector<Curve>>& fams,
                                      std::vector<char>& candidate_edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto on_curve = curve_edge_mask(m, fams);
        for (int f = 0; f < m.face_count() && !changed; ++f) {
            if (!bigon_collapsible(m, f, on_curve)) continue;
            auto cyc = m.face_cycle(f);
            int e1 = m.edge_of(cyc[0]), e2 = m.edge_of(cyc[1]);
            if (!candidate_edges[e1] || !candidate_edges[e2]) continue;
            int chi = m.euler();
            auto res = remove_edges(m, {e1, e2});
            require(res.map.euler() == chi, "BadSurgery", "bigon collapse changed chi");
            // carry the candidate mask over
            std::vector<char> next_mask(res.map.edge_count(), 0);
            for (int d = 0; d < m.dart_count(); ++d)
                if (res.remap[d] >= 0 && candidate_edges[m.edge_of(d)])
                    next_mask[res.map.edge_of(res.remap[d])] = 1;
            candidate_edges = std::move(next_mask);
            remap_families(fams, res.remap);
            m = std::move(res.map);
            changed = true;
        }
    }
}

}  // namespace detail

// A summand that is the terminal sphere diagram acts as the identity.
inline bool is_trivial_summand(const MultisectionDiagram& d) {
    for (const auto& f : d.families)
        if (!f.empty()) return false;
    return map_isomorphic(d.map, sphere_bigon_map());
}

// Connected sum along curve-free faces f1, f2: identify one boundary corner
// of each so the two faces merge into one.
inline MultisectionDiagram connected_sum(const MultisectionDiagram& d1,
                                         const MultisectionDiagram& d2, int f1, int f2) {
    require(d1.n == d2.n, "MismatchedN", "summands have different n");
    if (is_trivial_summand(d2)) return d1;
    if (is_trivial_summand(d1)) return d2;
    {
        auto cf1 = curve_free_faces(d1);
        require(std::count(cf1.begin(), cf1.end(), f1) == 1, "FaceNotCurveFree",
                "f1 is not a curve-free face");
        auto cf2 = curve_free_faces(d2);
        require(std::count(cf2.begin(), cf2.end(), f2) == 1, "FaceNotCurveFree",
                "f2 is not a curve-free face");
    }
    int off = d1.map.dart_count();
    int c1 = d1.map.alpha[d1.map.face_min_dart(f1)];
    int c2 = d2.map.alpha[d2.map.face_min_dart(f2)];
    std::vector<int> alpha = d1.map.alpha, rot = d1.map.rot;
    for (int d = 0; d < d2.map.dart_count(); ++d) {
        alpha.push_back(d2.map.alpha[d] + off);
        rot.push_back(d2.map.rot[d] + off);
    }
    // splice the second corner's vertex cycle into the first corner
    int r1 = rot[c1];
    rot[c1] = d2.map.rot[c2] + off;
    rot[c2 + off] = r1;
    CombinatorialMap m(std::move(alpha), std::move(rot));

    std::vector<std::vector<Curve>> fams;
    for (int i = 0; i < d1.n; ++i) {
        std::vector<Curve> fam = d1.families[i];
        for (const auto& c : d2.families[i]) {
            Curve shifted;
            for (int d : c.walk) shifted.walk.push_back(d + off);
            fam.push_back(std::move(shifted));
        }
        fams.push_back(std::move(fam));
    }

    MultisectionDiagram out;
    out.map = std::move(m);
    out.n = d1.n;
    out.families = std::move(fams);
    out.meta["name"] = "connected sum";
    return out;
}

// Stabilization: connected sum with the genus-1 sphere diagram of type k at
// the given curve-free face.
inline MultisectionDiagram stabilize(const MultisectionDiagram& d, int k, int face) {
    require(0 < k && k < d.n, "KOutOfRange", "stabilize needs 0<k<n");
    auto g1 = gen1_sphere_diagram(d.n, k);
    auto cf = curve_free_faces(g1);
    require(cf.size() == 1, "Internal", "gen1 sphere should have one curve-free face");
    auto out = connected_sum(d, g1, face, cf[0]);
    out.meta = d.meta;
    out.meta["name"] = "stabilized";
    return out;
}

struct StabilizationWitness {
    std::vector<std::pair<int, int>> A;  // (family, curve index), k curves
    std::vector<std::pair<int, int>> B;  // n-k curves
    int k = 0;
    Curve separating;
};

namespace detail {

inline std::vector<char> star_of(const CombinatorialMap& m, const std::vector<Curve*>& curves) {
    std::vector<char> edge_mask(m.edge_count(), 0);
    for (auto* c : curves)
        for (int d : c->walk) edge_mask[m.edge_of(d)] = 1;
    std::vector<char> in_star(m.face_count(), 0);
    for (int f = 0; f < m.face_count(); ++f)
        for (int e : m.face_edges(f))
            if (edge_mask[e]) {
                in_star[f] = 1;
                break;
            }
    return in_star;
}

inline bool curve_simple_walk(const CombinatorialMap& m, const Curve& c) {
    try {
        check_simple(m, c);
        return true;
    } catch (const error&) {
        return false;
    }
}

}  // namespace detail

// All witnesses (A,B) of the stabilization proposition in the cleanly
// separated state: two dual groups of parallel curves covering every family
// once, away from every other curve, whose star has a single simple
// boundary circle.
inline std::vector<StabilizationWitness> find_stabilizations(const MultisectionDiagram& d) {
    std::vector<StabilizationWitness> out;
    if (d.map.genus() == 0) return out;
    std::set<std::vector<std::pair<int, int>>> seen;

    int n = d.n;
    auto parallel = [&](std::pair<int, int> a, std::pair<int, int> b) {
        const Curve& ca = d.families[a.first][a.second];
        const Curve& cb = d.families[b.first][b.second];
        if (!disjoint(d.map, ca, cb)) return false;
        return are_parallel(d.map, ca, cb);
    };
    auto meets_once = [&](std::pair<int, int> a, std::pair<int, int> b) {
        try {
            return intersection_count(d.map, d.families[a.first][a.second],
                                      d.families[b.first][b.second]) == 1;
        } catch (const error&) {
            return false;
        }
    };

    auto grow_class = [&](std::pair<int, int> seed) {
        std::vector<std::pair<int, int>> cls{seed};
        for (int j = 0; j < n; ++j) {
            if (j == seed.first) continue;
            for (int b = 0; b < (int)d.families[j].size(); ++b)
                if (parallel(seed, {j, b})) {
                    cls.push_back({j, b});
                    break;
                }
        }
        return cls;
    };

    for (int a0 = 0; a0 < (int)d.families[0].size(); ++a0) {
        auto A = grow_class({0, a0});
        // pairwise parallel
        bool ok = true;
        for (size_t i = 0; i < A.size() && ok; ++i)
            for (size_t j = i + 1; j < A.size() && ok; ++j)
                if (!parallel(A[i], A[j])) ok = false;
        if (!ok) continue;
        int k = static_cast<int>(A.size());
        if (k >= n) continue;
        std::vector<char> inA(n, 0);
        for (auto& p : A) inA[p.first] = 1;
        int jb = 0;
        while (jb < n && inA[jb]) ++jb;
        for (int b0 = 0; b0 < (int)d.families[jb].size(); ++b0) {
            std::pair<int, int> seedB{jb, b0};
            bool dual = true;
            for (auto& pa : A)
                if (!meets_once(pa, seedB)) {
                    dual = false;
                    break;
                }
            if (!dual) continue;
            auto B = grow_class(seedB);
            if ((int)B.size() != n - k) continue;
            bool covers = true;
            for (auto& pb : B)
                if (inA[pb.first]) covers = false;
            if (!covers) continue;
            for (size_t i = 0; i < B.size() && dual; ++i)
                for (size_t j = i + 1; j < B.size() && dual; ++j)
                    if (!parallel(B[i], B[j])) dual = false;
            for (auto& pa : A)
                for (auto& pb : B)
                    if (dual && !meets_once(pa, pb)) dual = false;
            if (!dual) continue;

            std::vector<std::pair<int, int>> key;
            for (auto& p : A) key.push_back(p);
            for (auto& p : B) key.push_back(p);
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;

            // other curves must avoid A u B
            std::vector<Curve*> witness_curves;
            std::set<std::pair<int, int>> in_witness(key.begin(), key.end());
            auto dnc = const_cast<MultisectionDiagram&>(d);
            for (auto& p : key) witness_curves.push_back(&dnc.families[p.first][p.second]);
            bool clean = true;
            for (int i = 0; i < n && clean; ++i)
                for (int c = 0; c < (int)d.families[i].size() && clean; ++c) {
                    if (in_witness.count({i, c})) continue;
                    for (auto* wc : witness_curves)
                        if (!disjoint(d.map, d.families[i][c], *wc)) {
                            clean = false;
                            break;
                        }
                }
            if (!clean) continue;

            auto in_star = detail::star_of(d.map, witness_curves);
            auto rims = region_boundary(d.map, in_star);
            if (rims.size() != 1) continue;
            Curve gamma = rims[0];
            if (!detail::curve_simple_walk(d.map, gamma)) continue;
            bool gamma_clean = true;
            for (int i = 0; i < n && gamma_clean; ++i)
                for (int c = 0; c < (int)d.families[i].size() && gamma_clean; ++c) {
                    if (in_witness.count({i, c})) continue;
                    if (!disjoint(d.map, d.families[i][c], gamma)) gamma_clean = false;
                }
            if (!gamma_clean) continue;

            StabilizationWitness w;
            w.A = A;
            w.B = B;
            w.k = k;
            w.separating = gamma;
            out.push_back(std::move(w));
        }
    }
    return out;
}

// Split off the genus-1 summand carried by a witness: cut along its
// separating curve, keep the far side, cap the hole, and collapse the seam
// bigon when it matches the stabilization normal form.
inline MultisectionDiagram destabilize(const MultisectionDiagram& d,
                                       const StabilizationWitness& w) {
    require(d.map.genus() >= 1, "WitnessStale", "nothing to destabilize");
    std::set<std::pair<int, int>> in_witness;
    for (auto& p : w.A) in_witness.insert(p);
    for (auto& p : w.B) in_witness.insert(p);
    for (auto& p : in_witness) {
        require(p.first >= 0 && p.first < d.n, "WitnessStale", "family out of range");
        require(p.second >= 0 && p.second < (int)d.families[p.first].size(), "WitnessStale",
                "curve out of range");
    }

    std::vector<Curve> tracked;
    std::vector<std::pair<int, int>> tracked_slot;
    for (int i = 0; i < d.n; ++i)
        for (int c = 0; c < (int)d.families[i].size(); ++c) {
            if (in_witness.count({i, c})) continue;
            tracked.push_back(d.families[i][c]);
            tracked_slot.push_back({i, c});
        }

    CutResult cut;
    try {
        cut = cut_along(d.map, {w.separating}, tracked);
    } catch (const error& e) {
        fail("NotCleanlySeparated", e.what());
    }
    require(cut.pieces.size() == 2, "NotCleanlySeparated",
            "separating curve does not split the surface in two");
    int witness_dart = d.families[w.A[0].first][w.A[0].second].walk[0];
    int witness_side = cut.plain_image[witness_dart].first;
    int keep = 1 - witness_side;
    auto& piece = cut.pieces[keep];
    require((int)piece.tracked.size() == (int)tracked.size(), "NotCleanlySeparated",
            "some surviving curve fell on the witness side");
    require(piece.capped_genus == d.map.genus() - 1, "NotCleanlySeparated",
            "genus did not drop by one");

    MultisectionDiagram out;
    out.map = piece.map;
    out.n = d.n;
    out.families.assign(d.n, {});
    for (size_t t = 0; t < piece.tracked.size(); ++t)
        out.families[tracked_slot[piece.tracked_ids[t]].first].push_back(piece.tracked[t]);

    // normal-form cleanup: the capped hole of a stabilization seam is a
    // pendant bigon
    std::vector<char> cand(out.map.edge_count(), 0);
    for (int hf : piece.hole_faces)
        for (int e : out.map.face_edges(hf)) cand[e] = 1;
    detail::collapse_candidate_bigons(out.map, out.families, cand);
    out.meta = d.meta;
    out.meta["name"] = "destabilized";
    return out;
}

}  // namespace msd
