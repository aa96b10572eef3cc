#pragma once

#include "msd/canonical.hpp"
#include "msd/cut.hpp"

namespace msd {

// A multisection diagram: central surface plus one candidate cut system per
// piece. Families are 0-indexed internally; piece i of an n-section is
// families[i-1].
struct MultisectionDiagram {
    CombinatorialMap map;
    int n = 0;
    std::vector<std::vector<Curve>> families;
    std::map<std::string, std::string> meta;

    int genus() const { return map.genus(); }
};

struct DiagramReport {
    bool valid = false;
    int genus = 0;
    int n = 0;
    std::vector<std::string> failures;
    std::vector<std::string> family_verdicts;
};

inline DiagramReport validate_diagram(const MultisectionDiagram& d) {
    DiagramReport rep;
    rep.n = d.n;
    if (static_cast<int>(d.families.size()) != d.n) {
        rep.failures.push_back("family count != n");
        return rep;
    }
    if (!d.map.connected()) {
        rep.failures.push_back("surface disconnected");
        return rep;
    }
    rep.genus = d.map.genus();
    for (int i = 0; i < d.n; ++i) {
        const auto& fam = d.families[i];
        std::string tag = "family " + std::to_string(i + 1);
        if (static_cast<int>(fam.size()) != rep.genus) {
            rep.failures.push_back(tag + ": size " + std::to_string(fam.size()) +
                                   " != genus " + std::to_string(rep.genus));
            continue;
        }
        bool fam_ok = true;
        for (const auto& c : fam) {
            try {
                check_simple(d.map, c);
            } catch (const error& e) {
                rep.failures.push_back(tag + ": " + e.what());
                fam_ok = false;
            }
        }
        if (!fam_ok) continue;
        for (size_t a = 0; a < fam.size() && fam_ok; ++a)
            for (size_t b = a + 1; b < fam.size() && fam_ok; ++b)
                if (!disjoint(d.map, fam[a], fam[b])) {
                    rep.failures.push_back(tag + ": curves " + std::to_string(a) + "," +
                                           std::to_string(b) + " not disjoint");
                    fam_ok = false;
                }
        if (!fam_ok) continue;
        auto check = is_cut_system(d.map, fam);
        rep.family_verdicts.push_back(tag + (check.ok ? ": cut system" : ": " + check.reason));
        if (!check.ok) rep.failures.push_back(tag + ": " + check.reason);
    }
    // transversality across families
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            for (size_t a = 0; a < d.families[i].size(); ++a)
                for (size_t b = 0; b < d.families[j].size(); ++b) {
                    try {
                        intersection_count(d.map, d.families[i][a], d.families[j][b]);
                    } catch (const error& e) {
                        rep.failures.push_back("families " + std::to_string(i + 1) + "/" +
                                               std::to_string(j + 1) + ": " + e.what());
                    }
                }
    rep.valid = rep.failures.empty();
    return rep;
}

// Pairwise geometric intersection counts; block (i,j) lists counts between
// family i and family j curves. Diagonal blocks are zero for valid diagrams.
struct IntersectionMatrix {
    int n = 0;
    std::vector<int> sizes;
    // value[i][j][a][b] = count between families i,j curves a,b
    std::vector<std::vector<std::vector<std::vector<int>>>> value;
};

inline IntersectionMatrix intersection_matrix(const MultisectionDiagram& d) {
    IntersectionMatrix mx;
    mx.n = d.n;
    for (const auto& f : d.families) mx.sizes.push_back(static_cast<int>(f.size()));
    mx.value.assign(d.n, {});
    for (int i = 0; i < d.n; ++i) {
        mx.value[i].assign(d.n, {});
        for (int j = 0; j < d.n; ++j) {
            auto& blk = mx.value[i][j];
            blk.assign(mx.sizes[i], std::vector<int>(mx.sizes[j], 0));
            for (int a = 0; a < mx.sizes[i]; ++a)
                for (int b = 0; b < mx.sizes[j]; ++b) {
                    if (i == j) {
                        blk[a][b] = 0;
                        continue;
                    }
                    blk[a][b] = intersection_count(d.map, d.families[i][a], d.families[j][b]);
                }
        }
    }
    return mx;
}

inline bool diagrams_isomorphic(const MultisectionDiagram& a, const MultisectionDiagram& b,
                                bool allow_family_relabel = false) {
    if (a.n != b.n) return false;
    return map_isomorphic(a.map, a.families, b.map, b.families, allow_family_relabel);
}

// Faces whose boundary carries no curve edge.
inline std::vector<int> curve_free_faces(const MultisectionDiagram& d) {
    std::vector<char> on_curve(d.map.edge_count(), 0);
    for (const auto& fam : d.families)
        for (const auto& c : fam)
            for (int dart : c.walk) on_curve[d.map.edge_of(dart)] = 1;
    std::vector<int> out;
    for (int f = 0; f < d.map.face_count(); ++f) {
        bool ok = true;
        for (int e : d.map.face_edges(f))
            if (on_curve[e]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(f);
    }
    return out;
}

// The terminal genus-0 diagram: bigon sphere, all families empty.
inline MultisectionDiagram empty_diagram(int n) {
    MultisectionDiagram d;
    d.map = sphere_bigon_map();
    d.n = n;
    d.families.assign(n, {});
    d.meta["name"] = "genus-0 empty diagram";
    return d;
}

}  // namespace msd
