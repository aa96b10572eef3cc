#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "msd/curves.hpp"

namespace msd {

// Routes new embedded walks ("threads") through a map. A thread starts in a
// corner, crosses a prescribed sequence of edges transversally and ends in a
// corner. Crossed edges are subdivided (one fresh vertex per crossing,
// ordered along the edge by lane), and the in-face strands are realized as
// straight chords of a convex model of each face, so that strands cross each
// other exactly where segments between their attachment points must cross.

using Rational = boost::multiprecision::cpp_rational;

struct RouterCrossing {
    int dart;        // crossing from face(dart) side into face(alpha(dart)) side
    long long lane;  // position along the edge, ascending from the low end
};

struct ThreadSpec {
    int start_corner = -1;  // corner token: the corner after this dart
    std::vector<RouterCrossing> crossings;
    int end_corner = -1;
};

namespace detail {

struct Pt {
    Rational x, y;
};

inline Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool seg_properly_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto s1 = cross(a, b, c), s2 = cross(a, b, d), s3 = cross(c, d, a), s4 = cross(c, d, b);
    return ((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) &&
           ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0));
}

// parameter of the intersection along segment a->b
inline Rational seg_cross_param(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    Rational denom = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    Rational num = (c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x);
    return num / denom;
}

inline Pt circle_point(const Rational& t) {
    Rational t2 = t * t;
    return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

// strict weak order: counterclockwise by angle from the positive x-axis
inline bool ccw_less(const Pt& u, const Pt& v) {
    auto half = [](const Pt& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    Rational cr = u.x * v.y - u.y * v.x;
    return cr > 0;
}

}  // namespace detail

// Subdivide the edge through dart t and patch every registered walk.
inline std::pair<int, int> subdivide_with_walks(CombinatorialMap& m,
                                                std::vector<Curve*>& walks, int t) {
    int tb = m.alpha[t];
    auto [n1, n2] = m.subdivide_edge(t);
    for (auto* c : walks) {
        std::vector<int> out;
        for (int d : c->walk) {
            out.push_back(d);
            if (d == t) out.push_back(n2);
            if (d == tb) out.push_back(n1);
        }
        c->walk = std::move(out);
    }
    return {n1, n2};
}

// Route all threads; returns the realized walks in thread order. Registered
// walks are re-expressed over subdivided edges.
inline std::vector<Curve> route_threads(CombinatorialMap& m, std::vector<Curve*> registered,
                                        const std::vector<ThreadSpec>& threads) {
    struct CrossingSite {
        int entry_corner, exit_corner;  // corner tokens at the fresh vertex
    };
    // group crossings by edge, keyed by the lesser dart (stable across
    // subdivisions, unlike edge ids)
    std::map<int, std::vector<std::tuple<long long, int, int>>> by_edge;  // lane, thread, step
    for (int t = 0; t < (int)threads.size(); ++t)
        for (int s = 0; s < (int)threads[t].crossings.size(); ++s) {
            const auto& c = threads[t].crossings[s];
            require(c.dart >= 0 && c.dart < m.dart_count(), "BadThread", "crossing dart range");
            by_edge[std::min(c.dart, m.alpha[c.dart])].push_back({c.lane, t, s});
        }

    std::vector<std::vector<CrossingSite>> site(threads.size());
    for (int t = 0; t < (int)threads.size(); ++t) site[t].resize(threads[t].crossings.size());

    for (auto& [d0, list] : by_edge) {
        std::sort(list.begin(), list.end());
        for (size_t i = 1; i < list.size(); ++i)
            require(std::get<0>(list[i]) != std::get<0>(list[i - 1]), "BadThread",
                    "duplicate lane on one edge");
        int up = d0;  // dart from the low end toward the high end
        for (auto& [lane, t, s] : list) {
            int cd = threads[t].crossings[s].dart;
            bool points_up = (cd == d0);
            auto [n1, n2] = subdivide_with_walks(m, registered, up);
            // entry corner lies on the face(cd) side: token n1 for the up
            // side, token n2 for the down side
            site[t][s] = points_up ? CrossingSite{n1, n2} : CrossingSite{n2, n1};
            up = n2;
        }
    }

    // chords: (thread, segment) -> corner tokens
    struct Chord {
        int thread, seg;
        int from_corner, to_corner;
    };
    std::vector<Chord> chords;
    for (int t = 0; t < (int)threads.size(); ++t) {
        const auto& th = threads[t];
        int k = (int)th.crossings.size();
        for (int s = 0; s <= k; ++s) {
            Chord c;
            c.thread = t;
            c.seg = s;
            c.from_corner = (s == 0) ? th.start_corner : site[t][s - 1].exit_corner;
            c.to_corner = (s == k) ? th.end_corner : site[t][s].entry_corner;
            require(c.from_corner >= 0 && c.to_corner >= 0, "BadThread", "missing corner");
            require(m.corner_face(c.from_corner) == m.corner_face(c.to_corner), "BadThread",
                    "segment corners not cofacial (thread " + std::to_string(t) + " seg " +
                    std::to_string(s) + ")");
            require(c.from_corner != c.to_corner, "BadThread", "zero-length segment");
            chords.push_back(c);
        }
    }

    // group chords per face and realize each face arrangement
    std::map<int, std::vector<int>> by_face;
    for (int i = 0; i < (int)chords.size(); ++i)
        by_face[m.corner_face(chords[i].from_corner)].push_back(i);

    // collected new cells
    std::vector<int> alpha = m.alpha, rot = m.rot;
    auto mint = [&]() {
        alpha.push_back(-1);
        rot.push_back(-1);
        return (int)alpha.size() - 1;
    };
    auto corner_insert = [&](int token, int dart) {
        rot[dart] = rot[token];
        rot[token] = dart;
    };
    // walk darts per (thread, seg): the oriented piece darts in order
    std::map<std::pair<int, int>, std::vector<int>> seg_walk;

    for (auto& [face, idxs] : by_face) {
        // corner tokens of the face in walk order
        auto cyc = m.face_cycle(face);
        std::vector<int> tokens;
        for (int d : cyc) tokens.push_back(m.alpha[d]);
        auto pos_of = [&](int token) {
            for (int i = 0; i < (int)tokens.size(); ++i)
                if (tokens[i] == token) return i;
            fail("BadThread", "corner not on expected face");
            return -1;
        };

        for (int attempt = 0;; ++attempt) {
            require(attempt < 32, "BadThread", "degenerate arrangement persists");
            // place endpoint positions on a circle
            std::vector<detail::Pt> pt_at(idxs.size() * 2);
            bool reuse_conflict = false;
            std::map<int, int> token_uses;
            for (int j = 0; j < (int)idxs.size(); ++j) {
                const Chord& c = chords[idxs[j]];
                token_uses[c.from_corner]++;
                token_uses[c.to_corner]++;
            }
            for (auto& [tok, uses] : token_uses)
                if (uses > 1) reuse_conflict = true;
            require(!reuse_conflict, "BadThread", "two segments share a corner token");
            auto place = [&](int token, int salt) {
                Rational t(pos_of(token));
                if (attempt > 0) {
                    long long wig = ((long long)(salt + 1) * 7919 * attempt) % 104729;
                    t += Rational(wig, 104729LL * 1000);
                }
                return detail::circle_point(t);
            };
            for (int j = 0; j < (int)idxs.size(); ++j) {
                pt_at[2 * j] = place(chords[idxs[j]].from_corner, 2 * j);
                pt_at[2 * j + 1] = place(chords[idxs[j]].to_corner, 2 * j + 1);
            }

            // pairwise crossings
            struct Node {
                Rational s_a, s_b;  // parameters along the two chords
                int cj, ck;         // local chord indices
                detail::Pt dir_a, dir_b;
            };
            std::vector<Node> nodes;
            bool degenerate = false;
            std::vector<std::vector<std::pair<Rational, int>>> along(idxs.size());
            for (int j = 0; j < (int)idxs.size() && !degenerate; ++j)
                for (int k = j + 1; k < (int)idxs.size() && !degenerate; ++k) {
                    const auto &A = pt_at[2 * j], &B = pt_at[2 * j + 1];
                    const auto &C = pt_at[2 * k], &D = pt_at[2 * k + 1];
                    if (!detail::seg_properly_cross(A, B, C, D)) continue;
                    Node n;
                    n.cj = j;
                    n.ck = k;
                    n.s_a = detail::seg_cross_param(A, B, C, D);
                    n.s_b = detail::seg_cross_param(C, D, A, B);
                    n.dir_a = {B.x - A.x, B.y - A.y};
                    n.dir_b = {D.x - C.x, D.y - C.y};
                    along[j].push_back({n.s_a, (int)nodes.size()});
                    along[k].push_back({n.s_b, (int)nodes.size()});
                    nodes.push_back(n);
                }
            // triple-point check: equal parameters on one chord
            for (int j = 0; j < (int)idxs.size() && !degenerate; ++j) {
                std::sort(along[j].begin(), along[j].end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                for (size_t i = 1; i < along[j].size(); ++i)
                    if (along[j][i].first == along[j][i - 1].first) degenerate = true;
            }
            if (degenerate) continue;

            // per crossing node: mint 4 darts and set rotation (clockwise in
            // this chart)
            std::vector<std::array<int, 4>> node_darts(nodes.size());
            // per chord: ordered node sequence with dart minting
            // chord pieces: from endpoint or node to next; collect per chord
            for (int nj = 0; nj < (int)nodes.size(); ++nj)
                node_darts[nj] = {mint(), mint(), mint(), mint()};
            // assign directions per node and order CW
            struct NodeDartInfo {
                detail::Pt dir;
                int dart;
                int chord;    // local
                bool toward_b;
            };
            std::vector<std::vector<NodeDartInfo>> infos(nodes.size());
            for (int nj = 0; nj < (int)nodes.size(); ++nj) {
                const auto& n = nodes[nj];
                auto neg = [](const detail::Pt& p) { return detail::Pt{-p.x, -p.y}; };
                infos[nj] = {
                    {n.dir_a, node_darts[nj][0], n.cj, true},
                    {neg(n.dir_a), node_darts[nj][1], n.cj, false},
                    {n.dir_b, node_darts[nj][2], n.ck, true},
                    {neg(n.dir_b), node_darts[nj][3], n.ck, false},
                };
                std::sort(infos[nj].begin(), infos[nj].end(),
                          [](const NodeDartInfo& a, const NodeDartInfo& b) {
                              return detail::ccw_less(a.dir, b.dir);
                          });
                // clockwise rotation: successor = previous in ccw order
                for (int i = 0; i < 4; ++i)
                    rot[infos[nj][i].dart] = infos[nj][(i + 3) % 4].dart;
            }
            // build pieces chord by chord
            for (int j = 0; j < (int)idxs.size(); ++j) {
                const Chord& c = chords[idxs[j]];
                // node sequence along the chord
                std::vector<int> seq;  // node ids in order
                for (auto& [s, id] : along[j]) seq.push_back(id);
                // dart at a node for this chord pointing toward B (toward_b)
                // or toward A
                auto node_dart = [&](int node_id, bool toward_b) {
                    for (auto& inf : infos[node_id])
                        if (inf.chord == j && inf.toward_b == toward_b) return inf.dart;
                    fail("BadThread", "node dart lookup");
                    return -1;
                };
                std::vector<int> walk;
                int prev_dart_at_from = -1;  // dart of current piece at its source
                // endpoints: mint one dart at each corner
                int start_dart = mint(), end_dart = mint();
                corner_insert(c.from_corner, start_dart);
                corner_insert(c.to_corner, end_dart);
                if (seq.empty()) {
                    alpha[start_dart] = end_dart;
                    alpha[end_dart] = start_dart;
                    walk.push_back(start_dart);
                } else {
                    // first piece: from corner to node 0
                    alpha[start_dart] = node_dart(seq[0], false);
                    alpha[node_dart(seq[0], false)] = start_dart;
                    walk.push_back(start_dart);
                    for (size_t i = 0; i + 1 < seq.size(); ++i) {
                        int a = node_dart(seq[i], true);
                        int b = node_dart(seq[i + 1], false);
                        alpha[a] = b;
                        alpha[b] = a;
                        walk.push_back(a);
                    }
                    int last = node_dart(seq.back(), true);
                    alpha[last] = end_dart;
                    alpha[end_dart] = last;
                    walk.push_back(last);
                }
                (void)prev_dart_at_from;
                seg_walk[{c.thread, c.seg}] = std::move(walk);
            }
            break;
        }
    }

    m = CombinatorialMap(std::move(alpha), std::move(rot));

    std::vector<Curve> out(threads.size());
    for (int t = 0; t < (int)threads.size(); ++t) {
        Curve c;
        for (int s = 0; s <= (int)threads[t].crossings.size(); ++s) {
            auto& w = seg_walk[{t, s}];
            c.walk.insert(c.walk.end(), w.begin(), w.end());
        }
        out[t] = std::move(c);
    }
    return out;
}

}  // namespace msd
