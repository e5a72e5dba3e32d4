#pragma once

#include <random>
#include <string>
#include <vector>

#include "gstory/forest.hpp"
#include "gstory/story.hpp"

namespace testutil {

using namespace gstory;

inline GraphStory makeStory(Kind kind, int window, std::vector<int> taus,
                            std::vector<std::pair<int, int>> edges) {
    GraphStory s;
    s.kind = kind;
    s.window = window;
    for (size_t i = 0; i < taus.size(); ++i)
        s.ids.push_back("v" + std::to_string(i + 1));
    s.tau = std::move(taus);
    s.edges = std::move(edges);
    s.validate();
    return s;
}

/// Identity-tau story over n vertices.
inline GraphStory makeStory(Kind kind, int window, int n,
                            std::vector<std::pair<int, int>> edges) {
    std::vector<int> taus(n);
    for (int i = 0; i < n; ++i) taus[i] = i + 1;
    return makeStory(kind, window, std::move(taus), std::move(edges));
}

/// Random ordered forest with m nodes split into a random number of
/// trees of random shape.
inline OrderedForest randomForest(std::mt19937_64& rng, int m) {
    std::vector<ForestNode> nodes(m);
    std::vector<int> roots;
    for (int i = 0; i < m; ++i) nodes[i].id = "u" + std::to_string(i);
    int next = 0;
    while (next < m) {
        const int root = next++;
        roots.push_back(root);
        // Remaining nodes of this tree attach to a random earlier node.
        const int treeSize = 1 + static_cast<int>(rng() % (m - root));
        for (int k = 1; k < treeSize && next < m; ++k) {
            const int parent = root + static_cast<int>(rng() % (next - root));
            nodes[parent].children.push_back(next++);
        }
        if (rng() % 2 == 0) break;   // sometimes stop early, rest is new trees
        if (next == m) break;
    }
    while (next < m) {   // leftovers become single-vertex trees
        roots.push_back(next++);
    }
    return makeForest(nodes, std::move(roots));
}

// ---------------------------------------------------------------------
// Independent rational-arithmetic planarity oracle. Solves the
// parametric segment equations exactly with __int128 fractions instead
// of orientation predicates; used only to cross-check the verifier.
// ---------------------------------------------------------------------

struct Rat {
    __int128 num;
    __int128 den;   // > 0
    Rat(__int128 n = 0, __int128 d = 1) : num(d < 0 ? -n : n), den(d < 0 ? -d : d) {}
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num * b.den == b.num * a.den; }
};

/// All common points of [a,b] and [c,d] beyond a shared endpoint?
inline bool segmentsMeetBadlyRational(Point a, Point b, Point c, Point d,
                                      bool shareEndpoint, Point shared) {
    const __int128 rx = b.x - a.x, ry = b.y - a.y;
    const __int128 sx = d.x - c.x, sy = d.y - c.y;
    const __int128 det = rx * sy - ry * sx;
    const __int128 qpx = c.x - a.x, qpy = c.y - a.y;
    if (det != 0) {
        const Rat t(qpx * sy - qpy * sx, det);
        const Rat s(qpx * ry - qpy * rx, det);
        const Rat zero(0), one(1);
        if (!(zero <= t && t <= one && zero <= s && s <= one)) return false;
        if (shareEndpoint) {
            // The single meeting point must be the shared endpoint.
            const Rat ix(a.x * t.den + t.num * rx, t.den);
            const Rat iy(a.y * t.den + t.num * ry, t.den);
            return !(ix == Rat(shared.x) && iy == Rat(shared.y));
        }
        return true;
    }
    // Parallel: no common point unless collinear.
    if (qpx * ry - qpy * rx != 0) return false;
    // Collinear: project onto the dominant axis and intersect intervals.
    auto key = [&](Point p) -> __int128 {
        return (rx != 0 || sx != 0) ? p.x : p.y;
    };
    __int128 lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    __int128 lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    const __int128 lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return false;
    if (lo == hi) {
        // Touch at one point; fine only if it is a shared endpoint.
        if (!shareEndpoint) {
            // Touching at a non-shared endpoint means an endpoint lies on
            // the other segment: a violation.
            return true;
        }
        return key(shared) != lo;
    }
    return true;   // proper overlap
}

/// Frame-planarity verdict computed independently of gstory::verify.
inline bool framePlanarRational(const DrawingStory& d, const std::vector<int>& vertices,
                                const std::vector<std::pair<int, int>>& edges) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (d.pos[vertices[i]] == d.pos[vertices[j]]) return false;
    for (int v : vertices) {
        for (auto [a, b] : edges) {
            if (v == a || v == b) continue;
            // Is pos[v] on [a,b]? Solve with rational parameters.
            const Point p = d.pos[v], pa = d.pos[a], pb = d.pos[b];
            const __int128 rx = pb.x - pa.x, ry = pb.y - pa.y;
            if (rx * (p.y - pa.y) != ry * (p.x - pa.x)) continue;
            const __int128 dot = rx * (p.x - pa.x) + ry * (p.y - pa.y);
            const __int128 len2 = rx * rx + ry * ry;
            if (dot >= 0 && dot <= len2) return false;
        }
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto e1 = edges[i], e2 = edges[j];
            bool share = false;
            Point shared{};
            for (int p : {e1.first, e1.second})
                for (int q : {e2.first, e2.second})
                    if (p == q) {
                        share = true;
                        shared = d.pos[p];
                    }
            if (segmentsMeetBadlyRational(d.pos[e1.first], d.pos[e1.second],
                                          d.pos[e2.first], d.pos[e2.second], share, shared))
                return false;
        }
    }
    return true;
}

} // namespace testutil
