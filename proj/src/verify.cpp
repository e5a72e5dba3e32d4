#include "gstory/verify.hpp"

#include <algorithm>
#include <optional>

namespace gstory {

namespace {

using I128 = __int128;

// Orientation predicates only; the constructive modules never assign
// coordinates through this code path.

int sign(I128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

int orient(Point a, Point b, Point c) {
    return sign(I128(b.x - a.x) * (c.y - a.y) - I128(b.y - a.y) * (c.x - a.x));
}

// p strictly inside the closed segment [a,b], endpoints excluded.
bool strictlyInside(Point a, Point b, Point p) {
    if (p == a || p == b) return false;
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool onClosedSegment(Point a, Point b, Point p) {
    return p == a || p == b || strictlyInside(a, b, p);
}

enum class SegRelation { Disjoint, Proper, Touch, Overlap };

// Intersection classification for two segments that share no endpoint.
SegRelation classify(Point a, Point b, Point c, Point d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 * o2 < 0 && o3 * o4 < 0) return SegRelation::Proper;
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Collinear: overlapping iff the 1D projections overlap.
        const bool vertical = a.x == b.x;
        auto key = [&](Point p) { return vertical ? p.y : p.x; };
        const long long lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        const long long lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        if (std::max(lo1, lo2) < std::min(hi1, hi2)) return SegRelation::Overlap;
        if (std::max(lo1, lo2) == std::min(hi1, hi2)) return SegRelation::Touch;
        return SegRelation::Disjoint;
    }
    if (onClosedSegment(a, b, c) || onClosedSegment(a, b, d) ||
        onClosedSegment(c, d, a) || onClosedSegment(c, d, b))
        return SegRelation::Touch;
    return SegRelation::Disjoint;
}

struct PairChecker {
    const DrawingStory& drawing;
    VerificationReport& report;
    std::optional<int> frame;

    void vertexPair(int u, int v) {
        if (drawing.pos[u] == drawing.pos[v]) {
            report.violations.push_back({ViolationKind::Overlap, frame,
                                         {drawing.story.ids[u], drawing.story.ids[v]},
                                         {drawing.pos[u]},
                                         "two vertices at the same point"});
        }
    }

    void vertexEdge(int v, std::pair<int, int> e) {
        if (v == e.first || v == e.second) return;
        if (strictlyInside(drawing.pos[e.first], drawing.pos[e.second], drawing.pos[v])) {
            report.violations.push_back({ViolationKind::Overlap, frame,
                                         {drawing.story.ids[v], drawing.story.ids[e.first],
                                          drawing.story.ids[e.second]},
                                         {drawing.pos[v]},
                                         "edge passes through a vertex"});
        }
    }

    void edgePair(std::pair<int, int> e1, std::pair<int, int> e2) {
        ++report.checkedEdgePairs;
        const Point a = drawing.pos[e1.first], b = drawing.pos[e1.second];
        const Point c = drawing.pos[e2.first], d = drawing.pos[e2.second];
        auto witness = [&] {
            return std::vector<VertexId>{drawing.story.ids[e1.first], drawing.story.ids[e1.second],
                                         drawing.story.ids[e2.first], drawing.story.ids[e2.second]};
        };
        // Shared endpoints are legal; the only remaining failure mode for
        // such a pair is a collinear overlap past the shared point.
        int shared = 0;
        Point s{};
        for (int p : {e1.first, e1.second})
            for (int q : {e2.first, e2.second})
                if (p == q) {
                    ++shared;
                    s = drawing.pos[p];
                }
        if (shared > 0) {
            const Point p = (drawing.pos[e1.first] == s) ? b : a;
            const Point q = (drawing.pos[e2.first] == s) ? d : c;
            if (orient(s, p, q) == 0 &&
                I128(p.x - s.x) * (q.x - s.x) + I128(p.y - s.y) * (q.y - s.y) > 0) {
                report.violations.push_back({ViolationKind::Overlap, frame, witness(),
                                             {s},
                                             "edges sharing an endpoint overlap"});
            }
            return;
        }
        switch (classify(a, b, c, d)) {
            case SegRelation::Proper:
                report.violations.push_back({ViolationKind::Crossing, frame, witness(),
                                             {a, b, c, d},
                                             "edges cross"});
                break;
            case SegRelation::Overlap:
                report.violations.push_back({ViolationKind::Overlap, frame, witness(),
                                             {a, b, c, d},
                                             "collinear edges overlap"});
                break;
            case SegRelation::Touch:
                report.violations.push_back({ViolationKind::Crossing, frame, witness(),
                                             {a, b, c, d},
                                             "edge touches another edge"});
                break;
            case SegRelation::Disjoint:
                break;
        }
    }

    void all(const std::vector<int>& vertices,
             const std::vector<std::pair<int, int>>& edges) {
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                vertexPair(vertices[i], vertices[j]);
        for (int v : vertices)
            for (auto e : edges) vertexEdge(v, e);
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) edgePair(edges[i], edges[j]);
    }
};

void requirePositions(const DrawingStory& drawing) {
    if (drawing.pos.size() != drawing.story.ids.size())
        throw MissingPosition("drawing has no position for some vertex");
}

} // namespace

void VerificationReport::merge(VerificationReport other) {
    checkedFrames += other.checkedFrames;
    checkedEdgePairs += other.checkedEdgePairs;
    violations.insert(violations.end(),
                      std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
}

VerificationReport checkFramePlanarity(const DrawingStory& drawing) {
    requirePositions(drawing);
    VerificationReport report;
    for (const Frame& f : frames(drawing.story)) {
        ++report.checkedFrames;
        PairChecker checker{drawing, report, f.t};
        checker.all(f.vertices, f.edges);
    }
    return report;
}

VerificationReport checkGridBounds(const DrawingStory& drawing, GridBox box) {
    VerificationReport report;
    for (size_t v = 0; v < drawing.pos.size(); ++v) {
        if (!box.contains(drawing.pos[v])) {
            report.violations.push_back({ViolationKind::OutOfBounds, std::nullopt,
                                         {drawing.story.ids[v]},
                                         {drawing.pos[v]},
                                         "vertex outside the grid box"});
        }
    }
    return report;
}

VerificationReport checkPositionStability(
    const std::vector<std::map<VertexId, Point>>& framePositions) {
    VerificationReport report;
    std::map<VertexId, std::pair<Point, int>> first;
    int t = 0;
    for (const auto& frame : framePositions) {
        ++t;
        ++report.checkedFrames;
        for (const auto& [id, p] : frame) {
            auto [it, inserted] = first.try_emplace(id, p, t);
            if (!inserted && it->second.first != p) {
                report.violations.push_back({ViolationKind::MovedVertex, t,
                                             {id},
                                             {it->second.first, p},
                                             "vertex position changed between frames"});
            }
        }
    }
    return report;
}

VerificationReport checkPositionStability(const DrawingStory& drawing) {
    requirePositions(drawing);
    VerificationReport report;
    report.checkedFrames = drawing.story.n() + drawing.story.window - 1;
    return report;
}

namespace {

// Does [a,b] contain a point of the wedge S(v) off the slope -2 line,
// i.e. a point with y <= v.y and (y - v.y) + 2(x - v.x) > 0? The two
// constraints are linear along the segment; intersect the closed
// feasible interval of the first with [0,1], then test the strict one at
// its endpoints (a linear function positive somewhere on an interval is
// positive at an endpoint).
bool segmentMeetsWedgeOffLine(Point v, Point a, Point b) {
    const long long c1 = a.y - v.y;
    const long long d1 = b.y - a.y;
    const long long c2 = (a.y - v.y) + 2 * (a.x - v.x);
    const long long d2 = (b.y - a.y) + 2 * (b.x - a.x);

    // Feasible t-interval for c1 + t*d1 <= 0, as fractions with den > 0.
    long long loN = 0, loD = 1, hiN = 1, hiD = 1;
    if (d1 == 0) {
        if (c1 > 0) return false;
    } else if (d1 > 0) {
        // t <= -c1/d1
        if (-c1 < 0) return false;
        if (I128(-c1) * hiD < I128(hiN) * d1) { hiN = -c1; hiD = d1; }
    } else {
        // t >= -c1/d1 = c1/(-d1)
        if (c1 > -d1) return false;
        if (I128(c1) * loD > I128(loN) * -d1) { loN = c1; loD = -d1; }
    }
    if (I128(loN) * hiD > I128(hiN) * loD) return false;

    const I128 atLo = I128(c2) * loD + I128(loN) * d2;
    const I128 atHi = I128(c2) * hiD + I128(hiN) * d2;
    return atLo > 0 || atHi > 0;
}

struct SubtreeRange {
    long long ymin, ymax;
};

SubtreeRange subtreeRange(const OrderedForest& forest, const std::vector<Point>& pos,
                          int node) {
    SubtreeRange r{pos[node].y, pos[node].y};
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        r.ymin = std::min(r.ymin, pos[u].y);
        r.ymax = std::max(r.ymax, pos[u].y);
        auto [it, end] = forest.children(u);
        for (; it != end; ++it) stack.push_back(*it);
    }
    return r;
}

} // namespace

VerificationReport checkDefinition1(const OrderedForest& forest,
                                    const std::vector<Point>& pos,
                                    int window) {
    VerificationReport report;
    const int m = forest.size();
    const long long W = window;
    if (pos.size() != static_cast<size_t>(m))
        throw MissingPosition("forest drawing has no position for some vertex");

    auto flag = [&](ViolationKind kind, int node, const std::string& what) {
        report.violations.push_back({kind, std::nullopt,
                                     {forest.idOf(node)},
                                     {pos[node]},
                                     what});
    };

    // (i) band bounds.
    const GridBox band{0, m - 1, 4 * W - 2 * m + 2, 4 * W};
    for (int v = 0; v < m; ++v)
        if (!band.contains(pos[v])) flag(ViolationKind::OutOfBounds, v, "outside the band");

    // (ii) roots on the y-axis segment, bottom-to-top, last at (0,4W).
    for (size_t i = 0; i < forest.roots.size(); ++i) {
        const int r = forest.roots[i];
        if (pos[r].x != 0 || pos[r].y < 2 * W + 2 || pos[r].y > 4 * W)
            flag(ViolationKind::OutOfBounds, r, "root off the y-axis segment");
        if (i + 1 < forest.roots.size() && pos[r].y >= pos[forest.roots[i + 1]].y)
            flag(ViolationKind::OrderViolation, r, "roots not bottom-to-top");
    }
    if (!forest.roots.empty() && pos[forest.roots.back()] != Point{0, 4 * W})
        flag(ViolationKind::OrderViolation, forest.roots.back(), "last root not at (0,4W)");

    // (iii) trees occupy disjoint increasing y-ranges.
    for (size_t i = 0; i + 1 < forest.roots.size(); ++i) {
        if (subtreeRange(forest, pos, forest.roots[i]).ymax >=
            subtreeRange(forest, pos, forest.roots[i + 1]).ymin)
            flag(ViolationKind::OrderViolation, forest.roots[i],
                 "tree y-ranges not increasing");
    }

    // (iv) sibling subtrees occupy increasing y-ranges; order-preserving
    // and strictly-upward/leftward per edge.
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < m; ++v) {
        const auto [first, last] = forest.children(v);
        for (const int* j = first; j + 1 < last; ++j) {
            if (subtreeRange(forest, pos, *j).ymax >=
                subtreeRange(forest, pos, *(j + 1)).ymin)
                flag(ViolationKind::OrderViolation, *j,
                     "sibling subtree y-ranges not increasing");
        }
        for (const int* j = first; j != last; ++j) {
            const int w = *j;
            edges.emplace_back(v, w);
            if (pos[v].y <= pos[w].y)
                flag(ViolationKind::OrderViolation, w, "not strictly-upward");
            if (pos[v].x >= pos[w].x)
                flag(ViolationKind::OrderViolation, w, "not strictly-leftward");
        }
    }

    // Planarity of the forest drawing itself.
    {
        DrawingStory d;
        d.story.kind = Kind::General;
        d.story.window = std::max(window, m);
        for (int v = 0; v < m; ++v) {
            d.story.ids.push_back(forest.idOf(v));
            d.story.tau.push_back(v + 1);
        }
        d.story.edges = edges;
        d.story.validate();
        d.pos = pos;
        std::vector<int> all(m);
        for (int v = 0; v < m; ++v) all[v] = v;
        PairChecker checker{d, report, std::nullopt};
        checker.all(all, edges);
    }

    // (v) every wedge is empty except along its slope -2 line.
    for (int v = 0; v < m; ++v) {
        for (int u = 0; u < m; ++u) {
            if (u == v) continue;
            if (wedgeContains(pos[v], pos[u]) && !onWedgeLine(pos[v], pos[u]))
                report.violations.push_back({ViolationKind::WedgeIntrusion, std::nullopt,
                                             {forest.idOf(v), forest.idOf(u)},
                                             {pos[v], pos[u]},
                                             "vertex inside a wedge"});
        }
        for (auto [a, b] : edges) {
            if (segmentMeetsWedgeOffLine(pos[v], pos[a], pos[b]))
                report.violations.push_back({ViolationKind::WedgeIntrusion, std::nullopt,
                                             {forest.idOf(v), forest.idOf(a),
                                              forest.idOf(b)},
                                             {pos[v]},
                                             "edge enters a wedge off its boundary line"});
        }
    }
    return report;
}

VerificationReport checkInducedPlanarity(const DrawingStory& drawing) {
    requirePositions(drawing);
    VerificationReport report;
    std::vector<int> all(drawing.story.n());
    for (int v = 0; v < drawing.story.n(); ++v) all[v] = v;
    PairChecker checker{drawing, report, std::nullopt};
    checker.all(all, drawing.story.edges);
    return report;
}

} // namespace gstory
