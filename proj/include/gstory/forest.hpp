#pragma once

#include <string>
#include <vector>

#include "gstory/errors.hpp"
#include "gstory/geometry.hpp"

namespace gstory {

/// A sequence of rooted ordered trees in compressed form: the ordered
/// child list of node v is childList[childOffset[v] .. childOffset[v+1]),
/// `roots` lists the tree roots in forest order T_1..T_k. Node ids are
/// optional (used only in verification messages); an empty `ids` vector
/// means anonymous nodes.
struct OrderedForest {
    std::vector<std::string> ids;
    std::vector<int> childOffset;   // size()+1 entries
    std::vector<int> childList;
    std::vector<int> roots;

    int size() const {
        return childOffset.empty() ? 0 : static_cast<int>(childOffset.size()) - 1;
    }
    std::pair<const int*, const int*> children(int v) const {
        return {childList.data() + childOffset[v], childList.data() + childOffset[v + 1]};
    }
    std::string idOf(int v) const {
        return v < static_cast<int>(ids.size()) ? ids[v] : "#" + std::to_string(v);
    }
};

/// Convenience node-list form for building forests by hand.
struct ForestNode {
    std::string id;
    std::vector<int> children;
};

/// Compresses a node list; node indices are preserved.
OrderedForest makeForest(const std::vector<ForestNode>& nodes, std::vector<int> roots);

/// The four drawing quadrants. Q1 is the north-east quadrant; the others
/// are its clockwise rotations about the origin by 90, 180 and 270 degrees.
enum class Quadrant { Q1, Q4, Q3, Q2 };

const char* quadrantName(Quadrant q);

/// Clockwise rotation mapping a Q1-drawing into quadrant q.
inline Point rotate(Point p, Quadrant q) {
    switch (q) {
        case Quadrant::Q1: return p;
        case Quadrant::Q4: return {p.y, -p.x};
        case Quadrant::Q3: return {-p.x, -p.y};
        case Quadrant::Q2: return {-p.y, p.x};
    }
    return p;
}

/// Membership in the closed wedge S(apex): the region swept rotating the
/// horizontal rightward ray at `apex` clockwise onto the slope -2
/// half-line l(apex). Exact integer arithmetic.
inline bool wedgeContains(Point apex, Point p) {
    const long long dx = p.x - apex.x;
    const long long dy = p.y - apex.y;
    return dy <= 0 && dy >= -2 * dx;
}

/// True iff p lies on the slope -2 half-line l(apex) (apex included).
inline bool onWedgeLine(Point apex, Point p) {
    const long long dx = p.x - apex.x;
    const long long dy = p.y - apex.y;
    return dx >= 0 && dy == -2 * dx;
}

/// Draws the forest in the north-east band [0,m-1] x [4W-2m+2, 4W] so
/// that the drawing is planar, strictly-upward, strictly-leftward,
/// order-preserving, has all roots on the y-axis with the last root at
/// (0,4W), and keeps every vertex's wedge empty except along its slope -2
/// line. Returns positions indexed by node. O(m).
std::vector<Point> drawQ1(const OrderedForest& forest, int window);

/// drawQ1 output rotated into quadrant q.
std::vector<Point> drawQuadrant(const OrderedForest& forest, int window, Quadrant q);

} // namespace gstory
