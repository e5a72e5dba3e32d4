#pragma once

#include <map>

#include "gstory/forest.hpp"
#include "gstory/story.hpp"

namespace gstory {

struct VerificationReport {
    std::vector<Violation> violations;
    long long checkedFrames = 0;
    long long checkedEdgePairs = 0;

    bool passed() const { return violations.empty(); }
    void merge(VerificationReport other);
};

/// Brute-force per-frame planarity: every pair of live edges is tested
/// for proper crossings and collinear overlaps, every live vertex for
/// coincidence with another vertex or a non-incident edge. Shared edge
/// endpoints are allowed. Exact integer arithmetic throughout.
VerificationReport checkFramePlanarity(const DrawingStory& drawing);

/// Flags every vertex outside the closed box.
VerificationReport checkGridBounds(const DrawingStory& drawing, GridBox box);

/// For external stories that list positions per frame: a vertex whose
/// position differs between two frames it appears in is a MovedVertex.
VerificationReport checkPositionStability(
    const std::vector<std::map<VertexId, Point>>& framePositions);

/// Internally produced drawings keep one position per vertex, so this
/// passes by construction.
VerificationReport checkPositionStability(const DrawingStory& drawing);

/// Checks the five quadrant-drawing conditions plus strictly-upward,
/// strictly-leftward and order-preserving on a candidate north-east
/// drawing of the forest: band bounds, roots on the y-axis segment in
/// order with the last at (0,4W), disjoint increasing tree and sibling
/// subtree y-ranges, and wedge emptiness (contact with a vertex wedge is
/// allowed only along its slope -2 line).
VerificationReport checkDefinition1(const OrderedForest& forest,
                                    const std::vector<Point>& pos,
                                    int window);

/// Planarity of the single drawing of the whole graph obtained from the
/// fixed positions: all edges tested at once, not per frame. May fail
/// even when every frame passes.
VerificationReport checkInducedPlanarity(const DrawingStory& drawing);

} // namespace gstory
