#pragma once

#include "gstory/story.hpp"

namespace gstory {

/// Per-vertex x-/y-bucket membership and the rank of the vertex inside
/// each axis bucket. Ranks follow the order of vertices along the path,
/// which is in general different from tau order.
struct AxisBuckets {
    std::vector<int> xBucketOf;   // 1-based
    std::vector<int> yBucketOf;   // 1-based
    std::vector<int> xRank;       // 1..|Bx_i|
    std::vector<int> yRank;       // 1..|By_j|
};

/// Vertex indices in path order v_1..v_n. The endpoint with the smaller
/// tau is v_1. Throws NotAPath if the edges do not form a spanning path.
std::vector<int> pathOrder(const GraphStory& story);

AxisBuckets axisBuckets(const GraphStory& story, const BucketPartition& partition);

/// Places every vertex at (xRank, yRank); all coordinates land in
/// [1, 2W] and every frame of the result is planar. O(n). Takes the
/// story by value so callers can move it into the result.
DrawingStory layoutPath(GraphStory story);

} // namespace gstory
