#pragma once

#include "gstory/forest.hpp"
#include "gstory/story.hpp"

namespace gstory {

/// Result of stripping edges that span more than one bucket; such edges
/// never appear in any frame.
struct EdgeFilterResult {
    std::vector<std::pair<int, int>> kept;
    std::vector<std::pair<int, int>> removed;
};

EdgeFilterResult phase1FilterEdges(const GraphStory& story,
                                   const BucketPartition& partition);

/// The filtered forest reconnected into a spanning tree; every added
/// (dummy) edge joins adjacent or equal buckets. Dummy edges are flagged
/// so they can be stripped from rendered output.
struct DummyRepairResult {
    std::vector<std::pair<int, int>> treeEdges;   // kept + dummy
    std::vector<std::pair<int, int>> dummyEdges;
};

DummyRepairResult phase2AddDummyEdges(const GraphStory& story,
                                      const std::vector<std::pair<int, int>>& forestEdges,
                                      const BucketPartition& partition);

/// A maximal connected subtree whose vertices share one bucket label.
struct PertinentComponent {
    std::vector<int> vertices;
    int bucketLabel = 0;
    int setIndex = 0;   // j: the R_j layer, 1-based
    int root = -1;      // the unique vertex adjacent to R_{j-1} (or r(T))
};

struct Decomposition {
    int root = -1;                 // r(T), the tau=1 vertex
    std::vector<int> parent;       // -1 at the root
    std::vector<int> childOffset;  // size n+1; compressed child lists
    std::vector<int> childList;    // ordered after phase 4
    std::vector<int> componentOf;  // per vertex
    std::vector<PertinentComponent> components;

    /// Children of v in drawing order (ascending tau before phase 4).
    std::pair<const int*, const int*> childrenOf(int v) const {
        return {childList.data() + childOffset[v], childList.data() + childOffset[v + 1]};
    }
};

/// Roots the repaired tree at the tau=1 vertex and splits it into
/// pertinent components layered into sets R_1, R_2, ...
Decomposition phase3Decompose(const GraphStory& story,
                              const std::vector<std::pair<int, int>>& treeEdges,
                              const BucketPartition& partition);

/// Orders each child list: same-set children first, next-set children
/// after, ascending tau inside each group.
void phase4OrderChildren(Decomposition& decomposition);

/// The forests F_{i,q}: per bucket i and quadrant q, the pertinent
/// components assigned there in drawing order.
struct ForestAssignment {
    struct Entry {
        int bucket = 0;
        Quadrant quadrant = Quadrant::Q1;
        OrderedForest forest;
        std::vector<int> storyVertex;   // forest node -> story vertex index
        std::vector<int> componentIds;  // per tree, index into components
    };
    std::vector<Entry> entries;
};

ForestAssignment phase5BuildForests(const GraphStory& story,
                                    const Decomposition& decomposition,
                                    const BucketPartition& partition);

struct TreeLayoutResult {
    DrawingStory drawing;
    std::vector<std::pair<int, int>> removedEdges;
    std::vector<std::pair<int, int>> dummyEdges;
    Decomposition decomposition;
    ForestAssignment forests;
    std::vector<Quadrant> quadrantOf;   // per vertex
};

/// Runs phases 1-5 and the quadrant drawers; coordinates land in
/// [-4W, 4W]^2 and every frame of the result is planar. O(n). Takes the
/// story by value so callers can move it into the result.
TreeLayoutResult layoutTreeDetailed(GraphStory story);

DrawingStory layoutTree(GraphStory story);

} // namespace gstory
