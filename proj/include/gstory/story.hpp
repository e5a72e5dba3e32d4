#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gstory/errors.hpp"
#include "gstory/geometry.hpp"

namespace gstory {

using VertexId = std::string;

enum class Kind { Path, Tree, General };

/// A graph whose vertices appear one per time step (appearance time tau)
/// and stay alive for `window` steps. Vertices are referenced by index
/// into `ids`; tau and positions are parallel arrays.
///
/// Immutable after validate(); all query functions take it by const ref.
struct GraphStory {
    Kind kind = Kind::General;
    int window = 1;
    std::vector<VertexId> ids;
    std::vector<int> tau;                      // tau[i] in 1..n, bijective
    std::vector<std::pair<int, int>> edges;    // vertex-index pairs

    // Derived, filled by validate().
    std::vector<int> byTau;                    // byTau[t-1] = vertex with tau t
    std::unordered_map<VertexId, int> indexOf;

    int n() const { return static_cast<int>(ids.size()); }

    /// Checks all story invariants and builds the derived lookup tables.
    /// Throws InvalidStory on a broken invariant, NotAPath/NotATree when
    /// `kind` promises a structure the edge set does not have.
    void validate();
};

/// Snapshot of the story at time t: the vertices alive at t and the
/// story edges with both endpoints alive.
struct Frame {
    int t = 0;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

/// The n+W-1 frames of a story, in time order.
std::vector<Frame> frames(const GraphStory& story);

/// Partition of the vertices into h = ceil(n/W) buckets by tau.
struct BucketPartition {
    int h = 0;
    std::vector<int> bucketOf;   // 1-based bucket index per vertex

    /// Vertices of bucket i in ascending tau order.
    std::vector<int> bucketVertices(const GraphStory& story, int i) const;
};

BucketPartition buckets(const GraphStory& story);

/// The index i = ceil(t/W); every vertex alive at t lies in bucket i-1 or i.
int windowSupergraphIndex(int t, int window);

/// A story together with one fixed integer position per vertex. The
/// position is used in every frame where the vertex is alive.
struct DrawingStory {
    GraphStory story;
    std::vector<Point> pos;   // parallel to story.ids
};

enum class ViolationKind {
    Crossing,
    Overlap,
    OutOfBounds,
    MovedVertex,
    WedgeIntrusion,
    OrderViolation,
};

const char* violationKindName(ViolationKind k);

/// Machine-readable witness of a broken invariant. The witnesses carry
/// enough to reproduce the failure (both edges of a crossing, the frame
/// index, the offending points).
struct Violation {
    ViolationKind kind;
    std::optional<int> frame;
    std::vector<VertexId> vertices;
    std::vector<Point> points;
    std::string detail;
};

} // namespace gstory
