#pragma once

#include <cstdint>

#include "gstory/story.hpp"

namespace gstory {

enum class TauMode { Identity, Shuffled };
enum class TreeShape { UniformAttach, Caterpillar, Star };

/// Path v1-...-vn; tau is the identity or a seeded permutation.
/// Deterministic per (n, window, mode, seed).
GraphStory genPath(int n, int window, TauMode mode, std::uint64_t seed = 0);

/// Random tree with tau equal to appearance order. uniformAttach joins
/// each new vertex to a uniformly random earlier one; caterpillar and
/// star stress the bucket-edge filtering and the dummy-edge repair.
GraphStory genTree(int n, int window, std::uint64_t seed, TreeShape shape);

/// The nested-triangles lower-bound family: 3-cycles C_3, C_6, ..., C_n
/// plus the connector edges (v_i, v_{i+3}); tau(v_i) = i. The window
/// defaults to 9; other values are allowed for exploration only.
/// Throws BadSize unless n is a multiple of 3 with n >= 6.
GraphStory genNestedTriangles(int n, int window = 9);

/// Concentric integer placement of a nested-triangles story, outermost
/// triangle first: every frame and the induced drawing of the whole
/// graph are planar, and the bounding box side grows linearly in n.
DrawingStory concentricLayout(const GraphStory& story);

} // namespace gstory
