#include "gstory/forest.hpp"

namespace gstory {

OrderedForest makeForest(const std::vector<ForestNode>& nodes, std::vector<int> roots) {
    OrderedForest f;
    f.roots = std::move(roots);
    f.ids.reserve(nodes.size());
    f.childOffset.reserve(nodes.size() + 1);
    f.childOffset.push_back(0);
    for (const ForestNode& node : nodes) {
        f.ids.push_back(node.id);
        f.childList.insert(f.childList.end(), node.children.begin(), node.children.end());
        f.childOffset.push_back(static_cast<int>(f.childList.size()));
    }
    return f;
}

const char* quadrantName(Quadrant q) {
    switch (q) {
        case Quadrant::Q1: return "Q1";
        case Quadrant::Q4: return "Q4";
        case Quadrant::Q3: return "Q3";
        case Quadrant::Q2: return "Q2";
    }
    return "?";
}

// The recursive construction unrolls to a closed form: each placement
// step either hangs the child forest one right and two down of its root,
// or stacks a whole tree two units below the previous one. The resulting
// y-coordinates are 4W, 4W-2, ..., 4W-2m+2 from the top down, and the
// top-to-bottom order of the vertices is the reverse of a left-to-right
// post-order traversal of the forest. The x-coordinate is the depth.
std::vector<Point> drawQ1(const OrderedForest& forest, int window) {
    const int m = forest.size();
    if (m == 0) throw EmptyForest("forest has no vertices");
    if (m > window) throw ForestTooLarge("forest larger than the window");

    std::vector<Point> pos(m);
    int postIndex = 0;
    // Explicit stack: (node, depth, offset of the next child to descend into).
    struct Item {
        int node;
        int depth;
        int child;
    };
    std::vector<Item> stack;
    stack.reserve(m);
    for (int root : forest.roots) {
        stack.push_back({root, 0, forest.childOffset[root]});
        while (!stack.empty()) {
            Item& top = stack.back();
            if (top.child < forest.childOffset[top.node + 1]) {
                int next = forest.childList[top.child++];
                stack.push_back({next, top.depth + 1, forest.childOffset[next]});
            } else {
                pos[top.node] = {top.depth,
                                 4LL * window - 2LL * (m - 1 - postIndex)};
                ++postIndex;
                stack.pop_back();
            }
        }
    }
    return pos;
}

std::vector<Point> drawQuadrant(const OrderedForest& forest, int window, Quadrant q) {
    std::vector<Point> pos = drawQ1(forest, window);
    for (Point& p : pos) p = rotate(p, q);
    return pos;
}

} // namespace gstory
