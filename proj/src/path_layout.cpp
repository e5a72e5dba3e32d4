#include "gstory/path_layout.hpp"

#include <algorithm>
#include <array>

namespace gstory {

std::vector<int> pathOrder(const GraphStory& story) {
    if (story.kind != Kind::Path) throw NotAPath("story kind is not Path");
    const int n = story.n();
    if (n == 1) return {0};
    if (static_cast<int>(story.edges.size()) != n - 1)
        throw NotAPath("edge count is not n-1");

    // Flat adjacency: at most two neighbors per vertex.
    std::vector<std::array<int, 2>> adj(n, {-1, -1});
    std::vector<int> deg(n, 0);
    for (auto [u, v] : story.edges) {
        if (deg[u] == 2 || deg[v] == 2) throw NotAPath("vertex of degree > 2");
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
    }

    int start = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] == 1 && (start == -1 || story.tau[i] < story.tau[start]))
            start = i;
    }
    if (start == -1) throw NotAPath("no degree-1 endpoint");

    std::vector<int> order;
    order.reserve(n);
    int prev = -1, cur = start;
    while (true) {
        order.push_back(cur);
        int next = -1;
        for (int k = 0; k < deg[cur]; ++k)
            if (adj[cur][k] != prev) next = adj[cur][k];
        if (next == -1) break;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n)
        throw NotAPath("edges do not form a single spanning path");
    return order;
}

AxisBuckets axisBuckets(const GraphStory& story, const BucketPartition& partition) {
    const int n = story.n();
    AxisBuckets ab;
    ab.xBucketOf.resize(n);
    ab.yBucketOf.resize(n);
    ab.xRank.resize(n);
    ab.yRank.resize(n);

    // Bx_1 = B_1, Bx_i = B_{2i-2} u B_{2i-1}; By_j = B_{2j-1} u B_{2j}.
    std::vector<int> xCount(partition.h / 2 + 2, 0);
    std::vector<int> yCount(partition.h / 2 + 2, 0);

    for (int v : pathOrder(story)) {
        const int b = partition.bucketOf[v];
        const int xb = (b == 1) ? 1 : b / 2 + 1;
        const int yb = (b + 1) / 2;
        ab.xBucketOf[v] = xb;
        ab.yBucketOf[v] = yb;
        ab.xRank[v] = ++xCount[xb];
        ab.yRank[v] = ++yCount[yb];
    }
    return ab;
}

DrawingStory layoutPath(GraphStory story) {
    const int n = story.n();
    const AxisBuckets ab = axisBuckets(story, buckets(story));
    DrawingStory d;
    d.story = std::move(story);
    d.pos.resize(n);
    for (int v = 0; v < n; ++v)
        d.pos[v] = {ab.xRank[v], ab.yRank[v]};
    return d;
}

} // namespace gstory
