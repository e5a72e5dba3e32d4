#include "gstory/story.hpp"

#include <algorithm>
#include <cstdint>

namespace gstory {

namespace {

bool isConnected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return true;
    // Flat compressed adjacency; keeps validation allocation-light.
    std::vector<int> offset(n + 1, 0), flat(edges.size() * 2);
    for (auto [u, v] : edges) {
        ++offset[u + 1];
        ++offset[v + 1];
    }
    for (int i = 0; i < n; ++i) offset[i + 1] += offset[i];
    std::vector<int> cursor(offset.begin(), offset.end() - 1);
    for (auto [u, v] : edges) {
        flat[cursor[u]++] = v;
        flat[cursor[v]++] = u;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int i = offset[u]; i < offset[u + 1]; ++i) {
            const int w = flat[i];
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace

void GraphStory::validate() {
    const int nv = n();
    if (window < 1) throw InvalidStory("window must be >= 1");
    if (static_cast<int>(tau.size()) != nv)
        throw InvalidStory("tau and vertex lists differ in length");

    indexOf.clear();
    indexOf.reserve(ids.size());
    for (int i = 0; i < nv; ++i) {
        if (!indexOf.emplace(ids[i], i).second)
            throw InvalidStory("duplicate vertex id: " + ids[i]);
    }

    byTau.assign(nv, -1);
    for (int i = 0; i < nv; ++i) {
        if (tau[i] < 1 || tau[i] > nv)
            throw InvalidStory("tau out of range for vertex " + ids[i]);
        if (byTau[tau[i] - 1] != -1)
            throw InvalidStory("tau is not a bijection");
        byTau[tau[i] - 1] = i;
    }

    std::vector<std::uint64_t> edgeKeys;
    edgeKeys.reserve(edges.size());
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= nv || v < 0 || v >= nv)
            throw InvalidStory("edge endpoint out of range");
        if (u == v) throw InvalidStory("self-loop on vertex " + ids[u]);
        edgeKeys.push_back(static_cast<std::uint64_t>(std::min(u, v)) << 32 |
                           static_cast<std::uint32_t>(std::max(u, v)));
    }
    std::sort(edgeKeys.begin(), edgeKeys.end());
    const auto dup = std::adjacent_find(edgeKeys.begin(), edgeKeys.end());
    if (dup != edgeKeys.end())
        throw InvalidStory("duplicate edge (" + ids[static_cast<int>(*dup >> 32)] + "," +
                           ids[static_cast<int>(*dup & 0xffffffff)] + ")");

    if (kind == Kind::Path) {
        if (static_cast<int>(edges.size()) != nv - 1 || !isConnected(nv, edges))
            throw NotAPath("edges do not form a spanning path");
        std::vector<int> deg(nv, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int d : deg)
            if (d > 2) throw NotAPath("vertex of degree > 2 in a path story");
    } else if (kind == Kind::Tree) {
        if (static_cast<int>(edges.size()) != nv - 1 || !isConnected(nv, edges))
            throw NotATree("edges do not form a tree");
    }
}

std::vector<Frame> frames(const GraphStory& story) {
    const int n = story.n();
    const int W = story.window;
    if (W < 1 || static_cast<int>(story.byTau.size()) != n ||
        std::count(story.byTau.begin(), story.byTau.end(), -1) != 0)
        throw InvalidStory("story not validated or invalid");

    std::vector<Frame> out(n + W - 1);
    for (int t = 1; t <= n + W - 1; ++t) {
        Frame& f = out[t - 1];
        f.t = t;
        const int lo = std::max(1, t - W + 1);   // tau in [lo, hi]
        const int hi = std::min(t, n);
        f.vertices.assign(story.byTau.begin() + (lo - 1), story.byTau.begin() + hi);
    }
    // An edge is alive exactly while both endpoints are: frames
    // [max(tau), min(tau)+W-1], clamped to the story length.
    for (auto e : story.edges) {
        const int a = story.tau[e.first];
        const int b = story.tau[e.second];
        const int from = std::max(a, b);
        const int to = std::min({std::min(a, b) + W - 1, n + W - 1});
        for (int t = from; t <= to; ++t) out[t - 1].edges.push_back(e);
    }
    return out;
}

BucketPartition buckets(const GraphStory& story) {
    const int n = story.n();
    const int W = story.window;
    BucketPartition p;
    p.h = (n + W - 1) / W;
    p.bucketOf.resize(n);
    for (int i = 0; i < n; ++i) p.bucketOf[i] = (story.tau[i] - 1) / W + 1;
    return p;
}

std::vector<int> BucketPartition::bucketVertices(const GraphStory& story, int i) const {
    const int W = story.window;
    const int lo = (i - 1) * W + 1;
    const int hi = std::min(i * W, story.n());
    std::vector<int> out;
    out.reserve(hi - lo + 1);
    for (int t = lo; t <= hi; ++t) out.push_back(story.byTau[t - 1]);
    return out;
}

int windowSupergraphIndex(int t, int window) {
    return (t + window - 1) / window;
}

const char* violationKindName(ViolationKind k) {
    switch (k) {
        case ViolationKind::Crossing: return "Crossing";
        case ViolationKind::Overlap: return "Overlap";
        case ViolationKind::OutOfBounds: return "OutOfBounds";
        case ViolationKind::MovedVertex: return "MovedVertex";
        case ViolationKind::WedgeIntrusion: return "WedgeIntrusion";
        case ViolationKind::OrderViolation: return "OrderViolation";
    }
    return "Unknown";
}

} // namespace gstory
