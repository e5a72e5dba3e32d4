#include "gstory/tree_layout.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

namespace gstory {

namespace {

// Compressed adjacency; neighbors(u) lists u's neighbors in ascending
// tau order. Flat arrays keep the build at O(n+m) with O(1) allocations.
struct CsrAdjacency {
    std::vector<int> offset;   // size n+1
    std::vector<int> flat;     // size 2m

    std::pair<const int*, const int*> neighbors(int u) const {
        return {flat.data() + offset[u], flat.data() + offset[u + 1]};
    }
};

CsrAdjacency buildAdjacency(const GraphStory& story,
                            const std::vector<std::pair<int, int>>& edges,
                            bool tauOrdered) {
    const int n = story.n();
    CsrAdjacency a;
    a.offset.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++a.offset[u + 1];
        ++a.offset[v + 1];
    }
    for (int i = 0; i < n; ++i) a.offset[i + 1] += a.offset[i];
    a.flat.resize(edges.size() * 2);
    std::vector<int> cursor(a.offset.begin(), a.offset.end() - 1);
    if (tauOrdered) {
        // Two passes: bucket by the endpoint, then drain in tau order.
        std::vector<int> incOffset(n + 1, 0), incFlat(edges.size() * 2);
        for (auto [u, v] : edges) {
            ++incOffset[u + 1];
            ++incOffset[v + 1];
        }
        for (int i = 0; i < n; ++i) incOffset[i + 1] += incOffset[i];
        std::vector<int> incCursor(incOffset.begin(), incOffset.end() - 1);
        for (auto [u, v] : edges) {
            incFlat[incCursor[u]++] = v;
            incFlat[incCursor[v]++] = u;
        }
        for (int w : story.byTau)
            for (int i = incOffset[w]; i < incOffset[w + 1]; ++i)
                a.flat[cursor[incFlat[i]]++] = w;
    } else {
        for (auto [u, v] : edges) {
            a.flat[cursor[u]++] = v;
            a.flat[cursor[v]++] = u;
        }
    }
    return a;
}

} // namespace

EdgeFilterResult phase1FilterEdges(const GraphStory& story,
                                   const BucketPartition& partition) {
    EdgeFilterResult r;
    for (auto e : story.edges) {
        if (std::abs(partition.bucketOf[e.first] - partition.bucketOf[e.second]) > 1)
            r.removed.push_back(e);
        else
            r.kept.push_back(e);
    }
    return r;
}

DummyRepairResult phase2AddDummyEdges(const GraphStory& story,
                                      const std::vector<std::pair<int, int>>& forestEdges,
                                      const BucketPartition& partition) {
    const int n = story.n();
    const int W = story.window;
    const int h = partition.h;

    const CsrAdjacency adj = buildAdjacency(story, forestEdges, false);

    // Connected components, numbered in ascending order of their
    // smallest-tau vertex (the component seed).
    std::vector<int> comp(n, -1);
    std::vector<int> seed;
    std::vector<int> stack;
    for (int v : story.byTau) {
        if (comp[v] != -1) continue;
        const int c = static_cast<int>(seed.size());
        seed.push_back(v);
        stack.assign(1, v);
        comp[v] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto [it, end] = adj.neighbors(u);
            for (; it != end; ++it)
                if (comp[*it] == -1) {
                    comp[*it] = c;
                    stack.push_back(*it);
                }
        }
    }
    const int nc = static_cast<int>(seed.size());

    // Each component spans consecutive buckets; elect its representative
    // for every bucket it touches (the smallest-tau vertex there).
    std::vector<int> minB(nc, h + 1), maxB(nc, 0);
    for (int v = 0; v < n; ++v) {
        const int c = comp[v], b = partition.bucketOf[v];
        minB[c] = std::min(minB[c], b);
        maxB[c] = std::max(maxB[c], b);
    }
    std::vector<std::vector<int>> rep(nc);
    for (int c = 0; c < nc; ++c) rep[c].assign(maxB[c] - minB[c] + 1, -1);
    for (int v : story.byTau) {
        const int c = comp[v], b = partition.bucketOf[v];
        if (rep[c][b - minB[c]] == -1) rep[c][b - minB[c]] = v;
    }

    DummyRepairResult result;
    result.treeEdges = forestEdges;

    std::vector<char> merged(nc, 0);
    std::vector<int> globalRep(h + 1, -1);   // bucket -> representative of T*
    int p = h + 1, q = 0;
    auto merge = [&](int c) {
        for (int b = minB[c]; b <= maxB[c]; ++b)
            if (globalRep[b] == -1) globalRep[b] = rep[c][b - minB[c]];
        merged[c] = 1;
        p = std::min(p, minB[c]);
        q = std::max(q, maxB[c]);
    };
    auto addDummy = [&](int u, int v) {
        result.treeEdges.emplace_back(u, v);
        result.dummyEdges.emplace_back(u, v);
    };

    merge(comp[story.byTau[0]]);

    // Extend T* toward smaller buckets first, then larger. Every vertex
    // of the adjacent bucket is outside T*, so the first one by tau works.
    while (p > 1) {
        const int v = story.byTau[(p - 2) * W];
        const int c = comp[v];
        addDummy(rep[c][(p - 1) - minB[c]], globalRep[p]);
        merge(c);
    }
    while (q < h) {
        const int v = story.byTau[q * W];
        const int c = comp[v];
        addDummy(rep[c][(q + 1) - minB[c]], globalRep[q]);
        merge(c);
    }

    // Remaining components attach inside their seed's bucket.
    for (int c = 0; c < nc; ++c) {
        if (merged[c]) continue;
        addDummy(seed[c], globalRep[partition.bucketOf[seed[c]]]);
        merged[c] = 1;
    }
    return result;
}

Decomposition phase3Decompose(const GraphStory& story,
                              const std::vector<std::pair<int, int>>& treeEdges,
                              const BucketPartition& partition) {
    const int n = story.n();
    const CsrAdjacency adj = buildAdjacency(story, treeEdges, true);

    Decomposition d;
    d.root = story.byTau[0];
    d.parent.assign(n, -1);
    d.componentOf.assign(n, -1);

    // DFS from the root. Component boundaries are exactly the edges that
    // change bucket.
    std::vector<int> stack{d.root};
    std::vector<char> seen(n, 0);
    seen[d.root] = 1;
    d.componentOf[d.root] = 0;
    d.components.push_back({{}, partition.bucketOf[d.root], 1, d.root});

    int visited = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++visited;
        auto [it, end] = adj.neighbors(u);
        for (; it != end; ++it) {
            const int w = *it;
            if (seen[w]) continue;
            seen[w] = 1;
            d.parent[w] = u;
            if (partition.bucketOf[w] == partition.bucketOf[u]) {
                d.componentOf[w] = d.componentOf[u];
            } else {
                d.componentOf[w] = static_cast<int>(d.components.size());
                d.components.push_back({{},
                                        partition.bucketOf[w],
                                        d.components[d.componentOf[u]].setIndex + 1,
                                        w});
            }
            stack.push_back(w);
        }
    }
    if (visited != n)
        throw NotATree("repaired edge set does not span the story");

    // Compressed child lists; filling in tau order makes every list
    // ascending by tau.
    d.childOffset.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        if (d.parent[v] != -1) ++d.childOffset[d.parent[v] + 1];
    for (int v = 0; v < n; ++v) d.childOffset[v + 1] += d.childOffset[v];
    d.childList.resize(n - 1);
    std::vector<int> cursor(d.childOffset.begin(), d.childOffset.end() - 1);
    for (int v : story.byTau)
        if (d.parent[v] != -1) d.childList[cursor[d.parent[v]]++] = v;

    for (int v : story.byTau) d.components[d.componentOf[v]].vertices.push_back(v);
    return d;
}

void phase4OrderChildren(Decomposition& decomposition) {
    for (int v = 0; v < static_cast<int>(decomposition.parent.size()); ++v) {
        auto begin = decomposition.childList.begin() + decomposition.childOffset[v];
        auto end = decomposition.childList.begin() + decomposition.childOffset[v + 1];
        std::stable_sort(begin, end, [&](int a, int b) {
            const bool sameA = decomposition.componentOf[a] == decomposition.componentOf[v];
            const bool sameB = decomposition.componentOf[b] == decomposition.componentOf[v];
            return sameA > sameB;   // same-set children first, tau order kept
        });
    }
}

ForestAssignment phase5BuildForests(const GraphStory& story,
                                    const Decomposition& decomposition,
                                    const BucketPartition& partition) {
    (void)partition;
    int k = 0;
    for (const auto& c : decomposition.components) k = std::max(k, c.setIndex);

    // Pre-order traversal collecting component roots per set R_j; the
    // traversal order realizes the LCA tie-break between same-set roots.
    std::vector<std::vector<int>> perSet(k + 1);
    // (vertex, offset of the next unvisited child in childList)
    std::vector<std::pair<int, int>> stack{
        {decomposition.root, decomposition.childOffset[decomposition.root]}};
    perSet[1].push_back(decomposition.componentOf[decomposition.root]);
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (next == decomposition.childOffset[u + 1]) {
            stack.pop_back();
            continue;
        }
        const int w = decomposition.childList[next++];
        if (decomposition.componentOf[w] != decomposition.componentOf[u])
            perSet[decomposition.components[decomposition.componentOf[w]].setIndex]
                .push_back(decomposition.componentOf[w]);
        stack.emplace_back(w, decomposition.childOffset[w]);
    }

    ForestAssignment fa;
    std::map<std::pair<int, Quadrant>, int> entryIndex;
    auto entryFor = [&](int bucket, Quadrant q) -> ForestAssignment::Entry& {
        auto [it, inserted] = entryIndex.try_emplace({bucket, q},
                                                     static_cast<int>(fa.entries.size()));
        if (inserted) {
            fa.entries.emplace_back();
            fa.entries.back().bucket = bucket;
            fa.entries.back().quadrant = q;
            fa.entries.back().forest.childOffset.push_back(0);
        }
        return fa.entries[it->second];
    };

    for (int j = 1; j <= k; ++j) {
        for (int ci : perSet[j]) {
            const auto& c = decomposition.components[ci];
            const int i = c.bucketLabel;
            Quadrant q;
            if (i % 2 == 1)
                q = (j % 4 == 1) ? Quadrant::Q1 : Quadrant::Q3;
            else
                q = (j % 4 == 2) ? Quadrant::Q4 : Quadrant::Q2;

            ForestAssignment::Entry& entry = entryFor(i, q);
            entry.componentIds.push_back(ci);

            // Copy the component subtree in breadth-first order: each
            // node's children get consecutive indices, so the compressed
            // child lists come out as the ranges handed out on append.
            // Child order is inherited from the ordered tree, restricted
            // to same-component children. Nodes stay anonymous; the
            // story vertex mapping is all the assembly needs.
            const int base = entry.forest.size();
            entry.forest.roots.push_back(base);
            entry.storyVertex.push_back(c.root);
            for (int node = base; node < static_cast<int>(entry.storyVertex.size());
                 ++node) {
                auto [first, last] = decomposition.childrenOf(entry.storyVertex[node]);
                for (; first != last; ++first)
                    if (decomposition.componentOf[*first] == ci) {
                        entry.forest.childList.push_back(
                            static_cast<int>(entry.storyVertex.size()));
                        entry.storyVertex.push_back(*first);
                    }
                entry.forest.childOffset.push_back(
                    static_cast<int>(entry.forest.childList.size()));
            }
        }
    }
    return fa;
}

TreeLayoutResult layoutTreeDetailed(GraphStory story) {
    if (story.kind != Kind::Tree) throw NotATree("story kind is not Tree");
    const int n = story.n();
    const int W = story.window;

    TreeLayoutResult r;
    const BucketPartition partition = buckets(story);
    EdgeFilterResult filtered = phase1FilterEdges(story, partition);
    r.removedEdges = std::move(filtered.removed);
    DummyRepairResult repaired = phase2AddDummyEdges(story, filtered.kept, partition);
    r.dummyEdges = std::move(repaired.dummyEdges);
    r.decomposition = phase3Decompose(story, repaired.treeEdges, partition);
    phase4OrderChildren(r.decomposition);
    r.forests = phase5BuildForests(story, r.decomposition, partition);

    r.drawing.story = std::move(story);
    r.drawing.pos.assign(n, {});
    r.quadrantOf.assign(n, Quadrant::Q1);
    for (const auto& entry : r.forests.entries) {
        const std::vector<Point> pos = drawQuadrant(entry.forest, W, entry.quadrant);
        for (int node = 0; node < entry.forest.size(); ++node) {
            r.drawing.pos[entry.storyVertex[node]] = pos[node];
            r.quadrantOf[entry.storyVertex[node]] = entry.quadrant;
        }
    }
    return r;
}

DrawingStory layoutTree(GraphStory story) {
    return layoutTreeDetailed(std::move(story)).drawing;
}

} // namespace gstory
