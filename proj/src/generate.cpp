#include "gstory/generate.hpp"

#include <random>

namespace gstory {

namespace {

std::string vertexName(int k) { return "v" + std::to_string(k); }

// Bounded draw; the engine is fully specified by the standard, so
// stories are byte-identical across platforms for a given seed.
int drawBelow(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

GraphStory baseStory(Kind kind, int n, int window) {
    GraphStory s;
    s.kind = kind;
    s.window = window;
    s.ids.reserve(n);
    s.tau.reserve(n);
    for (int k = 1; k <= n; ++k) {
        s.ids.push_back(vertexName(k));
        s.tau.push_back(k);
    }
    return s;
}

} // namespace

GraphStory genPath(int n, int window, TauMode mode, std::uint64_t seed) {
    GraphStory s = baseStory(Kind::Path, n, window);
    for (int k = 0; k + 1 < n; ++k) s.edges.emplace_back(k, k + 1);
    if (mode == TauMode::Shuffled) {
        std::mt19937_64 rng(seed);
        for (int i = n - 1; i > 0; --i)
            std::swap(s.tau[i], s.tau[drawBelow(rng, i + 1)]);
    }
    s.validate();
    return s;
}

GraphStory genTree(int n, int window, std::uint64_t seed, TreeShape shape) {
    GraphStory s = baseStory(Kind::Tree, n, window);
    switch (shape) {
        case TreeShape::UniformAttach: {
            std::mt19937_64 rng(seed);
            for (int k = 1; k < n; ++k) s.edges.emplace_back(drawBelow(rng, k), k);
            break;
        }
        case TreeShape::Caterpillar: {
            // Spine of the first ceil(n/2) vertices, legs attached
            // round-robin; all legs appear after the spine.
            const int spine = (n + 1) / 2;
            for (int k = 0; k + 1 < spine; ++k) s.edges.emplace_back(k, k + 1);
            for (int k = spine; k < n; ++k) s.edges.emplace_back((k - spine) % spine, k);
            break;
        }
        case TreeShape::Star:
            for (int k = 1; k < n; ++k) s.edges.emplace_back(0, k);
            break;
    }
    s.validate();
    return s;
}

GraphStory genNestedTriangles(int n, int window) {
    if (n < 6 || n % 3 != 0)
        throw BadSize("nested triangles need n >= 6 with n divisible by 3");
    GraphStory s = baseStory(Kind::General, n, window);
    for (int i = 3; i <= n; i += 3) {
        s.edges.emplace_back(i - 3, i - 2);
        s.edges.emplace_back(i - 2, i - 1);
        s.edges.emplace_back(i - 1, i - 3);
    }
    for (int i = 1; i <= n - 3; ++i) s.edges.emplace_back(i - 1, i + 2);
    s.validate();
    return s;
}

DrawingStory concentricLayout(const GraphStory& story) {
    const int n = story.n();
    const int triangles = n / 3;
    DrawingStory d;
    d.story = story;
    d.pos.resize(n);
    // Triangle k at scale triangles-k+1, outermost first: connectors run
    // along rays through the origin, so they meet no triangle edge.
    for (int k = 1; k <= triangles; ++k) {
        const long long s = triangles - k + 1;
        d.pos[3 * (k - 1)] = {0, 2 * s};
        d.pos[3 * (k - 1) + 1] = {-2 * s, -s};
        d.pos[3 * (k - 1) + 2] = {2 * s, -s};
    }
    return d;
}

} // namespace gstory
