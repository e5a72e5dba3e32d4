#include <doctest.h>

#include "gstory/generate.hpp"
#include "gstory/path_layout.hpp"
#include "gstory/verify.hpp"
#include "helpers.hpp"

using namespace gstory;
using testutil::makeStory;

TEST_CASE("axis buckets of the W=2 worked path") {
    const GraphStory s = makeStory(Kind::Path, 2, 4, {{0, 1}, {1, 2}, {2, 3}});
    const AxisBuckets ab = axisBuckets(s, buckets(s));
    CHECK(ab.xBucketOf == std::vector<int>{1, 1, 2, 2});
    CHECK(ab.xRank == std::vector<int>{1, 2, 1, 2});
    CHECK(ab.yBucketOf == std::vector<int>{1, 1, 1, 1});
    CHECK(ab.yRank == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("x-bucket sizes for W=4, n=48 are 4,8,8,8,8,8,4") {
    const GraphStory s = genPath(48, 4, TauMode::Identity);
    const AxisBuckets ab = axisBuckets(s, buckets(s));
    std::vector<int> sizes(8, 0);
    for (int v = 0; v < s.n(); ++v) ++sizes[ab.xBucketOf[v]];
    CHECK(std::vector<int>(sizes.begin() + 1, sizes.end()) ==
          std::vector<int>{4, 8, 8, 8, 8, 8, 4});
}

TEST_CASE("singleton path") {
    const GraphStory s = makeStory(Kind::Path, 5, 1, {});
    const AxisBuckets ab = axisBuckets(s, buckets(s));
    CHECK(ab.xRank[0] == 1);
    CHECK(ab.yRank[0] == 1);
    CHECK(layoutPath(s).pos[0] == Point{1, 1});
}

TEST_CASE("worked W=2 path layout") {
    const GraphStory s = makeStory(Kind::Path, 2, 4, {{0, 1}, {1, 2}, {2, 3}});
    const DrawingStory d = layoutPath(s);
    CHECK(d.pos[0] == Point{1, 1});
    CHECK(d.pos[1] == Point{2, 2});
    CHECK(d.pos[2] == Point{1, 3});
    CHECK(d.pos[3] == Point{2, 4});
    CHECK(checkFramePlanarity(d).passed());
}

TEST_CASE("W=3 identity path of 9 fits [1,6]^2 and is frame-planar") {
    const GraphStory s = genPath(9, 3, TauMode::Identity);
    const DrawingStory d = layoutPath(s);
    CHECK(checkGridBounds(d, {1, 6, 1, 6}).passed());
    CHECK(checkFramePlanarity(d).passed());
}

TEST_CASE("path order starts at the smaller-tau endpoint") {
    // Path v1-v2-v3 but tau gives v3 the earliest appearance.
    const GraphStory s = makeStory(Kind::Path, 2, {2, 3, 1}, {{0, 1}, {1, 2}});
    CHECK(pathOrder(s) == std::vector<int>{2, 1, 0});
}

TEST_CASE("layoutPath rejects non-paths") {
    const GraphStory s = makeStory(Kind::Tree, 2, 3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(layoutPath(s), NotAPath);
}

TEST_CASE("grid bound, monotonicity and determinism on random paths") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 400);
        const int W = 1 + static_cast<int>(rng() % 16);
        const GraphStory s = genPath(n, W, TauMode::Shuffled, rng());
        const DrawingStory d = layoutPath(s);
        const DrawingStory d2 = layoutPath(s);
        CHECK(d.pos == d2.pos);
        CHECK(checkGridBounds(d, {1, 2 * W, 1, 2 * W}).passed());

        // Restricted to one axis bucket, coordinate order equals path order.
        const AxisBuckets ab = axisBuckets(s, buckets(s));
        const std::vector<int> order = pathOrder(s);
        std::vector<long long> lastX(n + 2, 0), lastY(n + 2, 0);
        for (int v : order) {
            CHECK(d.pos[v].x > lastX[ab.xBucketOf[v]]);
            CHECK(d.pos[v].y > lastY[ab.yBucketOf[v]]);
            lastX[ab.xBucketOf[v]] = d.pos[v].x;
            lastY[ab.yBucketOf[v]] = d.pos[v].y;
        }
    }
}

TEST_CASE("random path frames are planar") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 300);
        const int W = 1 + static_cast<int>(rng() % 16);
        const GraphStory s = genPath(n, W, TauMode::Shuffled, rng());
        const VerificationReport r = checkFramePlanarity(layoutPath(s));
        CHECK(r.passed());
    }
}
