#include <doctest.h>

#include "gstory/generate.hpp"
#include "gstory/path_layout.hpp"
#include "gstory/tree_layout.hpp"
#include "gstory/verify.hpp"
#include "helpers.hpp"

using namespace gstory;
using testutil::makeStory;

namespace {

DrawingStory drawn(GraphStory s, std::vector<Point> pos) {
    DrawingStory d;
    d.story = std::move(s);
    d.pos = std::move(pos);
    return d;
}

} // namespace

TEST_CASE("proper crossing is flagged") {
    const GraphStory s = makeStory(Kind::General, 4, 4, {{0, 1}, {2, 3}});
    const auto d = drawn(s, {{0, 0}, {2, 2}, {0, 2}, {2, 0}});
    const auto r = checkFramePlanarity(d);
    REQUIRE(!r.passed());
    CHECK(r.violations[0].kind == ViolationKind::Crossing);
}

TEST_CASE("edges touching at a non-shared endpoint are flagged") {
    const GraphStory s = makeStory(Kind::General, 4, 4, {{0, 1}, {2, 3}});
    // (1,1) of edge 2 lies in the middle of edge 1.
    const auto d = drawn(s, {{0, 0}, {2, 2}, {1, 1}, {3, 0}});
    CHECK(!checkFramePlanarity(d).passed());
}

TEST_CASE("shared endpoint is fine, collinear overlap is not") {
    const GraphStory star = makeStory(Kind::Tree, 3, 3, {{0, 1}, {0, 2}});
    CHECK(checkFramePlanarity(drawn(star, {{0, 0}, {1, 0}, {0, 1}})).passed());
    // Both edges leave v1 along the same ray.
    CHECK(!checkFramePlanarity(drawn(star, {{0, 0}, {1, 0}, {2, 0}})).passed());
}

TEST_CASE("coincident vertices and vertex-on-edge are overlaps") {
    const GraphStory s = makeStory(Kind::General, 3, 3, {{0, 1}});
    const auto coincide = checkFramePlanarity(drawn(s, {{0, 0}, {1, 1}, {0, 0}}));
    REQUIRE(!coincide.passed());
    CHECK(coincide.violations[0].kind == ViolationKind::Overlap);
    const auto onEdge = checkFramePlanarity(drawn(s, {{0, 0}, {2, 2}, {1, 1}}));
    REQUIRE(!onEdge.passed());
    CHECK(onEdge.violations[0].kind == ViolationKind::Overlap);
}

TEST_CASE("violations outside the shared window are not reported") {
    // v1 and v3 would collide, but with W=2 they never co-occur.
    const GraphStory s = makeStory(Kind::General, 2, 3, {});
    CHECK(checkFramePlanarity(drawn(s, {{0, 0}, {1, 1}, {0, 0}})).passed());
}

TEST_CASE("grid bounds") {
    const GraphStory s = makeStory(Kind::General, 2, 2, {});
    const auto d = drawn(s, {{1, 1}, {3, 2}});
    CHECK(checkGridBounds(d, {1, 3, 1, 2}).passed());
    const auto r = checkGridBounds(d, {1, 2, 1, 2});
    REQUIRE(!r.passed());
    CHECK(r.violations[0].kind == ViolationKind::OutOfBounds);
    CHECK(r.violations[0].vertices == std::vector<VertexId>{"v2"});
}

TEST_CASE("position stability across frame lists") {
    std::vector<std::map<VertexId, Point>> framePositions(3);
    framePositions[0]["a"] = {1, 1};
    framePositions[1]["a"] = {1, 1};
    framePositions[1]["b"] = {2, 2};
    framePositions[2]["b"] = {2, 2};
    CHECK(checkPositionStability(framePositions).passed());
    framePositions[2]["b"] = {2, 3};
    const auto r = checkPositionStability(framePositions);
    REQUIRE(!r.passed());
    CHECK(r.violations[0].kind == ViolationKind::MovedVertex);
    CHECK(r.violations[0].frame == 3);
}

TEST_CASE("definition checks reject broken forest drawings") {
    const OrderedForest f = makeForest({{"r", {1}}, {"a", {}}}, {0});
    const int W = 2;
    SUBCASE("valid") {
        CHECK(checkDefinition1(f, {{0, 8}, {1, 6}}, W).passed());
    }
    SUBCASE("root off the axis") {
        CHECK(!checkDefinition1(f, {{1, 8}, {2, 6}}, W).passed());
    }
    SUBCASE("last root below 4W") {
        CHECK(!checkDefinition1(f, {{0, 7}, {1, 6}}, W).passed());
    }
    SUBCASE("child above parent") {
        CHECK(!checkDefinition1(f, {{0, 8}, {1, 9}}, W).passed());
    }
    SUBCASE("vertex strictly inside another wedge") {
        // (1,7) lies inside the wedge of (0,8): dy=-1, -2dx=-2 < -1 < 0.
        CHECK(!checkDefinition1(f, {{0, 8}, {1, 7}}, W).passed());
    }
}

TEST_CASE("induced planarity differs from frame planarity") {
    // Path v1..v4, W=2, crossing between edges that never co-occur.
    const GraphStory s = makeStory(Kind::Path, 2, 4, {{0, 1}, {1, 2}, {2, 3}});
    const auto d = drawn(s, {{0, 0}, {2, 2}, {3, 1}, {1, 3}});
    CHECK(checkFramePlanarity(d).passed());
    CHECK(!checkInducedPlanarity(d).passed());
}

TEST_CASE("report merging accumulates") {
    const GraphStory s = makeStory(Kind::General, 2, 2, {});
    const auto d = drawn(s, {{5, 5}, {6, 6}});
    VerificationReport r = checkGridBounds(d, {0, 1, 0, 1});
    const auto before = r.violations.size();
    r.merge(checkGridBounds(d, {0, 1, 0, 1}));
    CHECK(r.violations.size() == 2 * before);
}

TEST_CASE("agrees with the rational oracle on random small frames") {
    std::mt19937_64 rng(101);
    int disagreementsPossible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        std::vector<int> taus(n);
        for (int i = 0; i < n; ++i) taus[i] = i + 1;
        GraphStory s;
        s.kind = Kind::General;
        s.window = n;   // one full frame
        for (int i = 0; i < n; ++i) s.ids.push_back("v" + std::to_string(i + 1));
        s.tau = taus;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) s.edges.emplace_back(i, j);
        s.validate();
        DrawingStory d;
        d.story = s;
        for (int i = 0; i < n; ++i)
            d.pos.push_back({static_cast<long long>(rng() % 7),
                             static_cast<long long>(rng() % 7)});
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        const bool oracle = testutil::framePlanarRational(d, all, s.edges);
        const bool verdict = checkFramePlanarity(d).passed();
        CHECK(verdict == oracle);
        if (!oracle) ++disagreementsPossible;
    }
    CHECK(disagreementsPossible > 50);   // the corpus exercises both outcomes
}
