#include <doctest.h>

#include "gstory/generate.hpp"
#include "gstory/io.hpp"
#include "gstory/path_layout.hpp"
#include "helpers.hpp"

using namespace gstory;
using testutil::makeStory;

TEST_CASE("story round trip") {
    const GraphStory s = genTree(25, 4, 3, TreeShape::UniformAttach);
    const std::string text = serializeStory(s);
    const GraphStory back = parseStory(text);
    CHECK(back.kind == s.kind);
    CHECK(back.window == s.window);
    CHECK(back.ids == s.ids);
    CHECK(back.tau == s.tau);
    CHECK(back.edges == s.edges);
    CHECK(serializeStory(back) == text);
}

TEST_CASE("layout round trip") {
    const DrawingStory d = layoutPath(genPath(30, 4, TauMode::Shuffled, 8));
    const Layout l = toLayout(d);
    const std::string text = serializeLayout(l);
    const Layout back = parseLayout(text);
    CHECK(back.positions == l.positions);
    CHECK(back.grid.xmin == l.grid.xmin);
    CHECK(back.grid.xmax == l.grid.xmax);
    CHECK(back.grid.ymin == l.grid.ymin);
    CHECK(back.grid.ymax == l.grid.ymax);
    CHECK(serializeLayout(back) == text);
}

TEST_CASE("applyLayout restores the drawing and flags missing vertices") {
    const GraphStory s = genPath(10, 2, TauMode::Identity);
    const DrawingStory d = layoutPath(s);
    Layout l = toLayout(d);
    const DrawingStory back = applyLayout(s, l);
    CHECK(back.pos == d.pos);
    l.positions.erase("v3");
    CHECK_THROWS_AS(applyLayout(s, l), MissingPosition);
}

TEST_CASE("parseStory rejects malformed input") {
    CHECK_THROWS_AS(parseStory("not json"), ParseError);
    CHECK_THROWS_AS(parseStory("{}"), ParseError);
    CHECK_THROWS_AS(parseStory(R"({"kind":"path","window":0,"vertices":[],"edges":[]})"),
                    InvalidStory);
    CHECK_THROWS_AS(
        parseStory(
            R"({"kind":"path","window":1,"vertices":[{"id":"a","tau":1}],"edges":[["a","b"]]})"),
        ParseError);
}

TEST_CASE("violation json names the kind and vertices") {
    Violation v;
    v.kind = ViolationKind::Crossing;
    v.frame = 4;
    v.vertices = {"a", "b", "c", "d"};
    v.detail = "edges (a,b) and (c,d) cross";
    const std::string j = violationToJson(v);
    CHECK(j.find("\"Crossing\"") != std::string::npos);
    CHECK(j.find("\"a\"") != std::string::npos);
    CHECK(j.find("4") != std::string::npos);
}

TEST_CASE("serialization is byte-stable across runs") {
    const GraphStory s = genPath(100, 8, TauMode::Shuffled, 42);
    CHECK(serializeStory(s) == serializeStory(genPath(100, 8, TauMode::Shuffled, 42)));
    CHECK(serializeLayout(toLayout(layoutPath(s))) ==
          serializeLayout(toLayout(layoutPath(s))));
}
