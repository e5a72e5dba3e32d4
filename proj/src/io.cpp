#include "gstory/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gstory {

using nlohmann::json;

namespace {

json parseJson(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Kind kindFromString(const std::string& s) {
    if (s == "path") return Kind::Path;
    if (s == "tree") return Kind::Tree;
    if (s == "general") return Kind::General;
    throw ParseError("unknown story kind: " + s);
}

const char* kindToString(Kind k) {
    switch (k) {
        case Kind::Path: return "path";
        case Kind::Tree: return "tree";
        case Kind::General: return "general";
    }
    return "general";
}

} // namespace

GraphStory parseStory(const std::string& text) {
    const json j = parseJson(text);
    try {
        GraphStory s;
        s.kind = kindFromString(j.at("kind").get<std::string>());
        s.window = j.at("window").get<int>();
        for (const auto& v : j.at("vertices")) {
            s.ids.push_back(v.at("id").get<std::string>());
            s.tau.push_back(v.at("tau").get<int>());
        }
        std::unordered_map<std::string, int> index;
        for (size_t i = 0; i < s.ids.size(); ++i) index.emplace(s.ids[i], static_cast<int>(i));
        for (const auto& e : j.at("edges")) {
            const auto a = index.find(e.at(0).get<std::string>());
            const auto b = index.find(e.at(1).get<std::string>());
            if (a == index.end() || b == index.end())
                throw ParseError("edge references an unknown vertex");
            s.edges.emplace_back(a->second, b->second);
        }
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad story file: ") + e.what());
    }
}

std::string serializeStory(const GraphStory& story) {
    json j;
    j["kind"] = kindToString(story.kind);
    j["window"] = story.window;
    j["vertices"] = json::array();
    for (int i = 0; i < story.n(); ++i)
        j["vertices"].push_back({{"id", story.ids[i]}, {"tau", story.tau[i]}});
    j["edges"] = json::array();
    for (auto [u, v] : story.edges)
        j["edges"].push_back({story.ids[u], story.ids[v]});
    return j.dump(2) + "\n";
}

Layout parseLayout(const std::string& text) {
    const json j = parseJson(text);
    try {
        Layout l;
        for (const auto& [id, p] : j.at("positions").items())
            l.positions[id] = {p.at(0).get<long long>(), p.at(1).get<long long>()};
        const auto& g = j.at("grid");
        l.grid = {g.at("xmin").get<long long>(), g.at("xmax").get<long long>(),
                  g.at("ymin").get<long long>(), g.at("ymax").get<long long>()};
        return l;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad layout file: ") + e.what());
    }
}

std::string serializeLayout(const Layout& layout) {
    json j;
    j["positions"] = json::object();
    for (const auto& [id, p] : layout.positions)
        j["positions"][id] = {p.x, p.y};
    j["grid"] = {{"xmin", layout.grid.xmin},
                 {"xmax", layout.grid.xmax},
                 {"ymin", layout.grid.ymin},
                 {"ymax", layout.grid.ymax}};
    return j.dump(2) + "\n";
}

Layout toLayout(const DrawingStory& drawing) {
    Layout l;
    for (int v = 0; v < drawing.story.n(); ++v)
        l.positions[drawing.story.ids[v]] = drawing.pos[v];
    if (!drawing.pos.empty()) {
        l.grid = {drawing.pos[0].x, drawing.pos[0].x, drawing.pos[0].y, drawing.pos[0].y};
        for (const Point& p : drawing.pos) {
            l.grid.xmin = std::min(l.grid.xmin, p.x);
            l.grid.xmax = std::max(l.grid.xmax, p.x);
            l.grid.ymin = std::min(l.grid.ymin, p.y);
            l.grid.ymax = std::max(l.grid.ymax, p.y);
        }
    }
    return l;
}

DrawingStory applyLayout(const GraphStory& story, const Layout& layout) {
    DrawingStory d;
    d.story = story;
    d.pos.resize(story.n());
    for (int v = 0; v < story.n(); ++v) {
        const auto it = layout.positions.find(story.ids[v]);
        if (it == layout.positions.end())
            throw MissingPosition("no position for vertex " + story.ids[v]);
        d.pos[v] = it->second;
    }
    return d;
}

std::string violationToJson(const Violation& violation) {
    json j;
    j["kind"] = violationKindName(violation.kind);
    if (violation.frame) j["frame"] = *violation.frame;
    j["vertices"] = violation.vertices;
    j["points"] = json::array();
    for (const Point& p : violation.points) j["points"].push_back({p.x, p.y});
    j["detail"] = violation.detail;
    return j.dump();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

} // namespace gstory
