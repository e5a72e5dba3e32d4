#include "gstory/svg.hpp"

#include <filesystem>
#include <sstream>

#include "gstory/io.hpp"

namespace gstory {

namespace {

GridBox boundingBox(const DrawingStory& drawing) {
    GridBox b{0, 0, 0, 0};
    if (drawing.pos.empty()) return b;
    b = {drawing.pos[0].x, drawing.pos[0].x, drawing.pos[0].y, drawing.pos[0].y};
    for (const Point& p : drawing.pos) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

} // namespace

std::string renderFrameSvg(const DrawingStory& drawing, const Frame& frame,
                           GridBox box, const SvgOptions& options) {
    const long long s = options.scale;
    const long long m = options.margin;
    auto px = [&](long long x) { return (x - box.xmin + m) * s; };
    auto py = [&](long long y) { return (box.ymax - y + m) * s; };   // flip y

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << (box.width() - 1 + 2 * m) * s << "\" height=\""
        << (box.height() - 1 + 2 * m) * s << "\">\n";

    if (options.gridDots) {
        for (long long x = box.xmin; x <= box.xmax; ++x)
            for (long long y = box.ymin; y <= box.ymax; ++y)
                out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
                    << "\" r=\"1\" fill=\"#ccc\"/>\n";
    }

    for (auto [u, v] : frame.edges) {
        out << "  <line x1=\"" << px(drawing.pos[u].x) << "\" y1=\"" << py(drawing.pos[u].y)
            << "\" x2=\"" << px(drawing.pos[v].x) << "\" y2=\"" << py(drawing.pos[v].y)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int v : frame.vertices) {
        const Point p = drawing.pos[v];
        out << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
            << "\" r=\"5\" fill=\"#1f77b4\"/>\n"
            << "  <text x=\"" << px(p.x) + 7 << "\" y=\"" << py(p.y) - 7
            << "\" font-size=\"12\">" << drawing.story.ids[v]
            << " (t=" << drawing.story.tau[v] << ")</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void renderFrames(const DrawingStory& drawing, const std::string& outDir,
                  const SvgOptions& options) {
    std::filesystem::create_directories(outDir);
    const GridBox box = boundingBox(drawing);
    int index = 0;
    for (const Frame& f : frames(drawing.story)) {
        ++index;
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%04d.svg", index);
        writeFile((std::filesystem::path(outDir) / name).string(),
                  renderFrameSvg(drawing, f, box, options));
    }
}

} // namespace gstory
