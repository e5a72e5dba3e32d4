#pragma once

#include <map>
#include <string>

#include "gstory/geometry.hpp"
#include "gstory/story.hpp"

namespace gstory {

/// On-disk layout: one integer position per vertex id plus the grid box.
struct Layout {
    std::map<VertexId, Point> positions;
    GridBox grid;
};

GraphStory parseStory(const std::string& text);
std::string serializeStory(const GraphStory& story);

Layout parseLayout(const std::string& text);
std::string serializeLayout(const Layout& layout);

/// Layout of a drawing story; the grid box is the tight bounding box.
Layout toLayout(const DrawingStory& drawing);

/// Applies a layout's positions to a story. Throws MissingPosition if a
/// vertex has no entry.
DrawingStory applyLayout(const GraphStory& story, const Layout& layout);

std::string violationToJson(const Violation& violation);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

} // namespace gstory
