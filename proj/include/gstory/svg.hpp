#pragma once

#include <string>

#include "gstory/story.hpp"

namespace gstory {

struct SvgOptions {
    int scale = 40;
    int margin = 1;        // in grid units
    bool gridDots = false;
};

/// One SVG document for a single frame; the y-axis is flipped at render
/// time so the layout file keeps mathematical orientation.
std::string renderFrameSvg(const DrawingStory& drawing, const Frame& frame,
                           GridBox box, const SvgOptions& options);

/// Writes frame_0001.svg ... frame_NNNN.svg into outDir.
void renderFrames(const DrawingStory& drawing, const std::string& outDir,
                  const SvgOptions& options);

} // namespace gstory
