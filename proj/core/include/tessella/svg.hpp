#pragma once

#include <string>
#include <vector>

#include "tessella/coloring.hpp"
#include "tessella/patch.hpp"

namespace tessella {

enum class Frame { Disk, PlaneBox };

struct RenderOptions {
    std::vector<std::string> palette;  // generated when empty
    double stroke_width = 0.004;
    Frame frame = Frame::Disk;         // hyperbolic renders always use the disk
    std::vector<Word> overlay_words;   // mirror axes to draw
    std::string label;
};

// m evenly spaced hues.
std::vector<std::string> default_palette(int m);

// Patch coordinates are projected and scaled so the complete part of the
// patch fills [-1, 1]^2 (the unit disk itself for hyperbolic patches).
std::string render(const Patch& patch, const ColoringScheme* scheme, const RenderOptions& opt = {});

// Fixed lines of the given reflections, as an SVG group.
std::string overlay_mirrors(const Patch& patch, const std::vector<Word>& words, double stroke_width = 0.004);

}  // namespace tessella
