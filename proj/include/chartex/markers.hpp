#pragma once

#include <optional>
#include <string>

#include "chartex/image.hpp"

namespace chartex {

// Marker glyphs for data points. `shamrock` is a composite of three small
// discs; classical blob detection sees it as separate components, which is
// a deliberate hard case.
enum class MarkerStyle { disc, square, triangle, cross, shamrock };

const char* to_string(MarkerStyle s);
std::optional<MarkerStyle> marker_style_from_string(const std::string& s);

void draw_marker(Image& img, MarkerStyle style, double cx, double cy, double r, uint8_t v);

// Exact bounding box of the pixels draw_marker inks (computed with the same
// coverage predicate, independent of any target image).
BoundingBox marker_ink_box(MarkerStyle style, double cx, double cy, double r);

// Inked pixel count for a marker drawn at a pixel-center position; used to
// derive detector size bands from a generation profile.
double marker_reference_area(MarkerStyle style, double r);

}  // namespace chartex
