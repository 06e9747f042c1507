#pragma once

#include "chartex/image.hpp"
#include "chartex/synth.hpp"

namespace chartex {

// Paints a realized chart: axis lines, tick marks, tick-value labels,
// markers, plus the non-annotated distractors (title, grid, minor ticks).
// Deterministic; every annotation box in chart.annotations exactly encloses
// the ink it describes.
Image render(const GroundTruthChart& chart);

}  // namespace chartex
