#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "chartex/image.hpp"

namespace chartex {

// Minimal PNG support: writes 8-bit grayscale or 24-bit RGB, reads 8-bit
// gray / RGB / RGBA (and paletted) non-interlaced files. Color inputs are
// converted to grayscale through Rec.601 luminance. Throws Error(io) on
// malformed input or unsupported layouts.
void write_png_gray(const std::string& path, const Image& img);
void write_png_rgb(const std::string& path, int width, int height, std::span<const uint8_t> rgb);
Image read_png_gray(const std::string& path);

}  // namespace chartex
