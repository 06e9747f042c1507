#pragma once

#include <cstdint>
#include <vector>

#include "chartex/geometry.hpp"

namespace chartex {

// Row-major 8-bit grayscale raster. Rendering is dark ink on a light
// background; RGB inputs are folded through luminance at load time.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    Image() = default;
    Image(int w, int h, uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    bool empty() const { return width <= 0 || height <= 0; }
};

Image crop(const Image& img, int x0, int y0, int w, int h);

// Rotates counterclockwise (in standard math orientation; visually clockwise
// with y-down rasters) about the image center using nearest-neighbor
// sampling. The output canvas is grown to fit; uncovered pixels get `fill`.
Image rotate_nearest(const Image& img, double angle_deg, uint8_t fill);

// Mask with 255 where img < threshold (ink), 0 elsewhere.
Image threshold_ink(const Image& img, uint8_t threshold);

uint8_t otsu_threshold(const Image& img);

// True when the image only contains values <= lo or >= hi (saturated
// black-on-white output of the built-in renderer).
bool is_bilevel(const Image& img, uint8_t lo = 64, uint8_t hi = 192);

// Drawing primitives. A pixel is inked when its center lies inside the
// shape, which keeps rendered extents and annotation boxes in exact
// agreement.
void fill_rect(Image& img, double x0, double y0, double x1, double y1, uint8_t v);
void fill_disc(Image& img, double cx, double cy, double r, uint8_t v);
void fill_triangle_up(Image& img, double cx, double cy, double r, uint8_t v);

// Exact bounding box of the pixels fill_rect would ink; empty optional when
// nothing is covered.
struct InkExtent {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // pixel index range, inclusive
    bool any = false;
    BoundingBox box() const {
        return {static_cast<double>(x0), static_cast<double>(y0), static_cast<double>(x1 + 1),
                static_cast<double>(y1 + 1)};
    }
};

InkExtent rect_ink_extent(double x0, double y0, double x1, double y1);

// Blit: every nonzero tile pixel paints `v` into dst at (x + tx, y + ty).
void blit_mask(Image& dst, const Image& tile, int x, int y, uint8_t v);

InkExtent ink_extent(const Image& mask);

}  // namespace chartex
