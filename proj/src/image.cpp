#include "chartex/image.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "chartex/errors.hpp"

namespace chartex {

Image crop(const Image& img, int x0, int y0, int w, int h) {
    x0 = std::clamp(x0, 0, img.width);
    y0 = std::clamp(y0, 0, img.height);
    w = std::clamp(w, 0, img.width - x0);
    h = std::clamp(h, 0, img.height - y0);
    Image out(w, h, 255);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) out.at(x, y) = img.at(x0 + x, y0 + y);
    return out;
}

Image rotate_nearest(const Image& img, double angle_deg, uint8_t fill) {
    double a = angle_deg * std::numbers::pi / 180.0;
    double c = std::cos(a), s = std::sin(a);
    double w = img.width, h = img.height;
    double ow = std::abs(w * c) + std::abs(h * s);
    double oh = std::abs(w * s) + std::abs(h * c);
    Image out(std::max(1, static_cast<int>(std::ceil(ow))),
              std::max(1, static_cast<int>(std::ceil(oh))), fill);
    double cx = w / 2.0, cy = h / 2.0;
    double ocx = out.width / 2.0, ocy = out.height / 2.0;
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double dx = (x + 0.5) - ocx;
            double dy = (y + 0.5) - ocy;
            // Inverse map: rotate output coordinates back by -angle.
            double sx = c * dx - s * dy + cx;
            double sy = s * dx + c * dy + cy;
            int ix = static_cast<int>(std::floor(sx));
            int iy = static_cast<int>(std::floor(sy));
            if (img.in_bounds(ix, iy)) out.at(x, y) = img.at(ix, iy);
        }
    }
    return out;
}

Image threshold_ink(const Image& img, uint8_t threshold) {
    Image out(img.width, img.height, 0);
    for (size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = img.pixels[i] < threshold ? 255 : 0;
    return out;
}

uint8_t otsu_threshold(const Image& img) {
    std::array<uint64_t, 256> hist{};
    for (uint8_t p : img.pixels) hist[p]++;
    uint64_t total = img.pixels.size();
    if (total == 0) return 128;
    double sum = 0.0;
    for (int i = 0; i < 256; ++i) sum += static_cast<double>(i) * hist[i];
    double sum_b = 0.0;
    uint64_t w_b = 0;
    double best_var = -1.0;
    int best_t = 128;
    for (int t = 0; t < 256; ++t) {
        w_b += hist[t];
        if (w_b == 0) continue;
        uint64_t w_f = total - w_b;
        if (w_f == 0) break;
        sum_b += static_cast<double>(t) * hist[t];
        double m_b = sum_b / w_b;
        double m_f = (sum - sum_b) / w_f;
        double var = static_cast<double>(w_b) * static_cast<double>(w_f) * (m_b - m_f) * (m_b - m_f);
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }
    return static_cast<uint8_t>(std::clamp(best_t + 1, 1, 255));
}

bool is_bilevel(const Image& img, uint8_t lo, uint8_t hi) {
    for (uint8_t p : img.pixels)
        if (p > lo && p < hi) return false;
    return true;
}

namespace {

// Pixel index range whose centers fall inside [lo, hi].
inline bool center_range(double lo, double hi, int limit, int& i0, int& i1) {
    i0 = static_cast<int>(std::ceil(lo - 0.5));
    i1 = static_cast<int>(std::floor(hi - 0.5));
    i0 = std::max(i0, 0);
    i1 = std::min(i1, limit - 1);
    return i0 <= i1;
}

}  // namespace

void fill_rect(Image& img, double x0, double y0, double x1, double y1, uint8_t v) {
    int ix0, ix1, iy0, iy1;
    if (!center_range(x0, x1, img.width, ix0, ix1)) return;
    if (!center_range(y0, y1, img.height, iy0, iy1)) return;
    for (int y = iy0; y <= iy1; ++y)
        for (int x = ix0; x <= ix1; ++x) img.at(x, y) = v;
}

InkExtent rect_ink_extent(double x0, double y0, double x1, double y1) {
    InkExtent e;
    int ix0 = static_cast<int>(std::ceil(x0 - 0.5));
    int ix1 = static_cast<int>(std::floor(x1 - 0.5));
    int iy0 = static_cast<int>(std::ceil(y0 - 0.5));
    int iy1 = static_cast<int>(std::floor(y1 - 0.5));
    if (ix0 > ix1 || iy0 > iy1) return e;
    e = {ix0, iy0, ix1, iy1, true};
    return e;
}

void fill_disc(Image& img, double cx, double cy, double r, uint8_t v) {
    int x0 = std::max(0, static_cast<int>(std::floor(cx - r - 1)));
    int x1 = std::min(img.width - 1, static_cast<int>(std::ceil(cx + r + 1)));
    int y0 = std::max(0, static_cast<int>(std::floor(cy - r - 1)));
    int y1 = std::min(img.height - 1, static_cast<int>(std::ceil(cy + r + 1)));
    double r2 = r * r;
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            double dx = (x + 0.5) - cx;
            double dy = (y + 0.5) - cy;
            if (dx * dx + dy * dy <= r2) img.at(x, y) = v;
        }
    }
}

void fill_triangle_up(Image& img, double cx, double cy, double r, uint8_t v) {
    // Equilateral triangle with circumradius r, apex pointing up (-y).
    double ax = cx, ay = cy - r;
    double bx = cx - r * std::sqrt(3.0) / 2.0, by = cy + r / 2.0;
    double dx = cx + r * std::sqrt(3.0) / 2.0, dy = cy + r / 2.0;
    auto side = [](double px, double py, double x1, double y1, double x2, double y2) {
        return (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1);
    };
    int x0 = std::max(0, static_cast<int>(std::floor(bx - 1)));
    int x1 = std::min(img.width - 1, static_cast<int>(std::ceil(dx + 1)));
    int y0 = std::max(0, static_cast<int>(std::floor(ay - 1)));
    int y1 = std::min(img.height - 1, static_cast<int>(std::ceil(by + 1)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            double px = x + 0.5, py = y + 0.5;
            double s1 = side(px, py, ax, ay, bx, by);
            double s2 = side(px, py, bx, by, dx, dy);
            double s3 = side(px, py, dx, dy, ax, ay);
            bool neg = s1 < 0 || s2 < 0 || s3 < 0;
            bool pos = s1 > 0 || s2 > 0 || s3 > 0;
            if (!(neg && pos)) img.at(x, y) = v;
        }
    }
}

void blit_mask(Image& dst, const Image& tile, int x, int y, uint8_t v) {
    for (int ty = 0; ty < tile.height; ++ty) {
        int dy = y + ty;
        if (dy < 0 || dy >= dst.height) continue;
        for (int tx = 0; tx < tile.width; ++tx) {
            int dx = x + tx;
            if (dx < 0 || dx >= dst.width) continue;
            if (tile.at(tx, ty) != 0) dst.at(dx, dy) = v;
        }
    }
}

InkExtent ink_extent(const Image& mask) {
    InkExtent e;
    e.x0 = mask.width;
    e.y0 = mask.height;
    e.x1 = -1;
    e.y1 = -1;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (mask.at(x, y) == 0) continue;
            e.any = true;
            e.x0 = std::min(e.x0, x);
            e.y0 = std::min(e.y0, y);
            e.x1 = std::max(e.x1, x);
            e.y1 = std::max(e.y1, y);
        }
    }
    return e;
}

}  // namespace chartex
