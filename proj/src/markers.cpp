#include "chartex/markers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "chartex/errors.hpp"

namespace chartex {

namespace {

constexpr double kShamrockLobeRadius = 0.42;  // fraction of marker radius
constexpr double kShamrockLobeOffset = 0.72;

struct Lobe {
    double cx, cy, r;
};

std::array<Lobe, 3> shamrock_lobes(double cx, double cy, double r) {
    double lr = kShamrockLobeRadius * r;
    double d = kShamrockLobeOffset * r;
    std::array<Lobe, 3> lobes{};
    for (int i = 0; i < 3; ++i) {
        double a = (-90.0 + 120.0 * i) * std::numbers::pi / 180.0;
        lobes[i] = {cx + d * std::cos(a), cy + d * std::sin(a), lr};
    }
    return lobes;
}

double cross_thickness(double r) { return std::max(1.0, r / 3.0); }

// Generic per-pixel scan used for exact extents and reference areas.
template <typename Pred>
InkExtent scan_extent(double x_lo, double x_hi, double y_lo, double y_hi, Pred covered,
                      long* count = nullptr) {
    InkExtent e;
    e.x0 = e.y0 = 1 << 30;
    e.x1 = e.y1 = -(1 << 30);
    int ix0 = static_cast<int>(std::floor(x_lo)) - 1;
    int ix1 = static_cast<int>(std::ceil(x_hi)) + 1;
    int iy0 = static_cast<int>(std::floor(y_lo)) - 1;
    int iy1 = static_cast<int>(std::ceil(y_hi)) + 1;
    for (int y = iy0; y <= iy1; ++y) {
        for (int x = ix0; x <= ix1; ++x) {
            if (!covered(x + 0.5, y + 0.5)) continue;
            e.any = true;
            if (count) ++*count;
            e.x0 = std::min(e.x0, x);
            e.y0 = std::min(e.y0, y);
            e.x1 = std::max(e.x1, x);
            e.y1 = std::max(e.y1, y);
        }
    }
    return e;
}

bool in_triangle(double px, double py, double cx, double cy, double r) {
    double ax = cx, ay = cy - r;
    double bx = cx - r * std::sqrt(3.0) / 2.0, by = cy + r / 2.0;
    double dx = cx + r * std::sqrt(3.0) / 2.0, dy = cy + r / 2.0;
    auto side = [](double qx, double qy, double x1, double y1, double x2, double y2) {
        return (x2 - x1) * (qy - y1) - (y2 - y1) * (qx - x1);
    };
    double s1 = side(px, py, ax, ay, bx, by);
    double s2 = side(px, py, bx, by, dx, dy);
    double s3 = side(px, py, dx, dy, ax, ay);
    bool neg = s1 < 0 || s2 < 0 || s3 < 0;
    bool pos = s1 > 0 || s2 > 0 || s3 > 0;
    return !(neg && pos);
}

bool in_cross(double px, double py, double cx, double cy, double r) {
    double t = cross_thickness(r) / 2.0;
    bool horiz = px >= cx - r && px <= cx + r && py >= cy - t && py <= cy + t;
    bool vert = py >= cy - r && py <= cy + r && px >= cx - t && px <= cx + t;
    return horiz || vert;
}

template <typename Pred>
void draw_pred(Image& img, double x_lo, double x_hi, double y_lo, double y_hi, Pred covered,
               uint8_t v) {
    int ix0 = std::max(0, static_cast<int>(std::floor(x_lo)) - 1);
    int ix1 = std::min(img.width - 1, static_cast<int>(std::ceil(x_hi)) + 1);
    int iy0 = std::max(0, static_cast<int>(std::floor(y_lo)) - 1);
    int iy1 = std::min(img.height - 1, static_cast<int>(std::ceil(y_hi)) + 1);
    for (int y = iy0; y <= iy1; ++y)
        for (int x = ix0; x <= ix1; ++x)
            if (covered(x + 0.5, y + 0.5)) img.at(x, y) = v;
}

}  // namespace

const char* to_string(MarkerStyle s) {
    switch (s) {
        case MarkerStyle::disc: return "disc";
        case MarkerStyle::square: return "square";
        case MarkerStyle::triangle: return "triangle";
        case MarkerStyle::cross: return "cross";
        case MarkerStyle::shamrock: return "shamrock";
    }
    return "disc";
}

std::optional<MarkerStyle> marker_style_from_string(const std::string& s) {
    if (s == "disc") return MarkerStyle::disc;
    if (s == "square") return MarkerStyle::square;
    if (s == "triangle") return MarkerStyle::triangle;
    if (s == "cross") return MarkerStyle::cross;
    if (s == "shamrock") return MarkerStyle::shamrock;
    return std::nullopt;
}

void draw_marker(Image& img, MarkerStyle style, double cx, double cy, double r, uint8_t v) {
    switch (style) {
        case MarkerStyle::disc:
            fill_disc(img, cx, cy, r, v);
            break;
        case MarkerStyle::square:
            fill_rect(img, cx - r, cy - r, cx + r, cy + r, v);
            break;
        case MarkerStyle::triangle:
            fill_triangle_up(img, cx, cy, r, v);
            break;
        case MarkerStyle::cross:
            draw_pred(
                img, cx - r, cx + r, cy - r, cy + r,
                [&](double px, double py) { return in_cross(px, py, cx, cy, r); }, v);
            break;
        case MarkerStyle::shamrock:
            for (const Lobe& l : shamrock_lobes(cx, cy, r)) fill_disc(img, l.cx, l.cy, l.r, v);
            break;
    }
}

BoundingBox marker_ink_box(MarkerStyle style, double cx, double cy, double r) {
    InkExtent e;
    switch (style) {
        case MarkerStyle::disc:
            e = scan_extent(cx - r, cx + r, cy - r, cy + r, [&](double px, double py) {
                double dx = px - cx, dy = py - cy;
                return dx * dx + dy * dy <= r * r;
            });
            break;
        case MarkerStyle::square:
            e = rect_ink_extent(cx - r, cy - r, cx + r, cy + r);
            break;
        case MarkerStyle::triangle:
            e = scan_extent(cx - r, cx + r, cy - r, cy + r, [&](double px, double py) {
                return in_triangle(px, py, cx, cy, r);
            });
            break;
        case MarkerStyle::cross:
            e = scan_extent(cx - r, cx + r, cy - r, cy + r, [&](double px, double py) {
                return in_cross(px, py, cx, cy, r);
            });
            break;
        case MarkerStyle::shamrock: {
            auto lobes = shamrock_lobes(cx, cy, r);
            e = scan_extent(cx - r - 1, cx + r + 1, cy - r - 1, cy + r + 1,
                            [&](double px, double py) {
                                for (const Lobe& l : lobes) {
                                    double dx = px - l.cx, dy = py - l.cy;
                                    if (dx * dx + dy * dy <= l.r * l.r) return true;
                                }
                                return false;
                            });
            break;
        }
    }
    if (!e.any) throw layout_error("marker covers no pixels");
    return e.box();
}

double marker_reference_area(MarkerStyle style, double r) {
    long count = 0;
    double cx = 100.5, cy = 100.5;  // representative pixel-center placement
    switch (style) {
        case MarkerStyle::disc:
            scan_extent(cx - r, cx + r, cy - r, cy + r,
                        [&](double px, double py) {
                            double dx = px - cx, dy = py - cy;
                            return dx * dx + dy * dy <= r * r;
                        },
                        &count);
            break;
        case MarkerStyle::square: {
            InkExtent e = rect_ink_extent(cx - r, cy - r, cx + r, cy + r);
            count = e.any ? static_cast<long>(e.x1 - e.x0 + 1) * (e.y1 - e.y0 + 1) : 0;
            break;
        }
        case MarkerStyle::triangle:
            scan_extent(cx - r, cx + r, cy - r, cy + r,
                        [&](double px, double py) { return in_triangle(px, py, cx, cy, r); },
                        &count);
            break;
        case MarkerStyle::cross:
            scan_extent(cx - r, cx + r, cy - r, cy + r,
                        [&](double px, double py) { return in_cross(px, py, cx, cy, r); },
                        &count);
            break;
        case MarkerStyle::shamrock: {
            auto lobes = shamrock_lobes(cx, cy, r);
            scan_extent(cx - r - 1, cx + r + 1, cy - r - 1, cy + r + 1,
                        [&](double px, double py) {
                            for (const Lobe& l : lobes) {
                                double dx = px - l.cx, dy = py - l.cy;
                                if (dx * dx + dy * dy <= l.r * l.r) return true;
                            }
                            return false;
                        },
                        &count);
            break;
        }
    }
    return static_cast<double>(count);
}

}  // namespace chartex
