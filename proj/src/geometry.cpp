#include "chartex/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "chartex/errors.hpp"

namespace chartex {

bool BoundingBox::valid() const {
    return std::isfinite(x_min) && std::isfinite(y_min) && std::isfinite(x_max) &&
           std::isfinite(y_max) && x_min < x_max && y_min < y_max;
}

const char* to_string(ObjectClass cls) {
    switch (cls) {
        case ObjectClass::point: return "point";
        case ObjectClass::tick_mark: return "tick_mark";
        case ObjectClass::tick_value: return "tick_value";
    }
    return "point";
}

std::optional<ObjectClass> object_class_from_string(const std::string& s) {
    if (s == "point") return ObjectClass::point;
    if (s == "tick_mark") return ObjectClass::tick_mark;
    if (s == "tick_value") return ObjectClass::tick_value;
    return std::nullopt;
}

void validate(const BoundingBox& b) {
    if (!b.valid()) throw config_error("invalid bounding box");
}

void validate(const Detection& d) {
    validate(d.bbox);
    if (!(d.confidence >= 0.0 && d.confidence <= 1.0))
        throw config_error("detection confidence outside [0,1]");
    if (d.text.has_value() && d.cls != ObjectClass::tick_value)
        throw config_error("recognized text present on a non tick_value detection");
}

void validate(const Scene& s) {
    if (s.image_width <= 0 || s.image_height <= 0)
        throw config_error("scene has non-positive image size");
    for (const Detection& d : s.detections) {
        validate(d);
        if (d.bbox.x_min < 0.0 || d.bbox.y_min < 0.0 || d.bbox.x_max > s.image_width ||
            d.bbox.y_max > s.image_height)
            throw config_error("detection box outside the image");
    }
}

PixelPoint bbox_center(const BoundingBox& b) {
    return {(b.x_min + b.x_max) / 2.0, (b.y_min + b.y_max) / 2.0};
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    double inter = ix * iy;
    double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

ChartPoint apply_calibration(const AxisCalibration& c, PixelPoint p) {
    return {c.alpha_x * p.x + c.beta_x, c.alpha_y * p.y + c.beta_y};
}

AxisCalibration invert_calibration(const AxisCalibration& c) {
    if (c.alpha_x == 0.0 || c.alpha_y == 0.0 || !std::isfinite(c.alpha_x) ||
        !std::isfinite(c.alpha_y))
        throw degenerate_error("calibration", "zero axis slope cannot be inverted");
    return {1.0 / c.alpha_x, -c.beta_x / c.alpha_x, 1.0 / c.alpha_y, -c.beta_y / c.alpha_y};
}

LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys) {
    size_t n = xs.size();
    if (n < 2 || ys.size() != n)
        throw degenerate_error("least_squares", "need at least two points");
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[i] - my);
    }
    if (sxx == 0.0)
        throw degenerate_error("least_squares", "all x coordinates coincide");
    double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace chartex
