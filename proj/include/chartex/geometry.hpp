#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chartex {

// Pixel coordinates are continuous reals, origin at the top-left corner,
// y growing downward. Pixel (i, j) is the unit square [i,i+1]x[j,j+1] and
// its center sits at (i+0.5, j+0.5).
struct BoundingBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    bool valid() const;
};

enum class ObjectClass { point, tick_mark, tick_value };

const char* to_string(ObjectClass cls);
std::optional<ObjectClass> object_class_from_string(const std::string& s);

struct Detection {
    BoundingBox bbox;
    ObjectClass cls = ObjectClass::point;
    double confidence = 1.0;
    std::optional<std::string> text;  // only for tick_value
};

struct Scene {
    int image_width = 0;
    int image_height = 0;
    std::vector<Detection> detections;
};

// Throws Error(config) when an invariant is broken.
void validate(const BoundingBox& b);
void validate(const Detection& d);
void validate(const Scene& s);

struct PixelPoint {
    double x = 0.0;
    double y = 0.0;
};

struct ChartPoint {
    double x = 0.0;
    double y = 0.0;
};

// chart = alpha * pixel + beta, independently per axis. alpha_y is
// typically negative because pixel y grows downward.
struct AxisCalibration {
    double alpha_x = 1.0;
    double beta_x = 0.0;
    double alpha_y = 1.0;
    double beta_y = 0.0;
};

struct DataTable {
    std::vector<ChartPoint> rows;
};

PixelPoint bbox_center(const BoundingBox& b);

// Intersection over union; 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b);

ChartPoint apply_calibration(const AxisCalibration& c, PixelPoint p);

// Throws Error(degenerate) when either slope is zero.
AxisCalibration invert_calibration(const AxisCalibration& c);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

// Ordinary least squares through (xs[i], ys[i]), computed on centered sums
// so pixel translations shift only the intercept. Throws Error(degenerate)
// when all xs coincide. Requires xs.size() == ys.size() >= 2.
LineFit least_squares_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace chartex
