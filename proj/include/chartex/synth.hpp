#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartex/font.hpp"
#include "chartex/geometry.hpp"
#include "chartex/image.hpp"
#include "chartex/markers.hpp"

namespace chartex {

enum class DataDistribution { uniform, linear, quadratic };

const char* to_string(DataDistribution d);
std::optional<DataDistribution> distribution_from_string(const std::string& s);

// Full recipe for one synthetic chart. Together with the seed this
// determines every byte of the realized chart, its annotations and its
// rendering.
struct ChartSpec {
    uint64_t seed = 0;
    int n_points = 10;
    DataDistribution distribution = DataDistribution::uniform;
    double noise_amplitude = 0.0;  // fraction of the y span, for linear/quadratic
    int x_magnitude = 0;           // order of magnitude exponent
    int y_magnitude = 0;
    std::pair<double, double> x_range{0.0, 1.0};
    std::pair<double, double> y_range{0.0, 1.0};
    int n_x_ticks = 5;
    int n_y_ticks = 5;
    MarkerStyle marker_style = MarkerStyle::disc;
    double marker_radius = 5.0;
    int tick_length = 6;
    int label_font_scale = 2;
    double label_rotation_deg = 0.0;
    int margin_px = 70;
    int image_width = 640;
    int image_height = 480;

    void validate() const;  // throws Error(config)
};

// Sampling ranges for random_spec. Every ChartSpec field is drawn from
// here; empty or inverted ranges are configuration errors.
struct GenProfile {
    std::pair<int, int> n_points{6, 42};
    std::pair<int, int> magnitude{-3, 6};
    std::pair<double, double> range_center{-2.0, 2.0};  // units of 10^magnitude
    std::pair<double, double> range_width{1.0, 6.0};    // units of 10^magnitude
    std::pair<int, int> n_ticks{4, 7};
    std::vector<std::pair<MarkerStyle, double>> marker_weights{
        {MarkerStyle::disc, 0.30},     {MarkerStyle::square, 0.25},
        {MarkerStyle::triangle, 0.23}, {MarkerStyle::cross, 0.20},
        {MarkerStyle::shamrock, 0.02}};
    std::pair<double, double> marker_radius{3.5, 8.0};
    std::pair<int, int> tick_length{4, 9};
    std::vector<std::pair<int, double>> font_scale_weights{{2, 0.45}, {3, 0.40}, {4, 0.15}};
    double p_rotation_zero = 0.85;
    std::pair<double, double> rotation_deg{-90.0, 90.0};
    std::pair<int, int> image_width{480, 800};
    std::pair<int, int> image_height{380, 620};
    std::vector<std::pair<DataDistribution, double>> distribution_weights{
        {DataDistribution::uniform, 0.40},
        {DataDistribution::linear, 0.35},
        {DataDistribution::quadratic, 0.25}};
    std::pair<double, double> noise_amplitude{0.0, 0.12};

    static GenProfile defaults() { return {}; }
    void validate() const;  // throws Error(config)
};

// Evenly spaced ticks on a 1/2/2.5/5 x 10^k grid covering [lo, hi].
// Labels are exact decimal (or exponent-form) strings and each value is
// defined as the parse of its label, so label round-trips are exact.
struct NiceTicks {
    std::vector<double> values;
    std::vector<std::string> labels;
    double step = 0.0;
};

NiceTicks nice_ticks(double lo, double hi, int target_count);

// Placement of one rendered text block (tick label or title).
struct PlacedText {
    std::string text;
    Image tile;  // binary mask, possibly rotated
    int origin_x = 0;
    int origin_y = 0;
    BoundingBox ink_box;  // absolute, exact extents of inked pixels
};

struct TickLayout {
    double value = 0.0;
    std::string label;
    BoundingBox mark_box;
    PlacedText label_text;
};

// Everything the renderer needs, fully resolved to pixels.
struct ChartLayout {
    int plot_left = 0, plot_top = 0, plot_right = 0, plot_bottom = 0;
    int axis_thickness = 1;
    int tick_thickness = 1;
    std::vector<TickLayout> x_ticks;
    std::vector<TickLayout> y_ticks;
    struct Marker {
        double cx = 0.0, cy = 0.0;
        BoundingBox box;
    };
    std::vector<Marker> markers;
    // Distractors: drawn, never annotated.
    std::optional<PlacedText> title;
    bool grid = false;
    uint8_t grid_gray = 200;
    std::vector<BoundingBox> minor_ticks;
};

struct GroundTruthChart {
    ChartSpec spec;
    std::vector<ChartPoint> true_points;
    AxisCalibration true_calibration;
    Scene annotations;
    ChartLayout layout;
};

// Deterministic in (seed, profile). Margins are sized from a tick-label
// preview so that realize() rarely rejects.
ChartSpec random_spec(uint64_t seed, const GenProfile& profile);

// Lays out ticks, labels, and data; computes exact annotation boxes.
// Throws Error(layout) when labels overlap or exceed the margins; callers
// may resample the spec.
GroundTruthChart realize(const ChartSpec& spec);

// Detection/OCR noise channel emulating upstream failure modes: dropped
// minus signs, digit substitutions, dropped tick pairs and points, box
// jitter, and spurious point detections.
struct NoiseConfig {
    double p_drop_minus = 0.0;
    double p_digit_swap = 0.0;
    double p_drop_tick = 0.0;
    double p_drop_point = 0.0;
    double spurious_points = 0.0;  // expected count per scene
    double bbox_jitter_sigma = 0.0;

    static NoiseConfig none() { return {}; }
    // Tuned so that the decoder ablation separates the four fit methods.
    static NoiseConfig default_profile();
    void validate() const;
};

Scene corrupt(const Scene& scene, const NoiseConfig& noise, uint64_t seed);

}  // namespace chartex
