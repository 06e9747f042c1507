#include "chartex/synth.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "chartex/errors.hpp"
#include "chartex/rng.hpp"

namespace chartex {

namespace {

// Seed streams; each purpose gets its own derived generator so adding a
// draw in one place never perturbs another.
constexpr uint64_t kStreamSpec = 1;
constexpr uint64_t kStreamPad = 2;
constexpr uint64_t kStreamLayout = 3;
constexpr uint64_t kStreamData = 4;
constexpr uint64_t kStreamNoise = 5;

constexpr int kMaxRealizedTicks = 14;
constexpr int kMinPlotWidth = 160;
constexpr int kMinPlotHeight = 120;

template <typename T>
T weighted_choice(SplitMix64& rng, const std::vector<std::pair<T, double>>& weights) {
    double total = 0.0;
    for (const auto& [v, w] : weights) {
        if (w < 0.0) throw config_error("negative weight in profile");
        total += w;
    }
    if (total <= 0.0) throw config_error("profile weights sum to zero");
    double r = rng.next_double() * total;
    for (const auto& [v, w] : weights) {
        r -= w;
        if (r < 0.0) return v;
    }
    return weights.back().first;
}

int label_gap_px(uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, kStreamPad));
    return rng.uniform_int(4, 9);
}

// Exact decimal rendering of mantissa * 10^exp10; falls back to exponent
// notation when the plain form would be long. The tick value is defined as
// the parse of this string, so string -> number round-trips are exact.
std::string decimal_string(long long mantissa, int exp10) {
    if (mantissa == 0) return "0";
    bool neg = mantissa < 0;
    unsigned long long a = neg ? static_cast<unsigned long long>(-mantissa)
                               : static_cast<unsigned long long>(mantissa);
    while (a % 10 == 0) {
        a /= 10;
        ++exp10;
    }
    std::string digits = std::to_string(a);
    int ndig = static_cast<int>(digits.size());
    std::string body;
    if (exp10 >= 0) {
        if (ndig + exp10 <= 7) body = digits + std::string(exp10, '0');
    } else {
        int point = ndig + exp10;  // digits before the decimal point
        if (point > 0 && ndig + 1 <= 8)
            body = digits.substr(0, point) + "." + digits.substr(point);
        else if (point <= 0 && 2 - point + ndig <= 8)
            body = "0." + std::string(-point, '0') + digits;
    }
    if (body.empty()) {
        int sci_exp = exp10 + ndig - 1;
        body = digits.substr(0, 1);
        if (ndig > 1) body += "." + digits.substr(1);
        body += "e" + std::to_string(sci_exp);
    }
    return neg ? "-" + body : body;
}

double parse_exact(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw config_error("internal: unparseable tick label '" + s + "'");
    return v;
}

struct RotatedDims {
    double w, h;
};

RotatedDims rotated_dims(double w, double h, double angle_deg) {
    double a = std::abs(angle_deg) * std::numbers::pi / 180.0;
    return {w * std::cos(a) + h * std::sin(a), w * std::sin(a) + h * std::cos(a)};
}

bool boxes_overlap(const BoundingBox& a, const BoundingBox& b, double slack) {
    return a.x_min < b.x_max + slack && b.x_min < a.x_max + slack && a.y_min < b.y_max + slack &&
           b.y_min < a.y_max + slack;
}

// Margin needed to fit the widest rotated label on each side, from a tick
// preview; random_spec adds slack on top.
int preview_margin(const ChartSpec& s) {
    NiceTicks tx = nice_ticks(s.x_range.first, s.x_range.second, s.n_x_ticks);
    NiceTicks ty = nice_ticks(s.y_range.first, s.y_range.second, s.n_y_ticks);
    int k = s.label_font_scale;
    double th = text_tile_height(k);
    double max_xw = 0, max_xh = 0, max_yw = 0, max_yh = 0;
    for (const std::string& l : tx.labels) {
        RotatedDims d = rotated_dims(text_tile_width(l.size(), k), th, s.label_rotation_deg);
        max_xw = std::max(max_xw, d.w);
        max_xh = std::max(max_xh, d.h);
    }
    for (const std::string& l : ty.labels) {
        RotatedDims d = rotated_dims(text_tile_width(l.size(), k), th, s.label_rotation_deg);
        max_yw = std::max(max_yw, d.w);
        max_yh = std::max(max_yh, d.h);
    }
    int gap = label_gap_px(s.seed);
    int need_left = s.tick_length + gap + static_cast<int>(std::ceil(max_yw)) + 6;
    int need_bottom = s.tick_length + gap + static_cast<int>(std::ceil(max_xh)) + 6;
    int need_side = 2 * (static_cast<int>(std::ceil(max_xw / 2)) + 8);
    int need_top = 2 * (static_cast<int>(std::ceil(max_yh / 2)) + 6);
    return std::max({need_left, need_bottom, need_side, need_top, 36});
}

PlacedText place_label(const std::string& text, int scale, double rotation_deg) {
    PlacedText p;
    p.text = text;
    Image tile = render_text_tile(text, scale);
    p.tile = rotation_deg != 0.0 ? rotate_nearest(tile, rotation_deg, 0) : std::move(tile);
    return p;
}

void anchor_label(PlacedText& p, const InkExtent& e, int ox, int oy) {
    p.origin_x = ox;
    p.origin_y = oy;
    p.ink_box = {static_cast<double>(ox + e.x0), static_cast<double>(oy + e.y0),
                 static_cast<double>(ox + e.x1 + 1), static_cast<double>(oy + e.y1 + 1)};
}

}  // namespace

const char* to_string(DataDistribution d) {
    switch (d) {
        case DataDistribution::uniform: return "uniform";
        case DataDistribution::linear: return "linear";
        case DataDistribution::quadratic: return "quadratic";
    }
    return "uniform";
}

std::optional<DataDistribution> distribution_from_string(const std::string& s) {
    if (s == "uniform") return DataDistribution::uniform;
    if (s == "linear") return DataDistribution::linear;
    if (s == "quadratic") return DataDistribution::quadratic;
    return std::nullopt;
}

void ChartSpec::validate() const {
    auto fail = [](const std::string& m) { throw config_error("chart spec: " + m); };
    if (n_points < 1) fail("n_points must be >= 1");
    if (n_x_ticks < 2 || n_y_ticks < 2) fail("tick counts must be >= 2");
    if (!(x_range.first < x_range.second) || !std::isfinite(x_range.first) ||
        !std::isfinite(x_range.second))
        fail("x_range must be finite with min < max");
    if (!(y_range.first < y_range.second) || !std::isfinite(y_range.first) ||
        !std::isfinite(y_range.second))
        fail("y_range must be finite with min < max");
    if (!(marker_radius > 0.5)) fail("marker_radius too small");
    if (tick_length < 1) fail("tick_length must be >= 1");
    if (label_font_scale < 1) fail("label_font_scale must be >= 1");
    if (!(std::abs(label_rotation_deg) <= 90.0)) fail("label rotation outside [-90, 90]");
    if (margin_px < 20) fail("margin too small");
    if (image_width < 96 || image_height < 96) fail("image too small");
    if (!(noise_amplitude >= 0.0) || !std::isfinite(noise_amplitude))
        fail("noise amplitude must be a finite non-negative number");
}

void GenProfile::validate() const {
    auto fail = [](const std::string& m) { throw config_error("profile: " + m); };
    auto check_int = [&](std::pair<int, int> r, const char* name) {
        if (r.second < r.first) fail(std::string(name) + " range is empty");
    };
    auto check_real = [&](std::pair<double, double> r, const char* name) {
        if (!(r.second >= r.first) || !std::isfinite(r.first) || !std::isfinite(r.second))
            fail(std::string(name) + " range is empty");
    };
    check_int(n_points, "n_points");
    if (n_points.first < 1) fail("n_points must be >= 1");
    check_int(magnitude, "magnitude");
    check_real(range_center, "range_center");
    check_real(range_width, "range_width");
    if (range_width.first <= 0.0) fail("range_width must be positive");
    check_int(n_ticks, "n_ticks");
    if (n_ticks.first < 2) fail("n_ticks must be >= 2");
    check_real(marker_radius, "marker_radius");
    if (marker_radius.first <= 0.5) fail("marker_radius too small");
    check_int(tick_length, "tick_length");
    if (tick_length.first < 1) fail("tick_length must be >= 1");
    check_int(image_width, "image_width");
    check_int(image_height, "image_height");
    if (image_width.first < 96 || image_height.first < 96) fail("image too small");
    if (marker_weights.empty() || font_scale_weights.empty() || distribution_weights.empty())
        fail("weight tables must be nonempty");
    for (const auto& [scale, w] : font_scale_weights)
        if (scale < 1) fail("font scale must be >= 1");
    if (!(p_rotation_zero >= 0.0 && p_rotation_zero <= 1.0)) fail("p_rotation_zero outside [0,1]");
    check_real(rotation_deg, "rotation_deg");
    if (rotation_deg.first < -90.0 || rotation_deg.second > 90.0)
        fail("rotation range outside [-90, 90]");
    check_real(noise_amplitude, "noise_amplitude");
    if (noise_amplitude.first < 0.0) fail("noise amplitude must be >= 0");
}

NiceTicks nice_ticks(double lo, double hi, int target_count) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw config_error("nice_ticks: need finite lo < hi");
    target_count = std::max(2, target_count);
    double raw = (hi - lo) / static_cast<double>(target_count - 1);
    int p = static_cast<int>(std::floor(std::log10(raw)));
    double f = raw / std::pow(10.0, p);
    long long m = 1;
    int e = p;
    if (f < 1.4142135623730951) {
        m = 1;
    } else if (f < 2.23606797749979) {
        m = 2;
    } else if (f < 3.5355339059327378) {
        m = 25;
        e = p - 1;
    } else if (f < 7.0710678118654755) {
        m = 5;
    } else {
        m = 1;
        e = p + 1;
    }
    double step = static_cast<double>(m) * std::pow(10.0, e);
    long long k0 = static_cast<long long>(std::floor(lo / step + 1e-9));
    long long k1 = static_cast<long long>(std::ceil(hi / step - 1e-9));
    if (k1 <= k0) k1 = k0 + 1;
    NiceTicks out;
    out.step = step;
    for (long long k = k0; k <= k1; ++k) {
        std::string label = decimal_string(k * m, e);
        out.labels.push_back(label);
        out.values.push_back(parse_exact(label));
    }
    return out;
}

ChartSpec random_spec(uint64_t seed, const GenProfile& profile) {
    profile.validate();
    SplitMix64 rng(derive_seed(seed, kStreamSpec));
    ChartSpec s;
    s.seed = seed;
    s.n_points = rng.uniform_int(profile.n_points.first, profile.n_points.second);
    s.distribution = weighted_choice(rng, profile.distribution_weights);
    s.noise_amplitude = rng.uniform(profile.noise_amplitude.first, profile.noise_amplitude.second);
    s.x_magnitude = rng.uniform_int(profile.magnitude.first, profile.magnitude.second);
    s.y_magnitude = rng.uniform_int(profile.magnitude.first, profile.magnitude.second);
    auto sample_range = [&](int mag) {
        double unit = std::pow(10.0, mag);
        double c = rng.uniform(profile.range_center.first, profile.range_center.second) * unit;
        double w = rng.uniform(profile.range_width.first, profile.range_width.second) * unit;
        return std::pair<double, double>{c - w / 2.0, c + w / 2.0};
    };
    s.x_range = sample_range(s.x_magnitude);
    s.y_range = sample_range(s.y_magnitude);
    s.n_x_ticks = rng.uniform_int(profile.n_ticks.first, profile.n_ticks.second);
    s.n_y_ticks = rng.uniform_int(profile.n_ticks.first, profile.n_ticks.second);
    s.marker_style = weighted_choice(rng, profile.marker_weights);
    s.marker_radius = rng.uniform(profile.marker_radius.first, profile.marker_radius.second);
    s.tick_length = rng.uniform_int(profile.tick_length.first, profile.tick_length.second);
    s.label_font_scale = weighted_choice(rng, profile.font_scale_weights);
    s.label_rotation_deg = rng.bernoulli(profile.p_rotation_zero)
                               ? 0.0
                               : rng.uniform(profile.rotation_deg.first, profile.rotation_deg.second);
    s.image_width = rng.uniform_int(profile.image_width.first, profile.image_width.second);
    s.image_height = rng.uniform_int(profile.image_height.first, profile.image_height.second);
    s.margin_px = preview_margin(s) + rng.uniform_int(0, 14);
    return s;
}

GroundTruthChart realize(const ChartSpec& spec) {
    spec.validate();
    NiceTicks tx = nice_ticks(spec.x_range.first, spec.x_range.second, spec.n_x_ticks);
    NiceTicks ty = nice_ticks(spec.y_range.first, spec.y_range.second, spec.n_y_ticks);
    if (static_cast<int>(tx.values.size()) > kMaxRealizedTicks ||
        static_cast<int>(ty.values.size()) > kMaxRealizedTicks)
        throw layout_error("tick grid too dense for the requested range");

    SplitMix64 lrng(derive_seed(spec.seed, kStreamLayout));
    int gap = label_gap_px(spec.seed);
    int ax_th = lrng.uniform_int(1, 2);
    int tick_th = lrng.uniform_int(1, 2);
    bool grid = lrng.bernoulli(0.40);
    uint8_t grid_gray = static_cast<uint8_t>(lrng.uniform_int(185, 225));
    bool minor = lrng.bernoulli(0.25);
    bool want_title = lrng.bernoulli(0.50);
    uint64_t title_seed = lrng.next();

    const int W = spec.image_width, H = spec.image_height;
    const int margin = spec.margin_px;
    const int pad_top = std::max(14, margin / 2);
    const int pad_right = std::max(12, margin / 2);
    ChartLayout layout;
    layout.plot_left = margin;
    layout.plot_right = W - pad_right;
    layout.plot_top = pad_top;
    layout.plot_bottom = H - margin;
    layout.axis_thickness = ax_th;
    layout.tick_thickness = tick_th;
    if (layout.plot_right - layout.plot_left < kMinPlotWidth ||
        layout.plot_bottom - layout.plot_top < kMinPlotHeight)
        throw layout_error("plot area too small after margins");

    const int k = spec.label_font_scale;
    const int mx = static_cast<int>(tx.values.size());
    const int my = static_cast<int>(ty.values.size());

    for (int i = 0; i < mx; ++i) {
        TickLayout t;
        t.value = tx.values[i];
        t.label = tx.labels[i];
        double fx = layout.plot_left +
                    (layout.plot_right - layout.plot_left) * static_cast<double>(i) / (mx - 1);
        int px = static_cast<int>(std::lround(fx - tick_th / 2.0));
        t.mark_box = {static_cast<double>(px), static_cast<double>(layout.plot_bottom + ax_th),
                      static_cast<double>(px + tick_th),
                      static_cast<double>(layout.plot_bottom + ax_th + spec.tick_length)};
        t.label_text = place_label(t.label, k, spec.label_rotation_deg);
        InkExtent e = ink_extent(t.label_text.tile);
        if (!e.any) throw layout_error("empty label tile");
        double tick_cx = px + tick_th / 2.0;
        int ox = static_cast<int>(std::lround(tick_cx - (e.x0 + e.x1 + 1) / 2.0));
        int oy = layout.plot_bottom + ax_th + spec.tick_length + gap - e.y0;
        anchor_label(t.label_text, e, ox, oy);
        layout.x_ticks.push_back(std::move(t));
    }

    for (int j = 0; j < my; ++j) {
        TickLayout t;
        t.value = ty.values[j];
        t.label = ty.labels[j];
        double fy = layout.plot_bottom -
                    (layout.plot_bottom - layout.plot_top) * static_cast<double>(j) / (my - 1);
        int py = static_cast<int>(std::lround(fy - tick_th / 2.0));
        t.mark_box = {static_cast<double>(layout.plot_left - spec.tick_length),
                      static_cast<double>(py), static_cast<double>(layout.plot_left),
                      static_cast<double>(py + tick_th)};
        t.label_text = place_label(t.label, k, spec.label_rotation_deg);
        InkExtent e = ink_extent(t.label_text.tile);
        if (!e.any) throw layout_error("empty label tile");
        double tick_cy = py + tick_th / 2.0;
        int ox = layout.plot_left - spec.tick_length - gap - (e.x1 + 1);
        int oy = static_cast<int>(std::lround(tick_cy - (e.y0 + e.y1 + 1) / 2.0));
        anchor_label(t.label_text, e, ox, oy);
        layout.y_ticks.push_back(std::move(t));
    }

    // Reject layouts whose labels spill outside the image or overlap.
    std::vector<const BoundingBox*> label_boxes;
    for (const TickLayout& t : layout.x_ticks) label_boxes.push_back(&t.label_text.ink_box);
    for (const TickLayout& t : layout.y_ticks) label_boxes.push_back(&t.label_text.ink_box);
    for (const BoundingBox* b : label_boxes) {
        if (b->x_min < 1 || b->y_min < 1 || b->x_max > W - 1 || b->y_max > H - 1)
            throw layout_error("tick label exceeds the margins");
    }
    for (size_t a = 0; a < label_boxes.size(); ++a)
        for (size_t b = a + 1; b < label_boxes.size(); ++b)
            if (boxes_overlap(*label_boxes[a], *label_boxes[b], 3.0))
                throw layout_error("tick labels overlap");
    if (layout.plot_left - spec.tick_length < 1)
        throw layout_error("tick marks exceed the margins");

    if (minor) {
        int minor_len = std::max(1, spec.tick_length / 2);
        for (int i = 0; i + 1 < mx; ++i) {
            double fx = (bbox_center(layout.x_ticks[i].mark_box).x +
                         bbox_center(layout.x_ticks[i + 1].mark_box).x) /
                        2.0;
            int px = static_cast<int>(std::lround(fx - tick_th / 2.0));
            layout.minor_ticks.push_back(
                {static_cast<double>(px), static_cast<double>(layout.plot_bottom + ax_th),
                 static_cast<double>(px + tick_th),
                 static_cast<double>(layout.plot_bottom + ax_th + minor_len)});
        }
        for (int j = 0; j + 1 < my; ++j) {
            double fy = (bbox_center(layout.y_ticks[j].mark_box).y +
                         bbox_center(layout.y_ticks[j + 1].mark_box).y) /
                        2.0;
            int py = static_cast<int>(std::lround(fy - tick_th / 2.0));
            layout.minor_ticks.push_back(
                {static_cast<double>(layout.plot_left - minor_len), static_cast<double>(py),
                 static_cast<double>(layout.plot_left), static_cast<double>(py + tick_th)});
        }
    }
    layout.grid = grid;
    layout.grid_gray = grid_gray;

    if (want_title) {
        SplitMix64 trng(title_seed);
        int title_scale = std::min(k + 1, 4);
        int len = trng.uniform_int(4, 9);
        std::string text;
        for (int i = 0; i < len; ++i) text.push_back(static_cast<char>('0' + trng.uniform_int(0, 9)));
        int th_px = text_tile_height(title_scale);
        if (th_px + 6 <= layout.plot_top) {
            PlacedText title = place_label(text, title_scale, 0.0);
            InkExtent e = ink_extent(title.tile);
            int ox = (W - title.tile.width) / 2;
            int oy = std::max(2, (layout.plot_top - th_px) / 2);
            anchor_label(title, e, ox, oy);
            layout.title = std::move(title);
        }
    }

    // True calibration: least squares over (tick mark box center, value).
    std::vector<double> xs_pix, xs_val, ys_pix, ys_val;
    for (const TickLayout& t : layout.x_ticks) {
        xs_pix.push_back(bbox_center(t.mark_box).x);
        xs_val.push_back(t.value);
    }
    for (const TickLayout& t : layout.y_ticks) {
        ys_pix.push_back(bbox_center(t.mark_box).y);
        ys_val.push_back(t.value);
    }
    LineFit fx = least_squares_line(xs_pix, xs_val);
    LineFit fy = least_squares_line(ys_pix, ys_val);
    AxisCalibration cal{fx.slope, fx.intercept, fy.slope, fy.intercept};
    AxisCalibration inv = invert_calibration(cal);

    // Data domain: inside the tick span, inset so markers stay clear of the
    // axis lines.
    double x0 = tx.values.front(), x1 = tx.values.back();
    double y0 = ty.values.front(), y1 = ty.values.back();
    double span_px_x = layout.plot_right - layout.plot_left;
    double span_px_y = layout.plot_bottom - layout.plot_top;
    double inset_x = std::max(0.04, (spec.marker_radius + 2.0) / span_px_x);
    double inset_y = std::max(0.04, (spec.marker_radius + 2.0) / span_px_y);
    double xlo = x0 + inset_x * (x1 - x0), xhi = x1 - inset_x * (x1 - x0);
    double ylo = y0 + inset_y * (y1 - y0), yhi = y1 - inset_y * (y1 - y0);

    SplitMix64 drng(derive_seed(spec.seed, kStreamData));
    bool increasing = drng.bernoulli(0.5);
    double vertex = drng.uniform(0.2, 0.8);
    GroundTruthChart chart;
    chart.spec = spec;

    for (int i = 0; i < spec.n_points; ++i) {
        double px_chart = drng.uniform(xlo, xhi);
        double t = (px_chart - xlo) / (xhi - xlo);
        double y_chart;
        switch (spec.distribution) {
            case DataDistribution::uniform:
                y_chart = drng.uniform(ylo, yhi);
                break;
            case DataDistribution::linear: {
                double base = increasing ? t : 1.0 - t;
                y_chart = ylo + base * (yhi - ylo);
                break;
            }
            case DataDistribution::quadratic: {
                double q = (t - vertex) * (t - vertex);
                double qmax = std::max(vertex * vertex, (1.0 - vertex) * (1.0 - vertex));
                double base = q / qmax;
                if (!increasing) base = 1.0 - base;
                y_chart = ylo + base * (yhi - ylo);
                break;
            }
        }
        if (spec.distribution != DataDistribution::uniform && spec.noise_amplitude > 0.0) {
            double amp = spec.noise_amplitude * (yhi - ylo);
            double noisy = y_chart;
            for (int attempt = 0; attempt < 8; ++attempt) {
                noisy = y_chart + drng.normal(0.0, amp);
                if (noisy >= ylo && noisy <= yhi) break;
            }
            y_chart = std::clamp(noisy, ylo, yhi);
        }
        chart.true_points.push_back({px_chart, y_chart});
        ChartPoint pix = apply_calibration(inv, {px_chart, y_chart});
        ChartLayout::Marker mk;
        mk.cx = pix.x;
        mk.cy = pix.y;
        mk.box = marker_ink_box(spec.marker_style, mk.cx, mk.cy, spec.marker_radius);
        layout.markers.push_back(mk);
    }

    chart.true_calibration = cal;
    chart.layout = std::move(layout);

    Scene scene;
    scene.image_width = W;
    scene.image_height = H;
    for (const ChartLayout::Marker& mk : chart.layout.markers)
        scene.detections.push_back({mk.box, ObjectClass::point, 1.0, std::nullopt});
    for (const TickLayout& t : chart.layout.x_ticks)
        scene.detections.push_back({t.mark_box, ObjectClass::tick_mark, 1.0, std::nullopt});
    for (const TickLayout& t : chart.layout.y_ticks)
        scene.detections.push_back({t.mark_box, ObjectClass::tick_mark, 1.0, std::nullopt});
    for (const TickLayout& t : chart.layout.x_ticks)
        scene.detections.push_back({t.label_text.ink_box, ObjectClass::tick_value, 1.0, t.label});
    for (const TickLayout& t : chart.layout.y_ticks)
        scene.detections.push_back({t.label_text.ink_box, ObjectClass::tick_value, 1.0, t.label});
    try {
        validate(scene);
    } catch (const Error& e) {
        throw layout_error(std::string("layout produced an invalid scene: ") + e.what());
    }
    chart.annotations = std::move(scene);
    return chart;
}

NoiseConfig NoiseConfig::default_profile() {
    NoiseConfig n;
    n.p_drop_minus = 0.35;
    n.p_digit_swap = 0.03;
    n.p_drop_tick = 0.08;
    n.p_drop_point = 0.04;
    n.spurious_points = 0.4;
    n.bbox_jitter_sigma = 0.5;
    return n;
}

void NoiseConfig::validate() const {
    auto prob = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0))
            throw config_error(std::string("noise: ") + name + " outside [0,1]");
    };
    prob(p_drop_minus, "p_drop_minus");
    prob(p_digit_swap, "p_digit_swap");
    prob(p_drop_tick, "p_drop_tick");
    prob(p_drop_point, "p_drop_point");
    if (!(spurious_points >= 0.0)) throw config_error("noise: spurious_points must be >= 0");
    if (!(bbox_jitter_sigma >= 0.0)) throw config_error("noise: bbox_jitter_sigma must be >= 0");
}

Scene corrupt(const Scene& scene, const NoiseConfig& noise, uint64_t seed) {
    noise.validate();
    validate(scene);
    SplitMix64 rng(derive_seed(seed, kStreamNoise));
    const auto& dets = scene.detections;
    size_t n = dets.size();
    std::vector<bool> dropped(n, false);

    // Tick pair drops: a dropped mark takes its nearest value with it.
    for (size_t i = 0; i < n; ++i) {
        if (dets[i].cls != ObjectClass::tick_mark) continue;
        if (!rng.bernoulli(noise.p_drop_tick)) continue;
        dropped[i] = true;
        PixelPoint mc = bbox_center(dets[i].bbox);
        double best = 0.0;
        size_t best_j = n;
        for (size_t j = 0; j < n; ++j) {
            if (dets[j].cls != ObjectClass::tick_value || dropped[j]) continue;
            PixelPoint vc = bbox_center(dets[j].bbox);
            double d2 = (vc.x - mc.x) * (vc.x - mc.x) + (vc.y - mc.y) * (vc.y - mc.y);
            if (best_j == n || d2 < best) {
                best = d2;
                best_j = j;
            }
        }
        if (best_j < n) dropped[best_j] = true;
    }

    for (size_t i = 0; i < n; ++i)
        if (dets[i].cls == ObjectClass::point && rng.bernoulli(noise.p_drop_point))
            dropped[i] = true;

    std::vector<std::optional<std::string>> new_text(n);
    for (size_t i = 0; i < n; ++i) {
        if (dets[i].cls != ObjectClass::tick_value || dropped[i] || !dets[i].text) continue;
        std::string s = *dets[i].text;
        if (!s.empty() && s[0] == '-' && rng.bernoulli(noise.p_drop_minus)) s.erase(0, 1);
        for (char& c : s) {
            if (c < '0' || c > '9') continue;
            if (!rng.bernoulli(noise.p_digit_swap)) continue;
            int cur = c - '0';
            int r = rng.uniform_int(0, 8);
            c = static_cast<char>('0' + (r >= cur ? r + 1 : r));
        }
        new_text[i] = std::move(s);
    }

    Scene out;
    out.image_width = scene.image_width;
    out.image_height = scene.image_height;
    for (size_t i = 0; i < n; ++i) {
        if (dropped[i]) continue;
        Detection d = dets[i];
        double dx = rng.normal(0.0, noise.bbox_jitter_sigma);
        double dy = rng.normal(0.0, noise.bbox_jitter_sigma);
        d.bbox.x_min = std::clamp(d.bbox.x_min + dx, 0.0, static_cast<double>(out.image_width));
        d.bbox.x_max = std::clamp(d.bbox.x_max + dx, 0.0, static_cast<double>(out.image_width));
        d.bbox.y_min = std::clamp(d.bbox.y_min + dy, 0.0, static_cast<double>(out.image_height));
        d.bbox.y_max = std::clamp(d.bbox.y_max + dy, 0.0, static_cast<double>(out.image_height));
        if (!(d.bbox.x_min < d.bbox.x_max && d.bbox.y_min < d.bbox.y_max)) continue;
        if (new_text[i]) d.text = new_text[i];
        out.detections.push_back(std::move(d));
    }

    int extra = rng.poisson(noise.spurious_points);
    for (int i = 0; i < extra; ++i) {
        double size = rng.uniform(5.0, 16.0);
        double cx = rng.uniform(size / 2 + 1, out.image_width - size / 2 - 1);
        double cy = rng.uniform(size / 2 + 1, out.image_height - size / 2 - 1);
        Detection d;
        d.bbox = {cx - size / 2, cy - size / 2, cx + size / 2, cy + size / 2};
        d.cls = ObjectClass::point;
        d.confidence = rng.uniform(0.3, 1.0);
        out.detections.push_back(d);
    }
    validate(out);
    return out;
}

}  // namespace chartex
