#include "chartex/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "chartex/errors.hpp"

namespace chartex {

using nlohmann::json;

namespace {

json box_to_json(const BoundingBox& b) {
    return json::array({b.x_min, b.y_min, b.x_max, b.y_max});
}

BoundingBox box_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw io_error("bbox must be a 4-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

template <typename T>
json pair_to_json(const std::pair<T, T>& p) {
    return json::array({p.first, p.second});
}

template <typename T>
std::pair<T, T> pair_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw io_error("range must be a 2-element array");
    return {j[0].get<T>(), j[1].get<T>()};
}

}  // namespace

json scene_to_json(const Scene& scene) {
    json dets = json::array();
    for (const Detection& d : scene.detections) {
        json e;
        e["class"] = to_string(d.cls);
        e["bbox"] = box_to_json(d.bbox);
        e["confidence"] = d.confidence;
        if (d.text) e["text"] = *d.text;
        dets.push_back(std::move(e));
    }
    json j;
    j["image_width"] = scene.image_width;
    j["image_height"] = scene.image_height;
    j["detections"] = std::move(dets);
    return j;
}

Scene scene_from_json(const json& j) {
    Scene s;
    try {
        s.image_width = j.at("image_width").get<int>();
        s.image_height = j.at("image_height").get<int>();
        for (const json& e : j.at("detections")) {
            Detection d;
            auto cls = object_class_from_string(e.at("class").get<std::string>());
            if (!cls) throw io_error("unknown detection class");
            d.cls = *cls;
            d.bbox = box_from_json(e.at("bbox"));
            d.confidence = e.at("confidence").get<double>();
            if (e.contains("text")) d.text = e.at("text").get<std::string>();
            s.detections.push_back(std::move(d));
        }
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed scene json: ") + e.what());
    }
    validate(s);
    return s;
}

json spec_to_json(const ChartSpec& spec) {
    json j;
    j["seed"] = spec.seed;
    j["n_points"] = spec.n_points;
    j["distribution"] = to_string(spec.distribution);
    j["noise_amplitude"] = spec.noise_amplitude;
    j["x_magnitude"] = spec.x_magnitude;
    j["y_magnitude"] = spec.y_magnitude;
    j["x_range"] = pair_to_json(spec.x_range);
    j["y_range"] = pair_to_json(spec.y_range);
    j["n_x_ticks"] = spec.n_x_ticks;
    j["n_y_ticks"] = spec.n_y_ticks;
    j["marker_style"] = to_string(spec.marker_style);
    j["marker_radius"] = spec.marker_radius;
    j["tick_length"] = spec.tick_length;
    j["label_font_scale"] = spec.label_font_scale;
    j["label_rotation_deg"] = spec.label_rotation_deg;
    j["margin_px"] = spec.margin_px;
    j["image_width"] = spec.image_width;
    j["image_height"] = spec.image_height;
    return j;
}

ChartSpec spec_from_json(const json& j) {
    ChartSpec s;
    try {
        s.seed = j.at("seed").get<uint64_t>();
        s.n_points = j.at("n_points").get<int>();
        auto dist = distribution_from_string(j.at("distribution").get<std::string>());
        if (!dist) throw io_error("unknown distribution");
        s.distribution = *dist;
        s.noise_amplitude = j.at("noise_amplitude").get<double>();
        s.x_magnitude = j.at("x_magnitude").get<int>();
        s.y_magnitude = j.at("y_magnitude").get<int>();
        s.x_range = pair_from_json<double>(j.at("x_range"));
        s.y_range = pair_from_json<double>(j.at("y_range"));
        s.n_x_ticks = j.at("n_x_ticks").get<int>();
        s.n_y_ticks = j.at("n_y_ticks").get<int>();
        auto style = marker_style_from_string(j.at("marker_style").get<std::string>());
        if (!style) throw io_error("unknown marker style");
        s.marker_style = *style;
        s.marker_radius = j.at("marker_radius").get<double>();
        s.tick_length = j.at("tick_length").get<int>();
        s.label_font_scale = j.at("label_font_scale").get<int>();
        s.label_rotation_deg = j.at("label_rotation_deg").get<double>();
        s.margin_px = j.at("margin_px").get<int>();
        s.image_width = j.at("image_width").get<int>();
        s.image_height = j.at("image_height").get<int>();
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed spec json: ") + e.what());
    }
    s.validate();
    return s;
}

json calibration_to_json(const AxisCalibration& c) {
    return json{{"alpha_x", c.alpha_x}, {"beta_x", c.beta_x}, {"alpha_y", c.alpha_y},
                {"beta_y", c.beta_y}};
}

AxisCalibration calibration_from_json(const json& j) {
    try {
        return {j.at("alpha_x").get<double>(), j.at("beta_x").get<double>(),
                j.at("alpha_y").get<double>(), j.at("beta_y").get<double>()};
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed calibration json: ") + e.what());
    }
}

json chart_bundle_to_json(const GroundTruthChart& chart) {
    json pts = json::array();
    for (const ChartPoint& p : chart.true_points) pts.push_back(json::array({p.x, p.y}));
    json j;
    j["spec"] = spec_to_json(chart.spec);
    j["true_points"] = std::move(pts);
    j["calibration"] = calibration_to_json(chart.true_calibration);
    return j;
}

ChartBundle chart_bundle_from_json(const json& j) {
    ChartBundle b;
    try {
        b.spec = spec_from_json(j.at("spec"));
        for (const json& p : j.at("true_points"))
            b.true_points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        b.calibration = calibration_from_json(j.at("calibration"));
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed chart bundle: ") + e.what());
    }
    return b;
}

json noise_to_json(const NoiseConfig& n) {
    return json{{"p_drop_minus", n.p_drop_minus},   {"p_digit_swap", n.p_digit_swap},
                {"p_drop_tick", n.p_drop_tick},     {"p_drop_point", n.p_drop_point},
                {"spurious_points", n.spurious_points},
                {"bbox_jitter_sigma", n.bbox_jitter_sigma}};
}

NoiseConfig noise_from_json(const json& j) {
    NoiseConfig n;
    try {
        n.p_drop_minus = j.value("p_drop_minus", 0.0);
        n.p_digit_swap = j.value("p_digit_swap", 0.0);
        n.p_drop_tick = j.value("p_drop_tick", 0.0);
        n.p_drop_point = j.value("p_drop_point", 0.0);
        n.spurious_points = j.value("spurious_points", 0.0);
        n.bbox_jitter_sigma = j.value("bbox_jitter_sigma", 0.0);
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed noise json: ") + e.what());
    }
    n.validate();
    return n;
}

json profile_to_json(const GenProfile& p) {
    json j;
    j["n_points"] = pair_to_json(p.n_points);
    j["magnitude"] = pair_to_json(p.magnitude);
    j["range_center"] = pair_to_json(p.range_center);
    j["range_width"] = pair_to_json(p.range_width);
    j["n_ticks"] = pair_to_json(p.n_ticks);
    json mw = json::object();
    for (const auto& [style, w] : p.marker_weights) mw[to_string(style)] = w;
    j["marker_weights"] = std::move(mw);
    j["marker_radius"] = pair_to_json(p.marker_radius);
    j["tick_length"] = pair_to_json(p.tick_length);
    json fw = json::object();
    for (const auto& [scale, w] : p.font_scale_weights) fw[std::to_string(scale)] = w;
    j["font_scale_weights"] = std::move(fw);
    j["p_rotation_zero"] = p.p_rotation_zero;
    j["rotation_deg"] = pair_to_json(p.rotation_deg);
    j["image_width"] = pair_to_json(p.image_width);
    j["image_height"] = pair_to_json(p.image_height);
    json dw = json::object();
    for (const auto& [dist, w] : p.distribution_weights) dw[to_string(dist)] = w;
    j["distribution_weights"] = std::move(dw);
    j["noise_amplitude"] = pair_to_json(p.noise_amplitude);
    return j;
}

GenProfile profile_from_json(const json& j) {
    GenProfile p;  // missing keys keep their defaults
    try {
        if (j.contains("n_points")) p.n_points = pair_from_json<int>(j["n_points"]);
        if (j.contains("magnitude")) p.magnitude = pair_from_json<int>(j["magnitude"]);
        if (j.contains("range_center")) p.range_center = pair_from_json<double>(j["range_center"]);
        if (j.contains("range_width")) p.range_width = pair_from_json<double>(j["range_width"]);
        if (j.contains("n_ticks")) p.n_ticks = pair_from_json<int>(j["n_ticks"]);
        if (j.contains("marker_weights")) {
            p.marker_weights.clear();
            for (const auto& [key, w] : j["marker_weights"].items()) {
                auto style = marker_style_from_string(key);
                if (!style) throw io_error("unknown marker style '" + key + "' in profile");
                p.marker_weights.emplace_back(*style, w.get<double>());
            }
        }
        if (j.contains("marker_radius"))
            p.marker_radius = pair_from_json<double>(j["marker_radius"]);
        if (j.contains("tick_length")) p.tick_length = pair_from_json<int>(j["tick_length"]);
        if (j.contains("font_scale_weights")) {
            p.font_scale_weights.clear();
            for (const auto& [key, w] : j["font_scale_weights"].items())
                p.font_scale_weights.emplace_back(std::stoi(key), w.get<double>());
        }
        if (j.contains("p_rotation_zero")) p.p_rotation_zero = j["p_rotation_zero"].get<double>();
        if (j.contains("rotation_deg")) p.rotation_deg = pair_from_json<double>(j["rotation_deg"]);
        if (j.contains("image_width")) p.image_width = pair_from_json<int>(j["image_width"]);
        if (j.contains("image_height")) p.image_height = pair_from_json<int>(j["image_height"]);
        if (j.contains("distribution_weights")) {
            p.distribution_weights.clear();
            for (const auto& [key, w] : j["distribution_weights"].items()) {
                auto dist = distribution_from_string(key);
                if (!dist) throw io_error("unknown distribution '" + key + "' in profile");
                p.distribution_weights.emplace_back(*dist, w.get<double>());
            }
        }
        if (j.contains("noise_amplitude"))
            p.noise_amplitude = pair_from_json<double>(j["noise_amplitude"]);
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed profile json: ") + e.what());
    }
    p.validate();
    return p;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw io_error("cannot format double");
    return std::string(buf, ptr);
}

std::string table_to_csv(const DataTable& table) {
    std::string out = "x,y\n";
    for (const ChartPoint& p : table.rows) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw io_error("short write to " + path);
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw io_error("cannot parse " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace chartex
