#pragma once

#include <string>

#include <json.hpp>

#include "chartex/geometry.hpp"
#include "chartex/synth.hpp"

namespace chartex {

// Scene wire format (field names are part of the interface):
// {"image_width": int, "image_height": int,
//  "detections": [{"class": ..., "bbox": [x0,y0,x1,y1],
//                  "confidence": f, "text": s?}]}
nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const ChartSpec& spec);
ChartSpec spec_from_json(const nlohmann::json& j);

nlohmann::json calibration_to_json(const AxisCalibration& c);
AxisCalibration calibration_from_json(const nlohmann::json& j);

// Ground-truth bundle: {"spec":..., "true_points": [[x,y],...],
//                       "calibration": {...}}
nlohmann::json chart_bundle_to_json(const GroundTruthChart& chart);
struct ChartBundle {
    ChartSpec spec;
    std::vector<ChartPoint> true_points;
    AxisCalibration calibration;
};
ChartBundle chart_bundle_from_json(const nlohmann::json& j);

nlohmann::json noise_to_json(const NoiseConfig& noise);
NoiseConfig noise_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const GenProfile& profile);
GenProfile profile_from_json(const nlohmann::json& j);

// DataTable CSV: header "x,y", shortest round-trip decimal per value.
std::string table_to_csv(const DataTable& table);

std::string format_double(double v);

// File helpers; throw Error(io).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace chartex
