#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chartex {

// Broad failure categories, used to pick CLI exit codes and to tag the
// pipeline stage that failed inside decode diagnostics.
enum class ErrorKind {
    config,      // bad profile / flags / schema
    layout,      // generated chart cannot be laid out, caller may resample
    detection,   // image does not look like a rendered chart
    decode,      // not enough calibration data to decode a scene
    degenerate,  // mathematically degenerate input (zero slope, equal pixels)
    evaluation,  // evaluation criterion undefined for this input
    io,          // filesystem / serialization failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string stage, const std::string& message)
        : std::runtime_error(stage.empty() ? message : stage + ": " + message),
          kind_(kind),
          stage_(std::move(stage)) {}

    ErrorKind kind() const { return kind_; }
    // Pipeline stage name ("pairing", "axis_split", "fit_x", ...); may be empty.
    const std::string& stage() const { return stage_; }

private:
    ErrorKind kind_;
    std::string stage_;
};

inline Error config_error(const std::string& msg) { return {ErrorKind::config, "", msg}; }
inline Error layout_error(const std::string& msg) { return {ErrorKind::layout, "layout", msg}; }
inline Error detection_error(const std::string& msg) { return {ErrorKind::detection, "detection", msg}; }
inline Error decode_error(const std::string& stage, const std::string& msg) { return {ErrorKind::decode, stage, msg}; }
inline Error degenerate_error(const std::string& stage, const std::string& msg) { return {ErrorKind::degenerate, stage, msg}; }
inline Error evaluation_error(const std::string& msg) { return {ErrorKind::evaluation, "evaluation", msg}; }
inline Error io_error(const std::string& msg) { return {ErrorKind::io, "io", msg}; }

}  // namespace chartex
