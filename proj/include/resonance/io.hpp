#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "resonance/counting.hpp"
#include "resonance/model.hpp"
#include "resonance/rootfinder.hpp"

namespace resonance {

inline constexpr const char* kSchema = "resonance-atlas/1";

nlohmann::json to_json(const ModelSpec& spec);
ModelSpec model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Resonance& r, Plane plane);
Resonance resonance_from_json(const nlohmann::json& j, Plane* plane = nullptr);

nlohmann::json to_json(const CountReport& r);
CountReport count_report_from_json(const nlohmann::json& j);

// Grid sample of a determinant for CSV/SVG atlases; log|D| clipped to
// [-50, 50], principal arg.
struct AtlasSample {
  double re, im, log_abs, arg;
};

std::string atlas_csv(const std::vector<AtlasSample>& samples);
std::string atlas_svg(const std::vector<AtlasSample>& samples, int nx, int ny);

std::string format_double(double v);  // 17 significant digits

}  // namespace resonance
