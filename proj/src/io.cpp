#include "resonance/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace resonance {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json to_json(const ModelSpec& spec) {
  nlohmann::json j;
  j["kappa"] = spec.kappa;
  j["eta"] = spec.eta;
  switch (spec.kind) {
    case ModelKind::free_well:
      j["model"] = "free";
      break;
    case ModelKind::stark:
      j["model"] = "stark";
      j["f"] = spec.field;
      break;
    case ModelKind::dirichlet_wall:
      j["model"] = "dirichlet";
      j["l"] = spec.wall;
      break;
  }
  return j;
}

ModelSpec model_from_json(const nlohmann::json& j) {
  const std::string model = j.at("model");
  const double kappa = j.at("kappa");
  const double eta = j.at("eta");
  if (model == "free") return ModelSpec::free_well(kappa, eta);
  if (model == "stark") return ModelSpec::stark(kappa, eta, j.at("f"));
  if (model == "dirichlet") return ModelSpec::dirichlet(kappa, eta, j.at("l"));
  throw std::invalid_argument("unknown model: " + model);
}

nlohmann::json to_json(const Resonance& r, Plane plane) {
  nlohmann::json j;
  j["re"] = r.location.real();
  j["im"] = r.location.imag();
  j["multiplicity"] = r.multiplicity;
  j["residual_log"] = r.residual_log;
  j["local_scale_log"] = r.local_scale_log;
  j["box"] = {r.enclosing_box.lo.real(), r.enclosing_box.lo.imag(), r.enclosing_box.hi.real(),
              r.enclosing_box.hi.imag()};
  j["refine_iterations"] = r.refine_iterations;
  j["plane"] = plane == Plane::w_plane ? "w" : "z";
  return j;
}

Resonance resonance_from_json(const nlohmann::json& j, Plane* plane) {
  Resonance r;
  r.location = {j.at("re").get<double>(), j.at("im").get<double>()};
  r.multiplicity = j.at("multiplicity");
  r.residual_log = j.at("residual_log");
  r.local_scale_log = j.at("local_scale_log");
  const auto& box = j.at("box");
  r.enclosing_box.lo = {box.at(0).get<double>(), box.at(1).get<double>()};
  r.enclosing_box.hi = {box.at(2).get<double>(), box.at(3).get<double>()};
  r.refine_iterations = j.at("refine_iterations");
  const Plane p = j.at("plane") == "w" ? Plane::w_plane : Plane::z_plane;
  r.enclosing_box.plane = p;
  if (plane) *plane = p;
  return r;
}

namespace {

void set_optional(nlohmann::json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}
std::optional<double> get_optional(const nlohmann::json& j, const char* key) {
  if (j.contains(key)) return j.at(key).get<double>();
  return std::nullopt;
}

}  // namespace

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json j;
  j["region"] = r.region;
  j["zero_count"] = r.zero_count;
  j["count_times_f"] = r.count_times_f;
  j["f"] = r.field;
  set_optional(j, "jensen_value", r.jensen_value);
  set_optional(j, "carleman_value", r.carleman_value);
  set_optional(j, "predicted_jensen", r.predicted_jensen);
  set_optional(j, "predicted_carleman", r.predicted_carleman);
  set_optional(j, "envelope_lower", r.envelope_lower);
  set_optional(j, "envelope_upper", r.envelope_upper);
  set_optional(j, "safe_radius", r.safe_radius);
  return j;
}

CountReport count_report_from_json(const nlohmann::json& j) {
  CountReport r;
  r.region = j.at("region");
  r.zero_count = j.at("zero_count");
  r.count_times_f = j.at("count_times_f");
  r.field = j.at("f");
  r.jensen_value = get_optional(j, "jensen_value");
  r.carleman_value = get_optional(j, "carleman_value");
  r.predicted_jensen = get_optional(j, "predicted_jensen");
  r.predicted_carleman = get_optional(j, "predicted_carleman");
  r.envelope_lower = get_optional(j, "envelope_lower");
  r.envelope_upper = get_optional(j, "envelope_upper");
  r.safe_radius = get_optional(j, "safe_radius");
  return r;
}

std::string atlas_csv(const std::vector<AtlasSample>& samples) {
  std::string out = "re,im,log_abs,arg\n";
  for (const AtlasSample& s : samples) {
    out += format_double(s.re);
    out += ',';
    out += format_double(s.im);
    out += ',';
    out += format_double(s.log_abs);
    out += ',';
    out += format_double(s.arg);
    out += '\n';
  }
  return out;
}

namespace {

// cyclic palette: phase vortices at zeros stand out
void phase_color(double arg, int& r, int& g, int& b) {
  const double t = (arg + std::numbers::pi) / (2.0 * std::numbers::pi);
  auto channel = [t](double shift) {
    const double v = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * (t + shift));
    return static_cast<int>(255.0 * v);
  };
  r = channel(0.0);
  g = channel(1.0 / 3.0);
  b = channel(2.0 / 3.0);
}

}  // namespace

std::string atlas_svg(const std::vector<AtlasSample>& samples, int nx, int ny) {
  const int cell = 4;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(nx * cell) + "\" height=\"" + std::to_string(ny * cell) +
                    "\">\n";
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const AtlasSample& s = samples[static_cast<size_t>(j) * nx + i];
      int r, g, b;
      phase_color(s.arg, r, g, b);
      char rect[160];
      std::snprintf(rect, sizeof(rect),
                    "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"rgb(%d,%d,%d)\"/>\n",
                    i * cell, (ny - 1 - j) * cell, cell, cell, r, g, b);
      out += rect;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace resonance
