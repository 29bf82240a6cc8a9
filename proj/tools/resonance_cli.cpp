// Command-line front end: determinant evaluation and atlases, certified
// resonance search, counting studies, dynamics comparisons and zero-free
// region verification.  Outputs are deterministic JSON/CSV (17 significant
// digits), SVG for phase heatmaps.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "resonance/counting.hpp"
#include "resonance/determinants.hpp"
#include "resonance/greens.hpp"
#include "resonance/io.hpp"
#include "resonance/rootfinder.hpp"
#include "resonance/shape.hpp"

using namespace resonance;
using nlohmann::json;

namespace {

struct ModelOptions {
  std::string model = "stark";
  double kappa = 1.0;
  double eta = 1.0;
  double f = 0.05;
  double l = 20.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model, "free | stark | dirichlet")
        ->check(CLI::IsMember({"free", "stark", "dirichlet"}));
    cmd->add_option("--kappa", kappa, "half-width of the well");
    cmd->add_option("--eta", eta, "inverse delta strength");
    cmd->add_option("--f", f, "field strength (stark)");
    cmd->add_option("--l", l, "wall position (dirichlet)");
  }
  ModelSpec spec() const {
    if (model == "free") return ModelSpec::free_well(kappa, eta);
    if (model == "stark") return ModelSpec::stark(kappa, eta, f);
    return ModelSpec::dirichlet(kappa, eta, l);
  }
};

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

Box parse_box(const std::string& text, Plane plane) {
  const auto v = parse_csv_doubles(text);
  if (v.size() != 4) throw CLI::ValidationError("box", "expected re0,re1,im0,im1");
  if (!(v[0] < v[1] && v[2] < v[3]))
    throw CLI::ValidationError("box", "expected re0 < re1 and im0 < im1");
  return Box{{v[0], v[2]}, {v[1], v[3]}, plane};
}

ExtEvaluator evaluator_for(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::free_well:
      return [spec](Complex w) { return det_free(w, spec).value; };
    case ModelKind::stark:
      return [spec](Complex z) { return det_stark(z, spec).value; };
    case ModelKind::dirichlet_wall:
      return [spec](Complex w) { return det_dirichlet(w, spec).value; };
  }
  throw std::logic_error("unreachable");
}

Plane plane_for(const ModelSpec& spec) {
  return spec.kind == ModelKind::stark ? Plane::z_plane : Plane::w_plane;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream stream(out_path, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot open output file: " + out_path);
  stream << payload;
}

json json_header(const ModelSpec& spec) {
  json j;
  j["schema"] = kSchema;
  j["model"] = to_json(spec);
  return j;
}

int run_eval(const ModelOptions& model, const std::string& point, const std::string& out) {
  const auto v = parse_csv_doubles(point);
  if (v.size() != 2) throw CLI::ValidationError("point", "expected re,im");
  const ModelSpec spec = model.spec();
  const Complex z{v[0], v[1]};
  const ExtendedComplex value = evaluator_for(spec)(z);
  json j = json_header(spec);
  j["point"] = {v[0], v[1]};
  j["plane"] = plane_for(spec) == Plane::w_plane ? "w" : "z";
  if (spec.kind == ModelKind::stark) {
    switch (region_classify(z, spec)) {
      case RegionTag::r1: j["region"] = "r1"; break;
      case RegionTag::r2: j["region"] = "r2"; break;
      case RegionTag::r2_tilde: j["region"] = "r2-tilde"; break;
      case RegionTag::near_ray_zero: j["region"] = "near-ray-0"; break;
      case RegionTag::near_ray_southwest: j["region"] = "near-ray-southwest"; break;
      case RegionTag::origin_disk: j["region"] = "origin-disk"; break;
    }
  }
  if (value.is_zero()) {
    j["log_abs"] = nullptr;
  } else {
    j["log_abs"] = value.log_abs();
    j["arg"] = value.arg();
  }
  const Complex plain = value.value();
  if (std::isfinite(plain.real()) && std::isfinite(plain.imag()))
    j["value"] = {plain.real(), plain.imag()};
  emit(j.dump(2), out);
  return 0;
}

int run_atlas(const ModelOptions& model, const std::string& box_text, const std::string& grid,
              const std::string& format, const std::string& out) {
  const ModelSpec spec = model.spec();
  const Box box = parse_box(box_text, plane_for(spec));
  int nx = 0, ny = 0;
  if (std::sscanf(grid.c_str(), "%dx%d", &nx, &ny) != 2 || nx <= 0 || ny <= 0)
    throw CLI::ValidationError("grid", "expected NxM");
  const auto f = evaluator_for(spec);
  std::vector<AtlasSample> samples;
  samples.reserve(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double re = box.lo.real() + box.width() * (i + 0.5) / nx;
      const double im = box.lo.imag() + box.height() * (j + 0.5) / ny;
      AtlasSample s{re, im, 0.0, 0.0};
      try {
        const ExtendedComplex v = f({re, im});
        s.log_abs = std::clamp(v.is_zero() ? -50.0 : v.log_abs(), -50.0, 50.0);
        s.arg = v.arg();
      } catch (const std::exception&) {
        s.log_abs = 50.0;  // pole marker
        s.arg = 0.0;
      }
      samples.push_back(s);
    }
  }
  emit(format == "svg" ? atlas_svg(samples, nx, ny) : atlas_csv(samples), out);
  return 0;
}

int run_zeros(const ModelOptions& model, const std::string& box_text, double resolution,
              int threads, const std::string& out) {
  const ModelSpec spec = model.spec();
  const Box box = parse_box(box_text, plane_for(spec));
  IsolateOptions opts;
  opts.resolution = resolution;
  opts.threads = threads;
  const IsolateResult result = isolate_zeros(evaluator_for(spec), box, opts);
  json j = json_header(spec);
  j["box"] = {box.lo.real(), box.hi.real(), box.lo.imag(), box.hi.imag()};
  j["complete"] = result.complete;
  j["zeros"] = json::array();
  for (const Resonance& r : result.zeros) j["zeros"].push_back(to_json(r, box.plane));
  if (box.plane == Plane::w_plane) {
    // also report the spectral-plane positions z = w^2
    for (size_t i = 0; i < result.zeros.size(); ++i) {
      const Complex z = result.zeros[i].location * result.zeros[i].location;
      j["zeros"][i]["z_re"] = z.real();
      j["zeros"][i]["z_im"] = z.imag();
    }
  }
  emit(j.dump(2), out);
  return 0;
}

int run_count(const ModelOptions& model, const std::string& box_text, const std::string& out) {
  const ModelSpec spec = model.spec();
  const Box box = parse_box(box_text, plane_for(spec));
  const WindingResult w = winding(evaluator_for(spec), box);
  json j = json_header(spec);
  j["box"] = {box.lo.real(), box.hi.real(), box.lo.imag(), box.hi.imag()};
  j["winding"] = w.winding;
  j["min_log_abs"] = w.min_log_abs;
  j["samples"] = w.samples_used;
  emit(j.dump(2), out);
  return 0;
}

int run_jensen(const ModelOptions& model, double r, double v, double delta,
               const std::string& out) {
  const ModelSpec spec = model.spec();
  if (spec.kind != ModelKind::stark) throw CLI::ValidationError("model", "jensen needs stark");
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  const auto ev = B.evaluator();
  const double safe = safe_radius(ev, r, delta);
  const double value = jensen_integral(ev, safe);
  json j = json_header(spec);
  j["requested_radius"] = r;
  j["safe_radius"] = safe;
  j["jensen_value"] = value;
  j["predicted"] = 8.0 / (9.0 * std::numbers::pi) * std::pow(safe, 1.5) / spec.field;
  if (v > 1.0) j["count_bound"] = jensen_count_bound(ev, safe, v);
  emit(j.dump(2), out);
  return 0;
}

int run_carleman(const ModelOptions& model, double r_rho, double r_l, double delta,
                 const std::string& out) {
  const ModelSpec spec = model.spec();
  if (spec.kind != ModelKind::stark) throw CLI::ValidationError("model", "carleman needs stark");
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  const auto ev = B.evaluator();
  const double safe = safe_radius(ev, r_l, delta);
  const CarlemanParts parts = carleman_integral(ev, r_rho, safe);
  json j = json_header(spec);
  j["r_rho"] = r_rho;
  j["safe_radius"] = safe;
  j["axis_integral"] = parts.axis;
  j["arc_integral"] = parts.arc;
  j["carleman_value"] = parts.total();
  j["predicted"] =
      8.0 * (3.0 + std::sqrt(2.0)) / (15.0 * std::numbers::pi) * std::sqrt(safe) / spec.field;
  emit(j.dump(2), out);
  return 0;
}

int run_census(const ModelOptions& model, double a, double b, const std::string& fields,
               double M, int threads, const std::string& out) {
  json j;
  j["schema"] = kSchema;
  j["reports"] = json::array();
  for (double f : parse_csv_doubles(fields)) {
    const ModelSpec spec = ModelSpec::stark(model.kappa, model.eta, f);
    j["reports"].push_back(to_json(census_below_segment(spec, a, b, M, threads)));
  }
  emit(j.dump(2), out);
  return 0;
}

int run_dynamics(const ModelOptions& model, int mode_index, const std::string& window_text,
                 double t_max, int steps, int threads, const std::string& out) {
  const auto wv = parse_csv_doubles(window_text);
  if (wv.size() != 3) throw CLI::ValidationError("window", "expected a,b,delta");
  const EnergyWindow window{wv[0], wv[1], wv[2]};
  const WellEigenpair phi{mode_index, model.kappa};
  std::vector<double> times;
  for (int i = 0; i <= steps; ++i) times.push_back(t_max * i / std::max(1, steps));

  const ModelSpec free_spec = ModelSpec::free_well(model.kappa, model.eta);
  const auto exact = survival_exact(model.model == "stark" ? model.spec() : free_spec, phi,
                                    window, times, threads);
  const auto sum = survival_resonance_sum(free_spec, phi, window, times);

  std::string csv = "t,exact_re,exact_im,resonance_sum_re,resonance_sum_im,abs_difference\n";
  for (size_t i = 0; i < times.size(); ++i) {
    csv += format_double(times[i]) + "," + format_double(exact[i].real()) + "," +
           format_double(exact[i].imag()) + "," + format_double(sum[i].real()) + "," +
           format_double(sum[i].imag()) + "," + format_double(std::abs(exact[i] - sum[i])) + "\n";
  }
  emit(csv, out);
  return 0;
}

int run_verify(const ModelOptions& model, const std::string& region, const std::string& box_text,
               int grid, int threads, const std::string& out) {
  const ModelSpec spec = model.spec();
  const Box window = parse_box(box_text, plane_for(spec));
  NamedRegion named = NamedRegion::custom;
  if (region == "r1") named = NamedRegion::r1;
  else if (region == "r2") named = NamedRegion::r2;
  else if (region != "custom") throw CLI::ValidationError("region", "r1 | r2 | custom");
  if (named != NamedRegion::custom && spec.kind != ModelKind::stark)
    throw CLI::ValidationError("region", "named regions need the stark model");
  const ZeroFreeReport report =
      verify_zero_free(evaluator_for(spec), named, spec, window, grid, threads);
  json j = json_header(spec);
  j["region"] = region;
  j["boxes_checked"] = report.checked.size();
  j["samples"] = report.samples;
  j["violations"] = json::array();
  for (const Box& b : report.violations)
    j["violations"].push_back({b.lo.real(), b.hi.real(), b.lo.imag(), b.hi.imag()});
  j["zero_free"] = report.violations.empty();
  emit(j.dump(2), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resonance determinants, certified zeros, counting and dynamics"};
  app.require_subcommand(1);

  ModelOptions model;
  std::string out;
  std::string point = "1,0";
  std::string box_text = "0.25,2.5,-0.8,-1e-4";
  std::string grid = "200x100";
  std::string format = "csv";
  std::string region = "r1";
  std::string window_text = "2,3,0.3";
  std::string fields = "0.1,0.05,0.025";
  double resolution = 1e-3;
  double radius = 1.0, v_factor = 2.0, delta = 0.05;
  double r_rho = 0.05, r_l = 1.05;
  double a = 0.5, b = 2.0, big_m = 20.0001;
  double t_max = 10.0;
  int steps = 50, mode_index = 1, grid_cells = 12, threads = 1;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a determinant at one point");
  model.attach(eval_cmd);
  eval_cmd->add_option("--point", point, "re,im (w for free/dirichlet, z for stark)");
  eval_cmd->add_option("--out", out);

  auto* atlas_cmd = app.add_subcommand("atlas", "sample a determinant over a grid");
  model.attach(atlas_cmd);
  atlas_cmd->add_option("--box,--wbox", box_text, "re0,re1,im0,im1");
  atlas_cmd->add_option("--grid", grid, "NxM");
  atlas_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
  atlas_cmd->add_option("--out", out);

  auto* zeros_cmd = app.add_subcommand("zeros", "isolate and certify zeros in a box");
  model.attach(zeros_cmd);
  zeros_cmd->add_option("--box", box_text, "re0,re1,im0,im1");
  zeros_cmd->add_option("--resolution", resolution);
  zeros_cmd->add_option("--threads", threads);
  zeros_cmd->add_option("--out", out);

  auto* count_cmd = app.add_subcommand("count", "winding number of a box");
  model.attach(count_cmd);
  count_cmd->add_option("--box", box_text, "re0,re1,im0,im1");
  count_cmd->add_option("--out", out);

  auto* jensen_cmd = app.add_subcommand("jensen", "circle average of log|B| for the stark model");
  model.attach(jensen_cmd);
  jensen_cmd->add_option("--r", radius, "target radius (a nearby safe radius is used)");
  jensen_cmd->add_option("--v", v_factor, "outer/inner ratio for the count bound");
  jensen_cmd->add_option("--delta", delta, "safe-radius search width");
  jensen_cmd->add_option("--out", out);

  auto* carleman_cmd = app.add_subcommand("carleman", "half-plane boundary integrals");
  model.attach(carleman_cmd);
  carleman_cmd->add_option("--rrho", r_rho, "inner radius");
  carleman_cmd->add_option("--rl", r_l, "outer radius (a nearby safe radius is used)");
  carleman_cmd->add_option("--delta", delta);
  carleman_cmd->add_option("--out", out);

  auto* census_cmd = app.add_subcommand("census", "zero census below a real segment");
  census_cmd->add_option("--kappa", model.kappa, "half-width of the well");
  census_cmd->add_option("--eta", model.eta, "inverse delta strength");
  census_cmd->add_option("--a", a);
  census_cmd->add_option("--b", b);
  census_cmd->add_option("--f", fields, "comma-separated field strengths");
  census_cmd->add_option("--M", big_m);
  census_cmd->add_option("--threads", threads);
  census_cmd->add_option("--out", out);

  auto* dynamics_cmd = app.add_subcommand("dynamics", "survival amplitude vs resonance sum");
  model.attach(dynamics_cmd);
  dynamics_cmd->add_option("--n", mode_index, "eigenmode index");
  dynamics_cmd->add_option("--window", window_text, "a,b,delta");
  dynamics_cmd->add_option("--tmax", t_max);
  dynamics_cmd->add_option("--steps", steps);
  dynamics_cmd->add_option("--threads", threads);
  dynamics_cmd->add_option("--out", out);

  auto* verify_cmd = app.add_subcommand("verify", "winding-zero verification over a region");
  model.attach(verify_cmd);
  verify_cmd->add_option("--region", region, "r1 | r2 | custom");
  verify_cmd->add_option("--box", box_text, "window re0,re1,im0,im1");
  verify_cmd->add_option("--grid", grid_cells, "cells per axis");
  verify_cmd->add_option("--threads", threads);
  verify_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(model, point, out);
    if (app.got_subcommand(atlas_cmd)) return run_atlas(model, box_text, grid, format, out);
    if (app.got_subcommand(zeros_cmd))
      return run_zeros(model, box_text, resolution, threads, out);
    if (app.got_subcommand(count_cmd)) return run_count(model, box_text, out);
    if (app.got_subcommand(jensen_cmd)) return run_jensen(model, radius, v_factor, delta, out);
    if (app.got_subcommand(carleman_cmd))
      return run_carleman(model, r_rho, r_l, delta, out);
    if (app.got_subcommand(census_cmd))
      return run_census(model, a, b, fields, big_m, threads, out);
    if (app.got_subcommand(dynamics_cmd))
      return run_dynamics(model, mode_index, window_text, t_max, steps, threads, out);
    if (app.got_subcommand(verify_cmd))
      return run_verify(model, region, box_text, grid_cells, threads, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
