#pragma once

#include <stdexcept>
#include <string>

namespace resonance {

enum class ModelKind { free_well, stark, dirichlet_wall };

// Double delta well of half-width kappa and inverse strength eta, optionally
// perturbed by a constant field f (Stark) or truncated by a Dirichlet wall
// at l > kappa.
struct ModelSpec {
  double kappa = 1.0;
  double eta = 1.0;
  ModelKind kind = ModelKind::free_well;
  double field = 0.0;  // f, Stark only
  double wall = 0.0;   // l, Dirichlet only

  static ModelSpec free_well(double kappa, double eta) {
    require(kappa > 0.0, "kappa must be positive");
    require(eta > 0.0, "eta must be positive");
    return {kappa, eta, ModelKind::free_well, 0.0, 0.0};
  }
  static ModelSpec stark(double kappa, double eta, double f) {
    require(kappa > 0.0, "kappa must be positive");
    require(eta > 0.0, "eta must be positive");
    require(f > 0.0, "field must be positive");
    return {kappa, eta, ModelKind::stark, f, 0.0};
  }
  static ModelSpec dirichlet(double kappa, double eta, double l) {
    require(kappa > 0.0, "kappa must be positive");
    require(eta > 0.0, "eta must be positive");
    require(l > kappa, "wall must lie beyond the well");
    return {kappa, eta, ModelKind::dirichlet_wall, 0.0, l};
  }

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("ModelSpec: ") + msg);
  }
};

}  // namespace resonance
