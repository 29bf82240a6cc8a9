#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "resonance/extended.hpp"
#include "resonance/model.hpp"

namespace resonance {

// Dirichlet-box eigenpair: E_n = (n pi / 2 kappa)^2 with the normalized sine
// mode on [-kappa, kappa].
struct WellEigenpair {
  int n = 1;
  double kappa = 1.0;
  double energy() const;
  double operator()(double x) const;  // zero outside [-kappa, kappa]
};

// Continuous cutoff with 1_{[a,b]} <= chi <= 1_{[a-delta, b+delta]}; quintic
// smoothstep shoulders.
struct EnergyWindow {
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;
  double chi(double lambda) const;
};

// Perturbed Green's function G^(eta)_z(x, y).  Physical for Im z > 0; for
// Im z <= 0 the free and Dirichlet kernels continue through the cut (second
// sheet), and the Stark kernel is entire off the determinant's zeros.
ExtendedComplex greens_kernel(const ModelSpec& spec, Complex z, double x, double y);

// <phi, G_z phi> for phi supported in [-kappa, kappa]; closed form for the
// free model with a sine mode, nested quadrature otherwise.
Complex greens_matrix_element(const ModelSpec& spec, const WellEigenpair& phi, Complex z);

// (1/pi) Im <phi, G_{lambda + i mu} phi>, Richardson-extrapolated mu -> 0.
double spectral_density(const ModelSpec& spec, const WellEigenpair& phi, double lambda);

struct SurvivalSeries {
  std::vector<double> times;
  std::vector<Complex> exact;
  std::vector<Complex> resonance_sum;
};

// amplitude(t) = integral chi(lambda) e^{-i lambda t} rho(lambda) dlambda.
std::vector<Complex> survival_exact(const ModelSpec& spec, const WellEigenpair& phi,
                                    const EnergyWindow& window, const std::vector<double>& times,
                                    int threads = 1);

// Finite resonance-exponential sum over the eigenvalues inside the window,
// with resonances from the bracketed free-model solver.
std::vector<Complex> survival_resonance_sum(const ModelSpec& free_spec, const WellEigenpair& phi,
                                            const EnergyWindow& window,
                                            const std::vector<double>& times);

struct StabilityReport {
  double sup_difference = 0.0;
  std::vector<double> differences;  // per time
};

// sup_t | free survival - Stark survival | at matched (kappa, eta, phi, chi).
StabilityReport small_field_stability(const ModelSpec& free_spec, double f,
                                      const WellEigenpair& phi, const EnergyWindow& window,
                                      const std::vector<double>& times, int threads = 1);

}  // namespace resonance
