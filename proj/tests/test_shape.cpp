#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resonance/determinants.hpp"
#include "resonance/shape.hpp"

using namespace resonance;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("roots sit in their intervals with tiny residuals") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  for (int n = 0; n <= 50; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    CHECK(root.w.real() > root.interval_lo);
    CHECK(root.w.real() < root.interval_hi);
    CHECK(root.residual < 1e-10);
    // band of admissible imaginary parts, u = Re w
    const double s = 2.0 * spec.eta, t = 2.0 * spec.kappa;
    const double u = root.w.real();
    CHECK(root.w.imag() < -std::log(1.0 + s * u * s * u) / (4.0 * t));
    CHECK(root.w.imag() > -std::log(1.0 + 2.0 * s * u * s * u) / (2.0 * t));
  }
}

TEST_CASE("small eta roots approach the box eigenvalue momenta") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 1e-4);
  for (int n = 0; n <= 5; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    CHECK(std::abs(root.w - Complex((1.0 + n) * kPi / 2.0, 0.0)) < 1e-3);
  }
}

TEST_CASE("free determinant vanishes at every shape root") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  for (int n = 0; n <= 20; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    const ExtendedComplex d = det_free(root.w, spec).value;
    CHECK((d.is_zero() || std::exp(d.log_abs()) < 1e-8));
  }
}

TEST_CASE("perturbative expansion") {
  // eta = 0 would be singular in the model, but the expansion itself reduces
  // to the box momenta when s = 0
  {
    const ModelSpec spec = ModelSpec::free_well(1.0, 1e-300);
    for (int n = 0; n <= 3; ++n) {
      const Complex w = shape_perturbative(n, spec, 2);
      CHECK(std::abs(w - Complex((1.0 + n) * kPi / 2.0, 0.0)) < 1e-12);
    }
  }
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.01);
  for (int n = 0; n <= 10; ++n) {
    const double eta3 = 0.01 * 0.01 * 0.01;
    const ShapeRoot root = shape_root(n, spec);
    const Complex second = shape_perturbative(n, spec, 2);
    // the cubic remainder's constant grows like |w|^3 (not uniform in n)
    const double w2 = std::norm(root.w);
    CHECK(std::abs(root.w - second) < 4.0 * eta3 * std::abs(root.w) * (1.0 + w2));
    CHECK(second.imag() < 0.0);
  }
}

TEST_CASE("parity: even roots kill F+, odd roots kill F-") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const double s = 2.0 * spec.eta, t = 2.0 * spec.kappa;
  for (int n = 0; n <= 12; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    const double plus = std::abs(f_factor(+1, s, t, root.w));
    const double minus = std::abs(f_factor(-1, s, t, root.w));
    if (n % 2 == 0) {
      CHECK(plus < 1e-10);
      CHECK(minus > 0.1);
    } else {
      CHECK(minus < 1e-10);
      CHECK(plus > 0.1);
    }
  }
}

TEST_CASE("left-half-plane mirror roots") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const double s = 2.0 * spec.eta, t = 2.0 * spec.kappa;
  for (int n = 0; n <= 12; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    const int sign = (n % 2 == 0) ? +1 : -1;
    CHECK(std::abs(f_factor(sign, s, t, -std::conj(root.w))) < 1e-9);
  }
}

TEST_CASE("sqrt-z expansion form is the w-form under s = 2 eta, t = 2 kappa") {
  const double kappa = 1.0, eta = 0.01;
  const ModelSpec spec = ModelSpec::free_well(kappa, eta);
  for (int n = 1; n <= 6; ++n) {
    // paper-indexed n (eigenvalue index) maps to interval index n-1
    const Complex w_form = shape_perturbative(n - 1, spec, 2);
    const double w0 = n * kPi / (2.0 * kappa);
    const Complex sqrt_z = w0 * Complex(1.0 - eta / kappa + (eta / kappa) * (eta / kappa),
                                        -(eta * eta / kappa) * w0);
    CHECK(std::abs(w_form - sqrt_z) < 1e-14 * std::abs(sqrt_z));
  }
}
