#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resonance/branch.hpp"
#include "resonance/phase.hpp"
#include "resonance/quadrature.hpp"

using resonance::Complex;
using resonance::ExtendedComplex;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("branch_sqrt second sheet window") {
  const resonance::BranchedSqrt w = resonance::kSecondSheet;
  CHECK(std::abs(w.sqrt({4.0, 0.0}) - Complex(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(w.sqrt({-1.0, 0.0}) - Complex(0.0, -1.0)) < 1e-15);
  const Complex z = std::polar(2.0, -kPi / 3.0);
  CHECK(std::abs(w.sqrt(z) - std::polar(std::sqrt(2.0), -kPi / 6.0)) < 1e-15);
  CHECK(w.sqrt({0.0, 0.0}) == Complex(0.0, 0.0));
  // output squares back to z on random samples
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex s(u(rng), u(rng));
    if (s == Complex(0, 0)) continue;
    const Complex r = w.sqrt(s);
    CHECK(std::abs(r * r - s) < 1e-12 * std::abs(s));
    const double a2 = 2.0 * std::arg(r);
    CHECK(a2 <= 1e-12);
    CHECK(a2 > -2.0 * kPi - 1e-12);
  }
}

TEST_CASE("branch_sqrt continuity inside the open window") {
  // path just inside the window from arg 0- around to arg -2pi+; adjacent
  // samples are dense enough that any step above 1e-6 would be a branch flip
  const resonance::BranchedSqrt w = resonance::kSecondSheet;
  const long steps = 5'000'000;
  Complex prev = w.sqrt(std::polar(1.0, -1e-4));
  double worst = 0.0;
  for (long i = 1; i <= steps; ++i) {
    const double theta = -1e-4 - (2.0 * kPi - 2e-4) * i / steps;
    const Complex cur = w.sqrt(std::polar(1.0, theta));
    worst = std::max(worst, std::abs(cur - prev));
    prev = cur;
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("adaptive quadrature closed forms") {
  auto sin_result = resonance::integrate([](double x) { return Complex(std::sin(x), 0.0); }, 0.0,
                                         kPi, 1e-12, 1e-12);
  CHECK(sin_result.converged);
  CHECK(std::abs(sin_result.value - Complex(2.0, 0.0)) < 1e-10);

  const double omega = 100.0;
  auto osc = resonance::integrate(
      [omega](double x) { return std::exp(Complex(0.0, omega * x)); }, 0.0, 1.0, 1e-10, 1e-10);
  const Complex expect = (std::exp(Complex(0.0, omega)) - 1.0) / Complex(0.0, omega);
  CHECK(osc.converged);
  CHECK(std::abs(osc.value - expect) < 1e-8);

  // circle mean of log|2 + e^{it}| is log 2 (no zeros inside the unit disk)
  auto jensen = resonance::integrate(
      [](double t) { return Complex(std::log(std::abs(2.0 + std::exp(Complex(0.0, t)))), 0.0); },
      0.0, 2.0 * kPi, 1e-10, 1e-10);
  CHECK(jensen.converged);
  CHECK(std::abs(jensen.value.real() / (2.0 * kPi) - std::log(2.0)) < 1e-8);
}

TEST_CASE("quadrature reports non-convergence honestly") {
  // needle the subdivision budget cannot resolve at this tolerance
  auto needle = [](double x) {
    return Complex(1.0 / (1e-12 + (x - 0.31830988618) * (x - 0.31830988618)), 0.0);
  };
  auto r = resonance::integrate(needle, 0.0, 1.0, 1e-13, 1e-13, 64);
  CHECK_FALSE(r.converged);
  CHECK(r.error_bound > 0.0);
}

TEST_CASE("phase trace winds z^k and exp(z) correctly") {
  for (int k = 1; k <= 4; ++k) {
    auto path = [](double t) { return std::polar(1.0, 2.0 * kPi * t); };
    auto f = [k](Complex z) {
      Complex v(1.0, 0.0);
      for (int i = 0; i < k; ++i) v *= z;
      return ExtendedComplex(v);
    };
    const auto trace = resonance::trace_phase(path, f, 0.0, 1.0);
    CHECK(trace.total_change() == doctest::Approx(2.0 * kPi * k).epsilon(1e-9));
    for (size_t i = 1; i < trace.samples.size(); ++i)
      CHECK(std::abs(trace.samples[i].phase - trace.samples[i - 1].phase) < kPi / 2);
  }
  // entire nonvanishing function: net change 0 around a closed contour
  auto path = [](double t) { return std::polar(3.0, 2.0 * kPi * t); };
  auto f = [](Complex z) { return ExtendedComplex::exp_of(z); };
  const auto trace = resonance::trace_phase(path, f, 0.0, 1.0);
  CHECK(std::abs(trace.total_change()) < 1e-6);
}

TEST_CASE("phase trace detects a zero on the path") {
  auto path = [](double t) { return Complex(2.0 * t - 1.0, 0.0); };
  auto f = [](Complex z) { return ExtendedComplex(z); };
  CHECK_THROWS_AS(resonance::trace_phase(path, f, 0.0, 1.0), resonance::PhaseStepError);
}
