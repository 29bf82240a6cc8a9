#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resonance/counting.hpp"

using namespace resonance;

namespace {

constexpr double kPi = std::numbers::pi;

ExtEvaluator monic_from_zeros(std::vector<Complex> zeros) {
  return [zeros = std::move(zeros)](Complex z) {
    Complex v{1.0, 0.0};
    for (const Complex& zi : zeros) v *= (1.0 - z / zi);
    return ExtendedComplex(v);
  };
}

}  // namespace

TEST_CASE("safe radius avoids prescribed zeros") {
  // polynomial with zeros pinned at 0.95 R on both sides
  const double R = 2.0;
  const auto B = monic_from_zeros({{0.95 * R, 0.0}, {-0.95 * R, 0.0}});
  const double r = safe_radius(B, R, 0.2, {{0.95 * R, 0.0}, {-0.95 * R, 0.0}});
  CHECK(r > (1.0 - 0.2) * R);
  CHECK(r < R);
  CHECK(std::abs(r - 0.95 * R) > 1e-6);

  // entire function with no zeros: any candidate is fine
  const ExtEvaluator entire = [](Complex z) { return ExtendedComplex::exp_of(z); };
  const double r2 = safe_radius(entire, 1.0, 0.5);
  CHECK(r2 > 0.5);
  CHECK(r2 < 1.0);
}

TEST_CASE("jensen integral on normalized linear factors") {
  const Complex z0{0.6, 0.45};
  const auto B = monic_from_zeros({z0});
  CHECK(std::abs(jensen_integral(B, 0.5)) < 1e-6);  // no zeros inside
  CHECK(std::abs(jensen_integral(B, 2.0 * std::abs(z0)) - std::log(2.0)) < 1e-6);
}

TEST_CASE("jensen identity on random polynomials") {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> mod(0.1, 0.9);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Complex> zeros;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) zeros.push_back(std::polar(mod(rng), ang(rng)));
    const double r = 1.0;
    double expected = 0.0;
    bool too_close = false;
    for (const Complex& zi : zeros) {
      if (std::abs(std::abs(zi) - r) < 1e-3) too_close = true;
      if (std::abs(zi) < r) expected += std::log(r / std::abs(zi));
    }
    if (too_close) continue;
    CHECK(std::abs(jensen_integral(monic_from_zeros(zeros), r) - expected) < 1e-6);
  }
}

TEST_CASE("jensen count bound on polynomials") {
  const ExtEvaluator entire = [](Complex z) { return ExtendedComplex::exp_of(0.3 * z); };
  CHECK(jensen_count_bound(entire, 1.0, 2.0) >= -1e-6);

  const double rho = 0.4;
  const auto B = monic_from_zeros({{rho, 0.0}, {-rho, 0.0}});
  const double bound = jensen_count_bound(B, 1.0, 2.0);
  CHECK(bound >= 2.0 - 1e-6);
  CHECK(bound < 2.0 + 1e-4);
}

TEST_CASE("carleman integral closed forms") {
  const ExtEvaluator one = [](Complex) { return ExtendedComplex(1.0); };
  CHECK(std::abs(carleman_integral(one, 0.1, 2.0).total()) < 1e-8);

  const double x0 = 0.8, rl = 2.0;
  const auto B = monic_from_zeros({{x0, 0.0}});
  const double expected = 1.0 / x0 - x0 / (rl * rl);
  CHECK(std::abs(carleman_integral(B, 0.1, rl).total() - expected) < 1e-6);
}

TEST_CASE("carleman identity on right-half-plane polynomial zeros") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> mod(0.4, 1.8);
  std::uniform_real_distribution<double> ang(-1.3, 1.3);
  const double r_rho = 0.2, r_l = 2.0;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Complex> zeros;
    double lhs = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Complex zi = std::polar(mod(rng), ang(rng));
      zeros.push_back(zi);
      lhs += (1.0 / std::abs(zi) - std::abs(zi) / (r_l * r_l)) * std::cos(std::arg(zi));
    }
    const CarlemanParts parts = carleman_integral(monic_from_zeros(zeros), r_rho, r_l);
    CHECK(std::abs(parts.total() - lhs) < 1e-6);
  }
}

TEST_CASE("normalized stark determinant equals one at the origin") {
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 0.05);
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  CHECK(std::abs(B({0.0, 0.0}).value() - Complex(1.0, 0.0)) < 1e-14);
  const NormalizedDeterminant Bt = NormalizedDeterminant::make(spec, true);
  CHECK(std::abs(Bt({0.0, 0.0}).value() - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("jensen monotonicity in the radius for the stark model") {
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 0.1);
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  const auto ev = B.evaluator();
  const double i1 = jensen_integral(ev, 0.8);
  const double i2 = jensen_integral(ev, 1.2);
  const double i3 = jensen_integral(ev, 1.8);
  CHECK(i2 >= i1 - 1e-4);
  CHECK(i3 >= i2 - 1e-4);
}

TEST_CASE("census is deterministic and preconditions are enforced") {
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 0.1);
  const CountReport a = census_below_segment(spec, 0.5, 2.0, 20.0001, 2);
  const CountReport b = census_below_segment(spec, 0.5, 2.0, 20.0001, 1);
  CHECK(a.zero_count == b.zero_count);
  CHECK(a.zero_count > 0);
  CHECK(a.count_times_f == doctest::Approx(a.zero_count * 0.1));
  CHECK_THROWS_AS(census_below_segment(spec, 1.5, 2.0), std::invalid_argument);
}

TEST_CASE("envelope formula positivity") {
  const double lower = (1.0 - 0.5) / (2.0 * kPi * 0.02) *
                       (std::pow(2.0, 1.5) - (5.0 / 3.0) * std::pow(0.5, 1.5));
  CHECK(lower > 0.0);
}

TEST_CASE("safe radius beats the cartan floor for the stark model") {
  const double f = 0.05, delta = 0.2, R = 2.0, c = 1.5;
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, f);
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  const auto ev = B.evaluator();
  const double r = safe_radius(ev, R, delta);
  double min_log = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 1024; ++j)
    min_log = std::min(min_log, ev(std::polar(r, 2.0 * kPi * j / 1024.0)).log_abs());
  const double cartan_floor =
      c * 4.0 * std::pow(2.0 * std::numbers::e * R, 1.5) / (3.0 * f) * std::log(std::exp(-7.0) * delta);
  CHECK(min_log > cartan_floor);
}

TEST_CASE("jensen count bound dominates the certified disk count") {
  const double f = 0.05, r = 1.0, v = 2.0;
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, f);
  const NormalizedDeterminant B = NormalizedDeterminant::make(spec);
  const double bound = jensen_count_bound(B.evaluator(), r, v);
  // certified count of zeros with |z| <= r (all zeros live below the positive axis)
  IsolateOptions opts;
  opts.threads = 2;
  opts.resolution = 0.01;
  const auto zeros = isolate_zeros([spec](Complex z) { return det_stark(z, spec).value; },
                                   Box{{1e-5, -1.0}, {1.0, -1e-8}}, opts);
  long count = 0;
  for (const auto& z : zeros.zeros)
    if (std::abs(z.location) <= r) count += z.multiplicity;
  CHECK(count > 0);
  CHECK(bound >= static_cast<double>(count));
}

TEST_CASE("census of an empty window") {
  // at f = 1.5 the nearest resonance sits at Re z = 1.075, outside [0.3, 0.7]
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 1.5);
  const CountReport report = census_below_segment(spec, 0.3, 0.7, 20.0001, 2);
  CHECK(report.zero_count == 0);
}
