#include <doctest.h>

#include <cmath>
#include <numbers>

#include "resonance/rootfinder.hpp"
#include "resonance/shape.hpp"

using namespace resonance;

namespace {

constexpr double kPi = std::numbers::pi;

ExtEvaluator poly_z2_plus(double c) {
  return [c](Complex z) { return ExtendedComplex(z * z + c); };
}

}  // namespace

TEST_CASE("winding of z^2 + 1 over boxes") {
  const auto f = poly_z2_plus(1.0);
  CHECK(winding(f, Box{{-2.0, -2.0}, {2.0, 2.0}}).winding == 2);
  CHECK(winding(f, Box{{-2.0, 0.5}, {2.0, 2.0}}).winding == 1);
  CHECK(winding(f, Box{{-2.0, -0.25}, {2.0, 0.25}}).winding == 0);
}

TEST_CASE("winding additivity is exact over splits") {
  const ExtEvaluator f = [](Complex z) {
    return ExtendedComplex((z * z + 1.0) * (z - Complex(0.3, 0.4)));
  };
  // split lines chosen away from the zeros +-i and 0.3+0.4i
  const Box parent{{-1.75, -2.05}, {2.25, 1.95}};
  const int total = winding(f, parent).winding;
  CHECK(total == 3);
  int sum = 0;
  const double mx = 0.25, my = -0.05;
  const double xs[3] = {-1.75, mx, 2.25};
  const double ys[3] = {-2.05, my, 1.95};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Box child{{xs[i], ys[j]}, {xs[i + 1], ys[j + 1]}};
      sum += winding(f, child).winding;
    }
  CHECK(sum == total);
}

TEST_CASE("boundary zero triggers dilation then error") {
  // zero exactly on the contour of the undilated box; dilation moves it inside
  const ExtEvaluator f = [](Complex z) { return ExtendedComplex(z - Complex(1.0, 0.0)); };
  const Box grazing{{-1.0, -1.0}, {1.0, 1.0}};
  const WindingResult w = winding(f, grazing);
  CHECK(w.winding == 1);  // the 1% dilation captures the boundary zero
}

TEST_CASE("isolate_zeros on polynomials") {
  {
    const auto result = isolate_zeros(poly_z2_plus(1e-6), Box{{-1.0, -1.0}, {1.0, 1.0}}, 1e-2);
    REQUIRE(result.zeros.size() == 2);
    CHECK(result.complete);
    for (const Resonance& r : result.zeros) {
      CHECK(r.multiplicity == 1);
      CHECK(std::abs(std::abs(r.location.imag()) - 1e-3) < 1e-9);
      CHECK(std::abs(r.location.real()) < 1e-9);
    }
  }
  {
    // double zero at the origin reported once with multiplicity 2
    const auto result = isolate_zeros(poly_z2_plus(0.0), Box{{-1.0, -1.0}, {1.0, 1.0}}, 1e-2);
    REQUIRE(result.zeros.size() == 1);
    CHECK(result.zeros.front().multiplicity == 2);
    CHECK(std::abs(result.zeros.front().location) < 1e-6);
  }
}

TEST_CASE("free-model winding count matches the bracketed solver") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const ExtEvaluator f = [spec](Complex w) { return det_free(w, spec).value; };
  const Box box{{0.1, -2.0}, {20.0, -1e-6}, Plane::w_plane};
  int expected = 0;
  for (int n = 0; n <= 14; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    if (box.contains(root.w)) ++expected;
  }
  CHECK(winding(f, box).winding == expected);
}

TEST_CASE("isolated free-model zeros match the bracketed solver locations") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const ExtEvaluator f = [spec](Complex w) { return det_free(w, spec).value; };
  const Box box{{0.1, -1.0}, {5.0, -1e-6}, Plane::w_plane};
  const auto result = isolate_zeros(f, box, 1e-3);
  int expected = 0;
  for (int n = 0; n <= 5; ++n) {
    const ShapeRoot root = shape_root(n, spec);
    if (!box.contains(root.w)) continue;
    ++expected;
    double best = 1e9;
    for (const Resonance& r : result.zeros) best = std::min(best, std::abs(r.location - root.w));
    CHECK(best < 1e-9);
  }
  CHECK(static_cast<int>(result.zeros.size()) == expected);

  // reported zeros re-certify on a fresh tight box and map back to the z plane
  for (const Resonance& r : result.zeros) {
    const double d = 1e-6 * std::max(1.0, std::abs(r.location));
    const Box tight{r.location - Complex(d, d), r.location + Complex(d, d), Plane::w_plane};
    CHECK(winding(f, tight).winding == r.multiplicity);
    const ExtendedComplex dv = det_free(r.location, spec).value;
    CHECK((dv.is_zero() || std::exp(dv.log_abs()) < 1e-8));
  }
}

TEST_CASE("refinement location is stable against the starting box") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const ExtEvaluator f = [spec](Complex w) { return det_free(w, spec).value; };
  const ShapeRoot root = shape_root(2, spec);
  Complex loc[2];
  int k = 0;
  for (double off : {0.011, -0.013}) {
    const Box box{root.w + Complex(off - 0.05, off - 0.05), root.w + Complex(off + 0.05, off + 0.05),
                  Plane::w_plane};
    const auto result = isolate_zeros(f, box, 1e-3);
    REQUIRE(result.zeros.size() == 1);
    loc[k++] = result.zeros.front().location;
  }
  CHECK(std::abs(loc[0] - loc[1]) < 1e-10 * std::abs(loc[0]));
}

TEST_CASE("thread-count independence of isolation") {
  const ModelSpec spec = ModelSpec::free_well(1.0, 0.5);
  const ExtEvaluator f = [spec](Complex w) { return det_free(w, spec).value; };
  const Box box{{0.1, -1.0}, {8.0, -1e-6}, Plane::w_plane};
  IsolateOptions one;
  one.resolution = 1e-3;
  one.threads = 1;
  IsolateOptions eight = one;
  eight.threads = 8;
  const auto a = isolate_zeros(f, box, one);
  const auto b = isolate_zeros(f, box, eight);
  REQUIRE(a.zeros.size() == b.zeros.size());
  for (size_t i = 0; i < a.zeros.size(); ++i) {
    CHECK(a.zeros[i].location == b.zeros[i].location);
    CHECK(a.zeros[i].multiplicity == b.zeros[i].multiplicity);
  }
}

TEST_CASE("upper half plane is winding-free for the stark model") {
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 0.05);
  const ExtEvaluator f = [spec](Complex z) { return det_stark(z, spec).value; };
  CHECK(winding(f, Box{{0.5, 0.1}, {2.0, 1.1}}).winding == 0);
}

TEST_CASE("verify_zero_free covers only in-region cells") {
  const ModelSpec spec = ModelSpec::stark(1.0, 1.0, 0.01);
  const ExtEvaluator f = [spec](Complex z) { return det_stark(z, spec).value; };
  const Box window{{-2.0, -2.0}, {2.0, 2.0}};
  const auto report = verify_zero_free(f, NamedRegion::r1, spec, window, 10);
  CHECK(report.checked.size() > 0);
  CHECK(report.violations.empty());
  for (const Box& b : report.checked)
    for (int ci = 0; ci < 2; ++ci)
      for (int cj = 0; cj < 2; ++cj) {
        const Complex corner(ci ? b.hi.real() : b.lo.real(), cj ? b.hi.imag() : b.lo.imag());
        CHECK(region_classify(corner, spec) == RegionTag::r1);
      }
}
