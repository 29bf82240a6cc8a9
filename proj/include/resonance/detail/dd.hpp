#pragma once

#include <cmath>

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Only what the Airy Maclaurin series needs: the series at |zeta| ~ 8 cancels
// ~13 decimal digits, which plain doubles cannot absorb.

namespace resonance::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
  dd() = default;
  dd(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
  dd(double h, double l) : hi(h), lo(l) {}
  double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, double b) {
  const double q1 = a.hi / b;
  dd r = a - two_prod(q1, b);
  const double q2 = (r.hi + r.lo) / b;
  return quick_two_sum(q1, q2);
}

struct ddcomplex {
  dd re, im;
  ddcomplex() = default;
  ddcomplex(dd r, dd i) : re(r), im(i) {}
  ddcomplex(double r, double i) : re(r), im(i) {}
};

inline ddcomplex operator+(ddcomplex a, ddcomplex b) { return {a.re + b.re, a.im + b.im}; }
inline ddcomplex operator-(ddcomplex a, ddcomplex b) { return {a.re - b.re, a.im - b.im}; }
inline ddcomplex operator*(ddcomplex a, ddcomplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddcomplex operator*(ddcomplex a, dd s) { return {a.re * s, a.im * s}; }
inline ddcomplex operator/(ddcomplex a, double s) { return {a.re / s, a.im / s}; }

inline double abs2(ddcomplex a) {
  const double r = a.re.to_double(), i = a.im.to_double();
  return r * r + i * i;
}

}  // namespace resonance::detail
