#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace resonance {

using Complex = std::complex<double>;

// Complex value represented as mantissa * 2^scale with |mantissa| in
// [0.5, 2) after every operation (mantissa == 0 means exact zero).
// Keeps quantities like exp(4 z^{3/2} / 3f) finite for small f where a
// plain double would overflow long before the determinant is assembled.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(Complex mantissa, std::int64_t scale) : m_(mantissa), e_(scale) { normalize(); }
  ExtendedComplex(double v) : ExtendedComplex(Complex(v, 0.0), 0) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(Complex v) : ExtendedComplex(v, 0) {}               // NOLINT(google-explicit-constructor)

  // exp(w) without intermediate overflow; |Re w| may be in the millions.
  static ExtendedComplex exp_of(Complex w) {
    const double t = w.real() / kLn2;
    double ip = 0.0;
    const double frac = std::modf(t, &ip);
    Complex m = std::exp(Complex(frac * kLn2, 0.0)) *
                Complex(std::cos(w.imag()), std::sin(w.imag()));
    return ExtendedComplex(m, static_cast<std::int64_t>(ip));
  }

  Complex mantissa() const { return m_; }
  std::int64_t scale() const { return e_; }
  bool is_zero() const { return m_ == Complex(0.0, 0.0); }

  // Exact whenever the result is representable; overflows to +-inf otherwise.
  Complex value() const {
    if (is_zero()) return {0.0, 0.0};
    const int e = clamp_exponent(e_);
    return {std::ldexp(m_.real(), e), std::ldexp(m_.imag(), e)};
  }

  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(m_)) + static_cast<double>(e_) * kLn2;
  }

  double arg() const { return std::arg(m_); }

  ExtendedComplex conj() const { return ExtendedComplex(std::conj(m_), e_); }

  friend ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return ExtendedComplex(a.m_ * b.m_, a.e_ + b.e_);
  }
  friend ExtendedComplex operator/(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (b.is_zero()) throw std::domain_error("ExtendedComplex: division by zero");
    if (a.is_zero()) return {};
    return ExtendedComplex(a.m_ / b.m_, a.e_ - b.e_);
  }
  friend ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ExtendedComplex& big = (a.e_ >= b.e_) ? a : b;
    const ExtendedComplex& small = (a.e_ >= b.e_) ? b : a;
    const std::int64_t d = small.e_ - big.e_;
    if (d < -1100) return big;  // below one ulp of the larger addend
    const int shift = static_cast<int>(d);
    Complex s = big.m_ + Complex(std::ldexp(small.m_.real(), shift),
                                 std::ldexp(small.m_.imag(), shift));
    return ExtendedComplex(s, big.e_);
  }
  friend ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
    return a + (-b);
  }
  ExtendedComplex operator-() const { return is_zero() ? ExtendedComplex() : ExtendedComplex(-m_, e_, NoNormalize{}); }

  friend ExtendedComplex operator*(const ExtendedComplex& a, Complex c) {
    return a * ExtendedComplex(c);
  }
  friend ExtendedComplex operator*(Complex c, const ExtendedComplex& a) { return a * c; }
  friend ExtendedComplex operator*(const ExtendedComplex& a, double c) {
    return a * ExtendedComplex(c);
  }
  friend ExtendedComplex operator*(double c, const ExtendedComplex& a) { return a * c; }
  friend ExtendedComplex operator/(const ExtendedComplex& a, Complex c) {
    return a / ExtendedComplex(c);
  }
  friend ExtendedComplex operator/(Complex c, const ExtendedComplex& a) {
    return ExtendedComplex(c) / a;
  }

 private:
  struct NoNormalize {};
  ExtendedComplex(Complex m, std::int64_t e, NoNormalize) : m_(m), e_(e) {}

  static constexpr double kLn2 = 0.69314718055994530941723212145818;

  static int clamp_exponent(std::int64_t e) {
    if (e > 3000) return 3000;
    if (e < -3000) return -3000;
    return static_cast<int>(e);
  }

  void normalize() {
    const double a = std::abs(m_);
    if (a == 0.0) {
      m_ = {0.0, 0.0};
      e_ = 0;
      return;
    }
    if (!std::isfinite(a)) throw std::domain_error("ExtendedComplex: non-finite mantissa");
    const int k = std::ilogb(a);
    if (k != 0) {
      m_ = {std::ldexp(m_.real(), -k), std::ldexp(m_.imag(), -k)};
      e_ += k;
    }
  }

  Complex m_{0.0, 0.0};
  std::int64_t e_ = 0;
};

struct LogPolar {
  double log_abs;  // natural log of |value|
  double phase;    // principal arg, radians
};

// Throws std::domain_error on zero input.
inline LogPolar ext_log(const ExtendedComplex& a) {
  if (a.is_zero()) throw std::domain_error("ext_log of zero");
  return {a.log_abs(), a.arg()};
}

inline double abs_ratio(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_zero()) return 0.0;
  return std::exp(a.log_abs() - b.log_abs());
}

}  // namespace resonance
