#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace arinf {

using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// x^e for integer e (negative allowed when x != 0).
inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0) {
    if (e > 0) return Rat(0);
    throw std::domain_error("rat_pow: zero base with negative exponent");
  }
  Rat base = e > 0 ? x : Rat(1) / x;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Parses "3", "-5/2", "0" into an exact rational.
inline std::optional<Rat> parse_rat(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rat(boost::multiprecision::cpp_int(s));
    }
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Gaussian rational a + b*sqrt(-1): the exact scalar field for all structural
// operators (duality involutions introduce powers of sqrt(-1)).
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline std::string to_string(const Rat& x) { return x.str(); }

inline std::string to_string(const GaussRat& g) {
  if (g.im == 0) return to_string(g.re);
  std::string im = to_string(g.im) + "*i";
  if (g.re == 0) return im;
  return g.im > 0 ? to_string(g.re) + "+" + im : to_string(g.re) + im;
}

// sqrt(-1)^t for any integer t.
inline GaussRat i_pow(long t) {
  switch (((t % 4) + 4) % 4) {
    case 0: return GaussRat(Rat(1), Rat(0));
    case 1: return GaussRat(Rat(0), Rat(1));
    case 2: return GaussRat(Rat(-1), Rat(0));
    default: return GaussRat(Rat(0), Rat(-1));
  }
}

}  // namespace arinf
