#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace qshkit {

using Rational = mpq_class;

// Default relative tolerance for rank and membership decisions in float mode.
inline constexpr double kRelTol = 1e-9;

template <class T>
struct Field;

template <>
struct Field<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static bool is_exact_zero(double x) { return x == 0.0; }
  static bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
  static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static std::string to_string(double x);
};

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational abs(const Rational& x) { return Rational(::abs(x)); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_exact_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_zero(const Rational& x, double /*tol*/) { return sgn(x) == 0; }
  static Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <class T>
T ratio(long num, long den) {
  return Field<T>::ratio(num, den);
}

// Exact square root of a non-negative rational, if it is a perfect square.
bool exact_sqrt(const Rational& x, Rational& root);

}  // namespace qshkit
