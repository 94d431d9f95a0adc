#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordlab/errors.hpp"

namespace wordlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exactly represented real number of the form
///
///   q0 + q1*sqrt(2) + q2*sqrt(3) + q3*sqrt(5) + q4*t + q5*t^2,
///
/// with rational coefficients, where t is the real root of x^3 = x^2 + x + 1.
/// The basis {1, sqrt2, sqrt3, sqrt5, t, t^2} is linearly independent over Q,
/// so a value is zero exactly when all coefficients vanish; sign evaluation
/// first tries a certified double estimate and falls back to rational interval
/// refinement, which terminates because nonzero values are bounded away from 0.
///
/// The golden ratio is (1 + sqrt5)/2, so catalog angles like 2 - phi stay in
/// the basis. Addition, subtraction and rational scaling are closed; general
/// products are not provided (orbit arithmetic never needs them).
class ExactReal {
 public:
  static constexpr int kBasis = 6;

  ExactReal() = default;
  ExactReal(long long v) { coef_[0] = v; }          // NOLINT(google-explicit-constructor)
  ExactReal(const Rational& v) { coef_[0] = v; }    // NOLINT(google-explicit-constructor)

  static ExactReal sqrt2() { return basis_unit(1); }
  static ExactReal sqrt3() { return basis_unit(2); }
  static ExactReal sqrt5() { return basis_unit(3); }
  /// (1 + sqrt5) / 2
  static ExactReal golden();
  /// The real Tribonacci constant t ~ 1.839287, root of x^3 = x^2 + x + 1.
  static ExactReal tribonacci_constant() { return basis_unit(4); }
  static ExactReal tribonacci_constant_sq() { return basis_unit(5); }

  const Rational& coefficient(int i) const { return coef_.at(static_cast<std::size_t>(i)); }

  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_value() const;

  /// Exact sign: -1, 0, +1.
  int sign() const;
  bool is_zero() const;

  BigInt floor_int() const;
  /// Fractional part in [0, 1).
  ExactReal frac() const;

  ExactReal abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const Rational& r);
  ExactReal& operator/=(const Rational& r);

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const Rational& r) { return a *= r; }
  friend ExactReal operator*(const Rational& r, ExactReal a) { return a *= r; }
  friend ExactReal operator/(ExactReal a, const Rational& r) { return a /= r; }

  friend bool operator==(const ExactReal& a, const ExactReal& b) { return (a - b).is_zero(); }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }
  friend bool operator<(const ExactReal& a, const ExactReal& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const ExactReal& a, const ExactReal& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const ExactReal& a, const ExactReal& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const ExactReal& a, const ExactReal& b) { return (a - b).sign() >= 0; }

 private:
  static ExactReal basis_unit(int i);

  std::array<Rational, kBasis> coef_{};
};

/// Parses expressions such as "1/4", "0.381966", "sqrt2-1", "2-phi",
/// "3/2*sqrt3 + 1/2", "tribonacci". Decimal literals become exact rationals.
ExactReal parse_exact(std::string_view text);

}  // namespace wordlab
