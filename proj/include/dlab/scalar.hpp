#pragma once

#include <compare>
#include <string>
#include <variant>

#include "dlab/rational.hpp"

namespace dlab {

enum class Mode { exact, floating };

inline constexpr double kFloatTolerance = 1e-9;

// A norm value: an exact rational, or a double once any float enters the computation.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}
  Scalar(double d) : v_(d) {}
  Scalar(int n) : v_(Rational(n)) {}

  static Scalar in_mode(const Rational& q, Mode mode);

  bool exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  double to_double() const;
  // "p/q" for exact values, shortest round-trip decimal for doubles.
  std::string str() const;
  int sign() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> v_;
};

Scalar abs(const Scalar& s);
Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);

// a <= b, with kFloatTolerance slack when either side is a double.
bool certainly_le(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kFloatTolerance);

}  // namespace dlab
