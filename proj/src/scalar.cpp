#include "dlab/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "dlab/errors.hpp"

namespace dlab {

Scalar Scalar::in_mode(const Rational& q, Mode mode) {
  if (mode == Mode::exact) return Scalar(q);
  return Scalar(q.get_d());
}

const Rational& Scalar::rational() const {
  if (!exact()) throw DomainError("float value has no exact rational form");
  return std::get<Rational>(v_);
}

double Scalar::to_double() const {
  if (exact()) return std::get<Rational>(v_).get_d();
  return std::get<double>(v_);
}

std::string Scalar::str() const {
  if (exact()) return std::get<Rational>(v_).get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
  return buf;
}

int Scalar::sign() const {
  if (exact()) return sgn(std::get<Rational>(v_));
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

#define DLAB_SCALAR_OP(op)                                                      \
  Scalar& Scalar::operator op##=(const Scalar& o) {                             \
    if (exact() && o.exact()) {                                                 \
      std::get<Rational>(v_) op## = std::get<Rational>(o.v_);                   \
    } else {                                                                    \
      v_ = to_double() op o.to_double();                                        \
    }                                                                           \
    return *this;                                                               \
  }

DLAB_SCALAR_OP(+)
DLAB_SCALAR_OP(-)
DLAB_SCALAR_OP(*)
#undef DLAB_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  if (exact() && o.exact()) {
    std::get<Rational>(v_) /= std::get<Rational>(o.v_);
  } else {
    v_ = to_double() / o.to_double();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-std::get<Rational>(v_)));
  return Scalar(-std::get<double>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) {
    int c = cmp(std::get<Rational>(a.v_), std::get<Rational>(b.v_));
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar max(const Scalar& a, const Scalar& b) { return b > a ? b : a; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

bool certainly_le(const Scalar& a, const Scalar& b, double tol) {
  if (a.exact() && b.exact()) return a <= b;
  return a.to_double() <= b.to_double() + tol;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.exact() && b.exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= tol;
}

}  // namespace dlab
