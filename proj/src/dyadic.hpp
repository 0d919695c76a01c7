#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/rational.hpp"
#include "dlab/scalar.hpp"

namespace dlab::detail {

// Exact fixed-point arithmetic for values v / (D * 2^F) held in 128-bit integers. Used when every weight is a
// power of 1/2; any rounding or overflow throws Inexact and the caller falls back to rationals.
struct Inexact {};

using Wide = __int128;

class DyadicFrame {
 public:
  // values: the absolute entries; shifts: the exponents t of the weights 2^-t.
  static std::optional<DyadicFrame> make(const std::vector<Rational>& values, std::size_t max_shift) {
    mpz_class D = 1;
    Rational total = 0;
    for (const auto& v : values) {
      mpz_class d = v.get_den();
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), d.get_mpz_t());
      total += v;
    }
    mpz_class top = mpz_class(total * D);  // floor
    const long bits = static_cast<long>(mpz_sizeinbase(top.get_mpz_t(), 2) + max_shift * 8);
    if (mpz_sizeinbase(D.get_mpz_t(), 2) > 64) return std::nullopt;
    const long F = std::min<long>(62, 118 - bits);
    if (F < 16) return std::nullopt;
    return DyadicFrame(D, static_cast<unsigned>(F));
  }

  unsigned frac_bits() const { return F_; }

  Wide from(const Rational& q) const {
    mpq_class s = q * D_;
    mpz_class num = s.get_num();
    if (s.get_den() != 1) throw Inexact{};
    num <<= F_;
    return to_wide(num);
  }

  Rational to_rational(Wide v) const {
    mpz_class n = from_wide(v);
    mpq_class q(n, D_);
    q.canonicalize();
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), F_);
    return q;
  }

  static Wide shr(Wide v, unsigned t) {
    if (v & ((Wide{1} << t) - 1)) throw Inexact{};
    return v >> t;
  }
  static Wide shl(Wide v, unsigned t) {
    if (v >= (Wide{1} << (125 - t))) throw Inexact{};
    return v << t;
  }
  static Wide add(Wide a, Wide b) {
    Wide s = a + b;
    if (s >= (Wide{1} << 125)) throw Inexact{};
    return s;
  }

 private:
  DyadicFrame(mpz_class D, unsigned F) : D_(std::move(D)), F_(F) {}

  static Wide to_wide(const mpz_class& z) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) throw Inexact{};
    mpz_class hi = z >> 64;
    mpz_class lo = z - (hi << 64);
    return (static_cast<Wide>(hi.get_ui()) << 64) | static_cast<Wide>(lo.get_ui());
  }
  static mpz_class from_wide(Wide v) {
    const auto hi = static_cast<unsigned long>(static_cast<unsigned __int128>(v) >> 64);
    const auto lo = static_cast<unsigned long>(static_cast<unsigned __int128>(v) & ~0UL);
    mpz_class z = hi;
    z <<= 64;
    z += lo;
    return z;
  }

  mpz_class D_;
  unsigned F_;
};

// Exponent t with q = 2^-t, if any.
inline std::optional<unsigned> dyadic_shift(const Rational& q) {
  if (q.get_num() != 1) return std::nullopt;
  mpz_class d = q.get_den();
  const std::size_t t = mpz_scan1(d.get_mpz_t(), 0);
  if (d != (mpz_class(1) << t)) return std::nullopt;
  return static_cast<unsigned>(t);
}

}  // namespace dlab::detail
