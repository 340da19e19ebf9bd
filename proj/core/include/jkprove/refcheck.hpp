#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// prover: trial division, strong probable-prime testing, the affine
// chord-and-tangent group law on E_a over F_p, and the CM endomorphism alpha.
// Nothing here shares code with the Montgomery path.

#include <cstdint>
#include <optional>
#include <vector>

#include "jkprove/types.hpp"

namespace jkprove::refcheck {

/// Smallest prime p <= bound dividing n (p may equal n). Requires n >= 2.
std::optional<std::uint64_t> trial_division(const BigInt& n, std::uint64_t bound);

/// Strong probable-prime test to the twelve prime bases 2..37, which is a
/// proof of primality below 3.3e24 (hence for all n < 2^64).
/// Throws std::invalid_argument for even n or n < 3.
bool probable_prime(const BigInt& n);

struct AffinePoint {
  bool infinity = true;
  BigInt x;
  BigInt y;

  static AffinePoint identity() { return AffinePoint{}; }
  static AffinePoint at(BigInt x, BigInt y) { return AffinePoint{false, std::move(x), std::move(y)}; }

  friend bool operator==(const AffinePoint& lhs, const AffinePoint& rhs) {
    if (lhs.infinity || rhs.infinity) return lhs.infinity == rhs.infinity;
    return lhs.x == rhs.x && lhs.y == rhs.y;
  }
};

/// y^2 = x^3 - 35 a^2 x - 98 a^3 over F_p.
class TwistCurve {
 public:
  /// Throws std::invalid_argument if p divides disc(E_a) = -2^12 7^3 a^6.
  TwistCurve(int a, BigInt p);

  int a() const { return a_; }
  const BigInt& p() const { return p_; }
  const BigInt& a4() const { return a4_; }
  const BigInt& a6() const { return a6_; }

  bool contains(const AffinePoint& point) const;
  AffinePoint negate(const AffinePoint& point) const;
  AffinePoint add(const AffinePoint& lhs, const AffinePoint& rhs) const;
  AffinePoint dbl(const AffinePoint& point) const;
  AffinePoint scalar_mult(const BigInt& e, const AffinePoint& point) const;

  /// Points with x in [0, p); only sensible for small p.
  std::vector<AffinePoint> enumerate() const;

  /// Roots e of x^3 + a4 x + a6, i.e. the x-coordinates of the 2-torsion (small p).
  std::vector<BigInt> two_torsion_x() const;

 private:
  BigInt mod(const BigInt& value) const;
  BigInt inv(const BigInt& value) const;

  int a_;
  BigInt p_;
  BigInt a4_;
  BigInt a6_;
};

/// e * point on E_a mod p by double-and-add (e >= 0).
AffinePoint weier_scalar_mult(const BigInt& e, const AffinePoint& point, int a, const BigInt& p);

/// The endomorphism alpha = (1 + sqrt(-7)) / 2 on E_a mod p, as an explicit
/// rational map with sqrt(-7) := d. Pass -d for conj(alpha).
/// Points where the x-denominator vanishes form the kernel and map to the identity.
/// Throws std::logic_error if only the y-denominator vanishes.
AffinePoint alpha_endomorphism(const AffinePoint& point, int a, const BigInt& d, const BigInt& p);

}  // namespace jkprove::refcheck
