#include "jkprove/refcheck.hpp"

#include <array>
#include <stdexcept>

namespace jkprove::refcheck {

std::optional<std::uint64_t> trial_division(const BigInt& n, std::uint64_t bound) {
  if (n < 2) throw std::invalid_argument("trial_division: n must be >= 2");
  if (bound >= 2 && mpz_even_p(n.get_mpz_t())) return 2;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    if (composite[p]) continue;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return p;
    for (std::uint64_t j = p * p; j <= bound; j += 2 * p) composite[j] = true;
  }
  return std::nullopt;
}

bool probable_prime(const BigInt& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("probable_prime: n must be odd and >= 3");
  constexpr std::array<unsigned long, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long b : kBases)
    if (n == b) return true;

  BigInt odd = n - 1;
  const mp_bitcnt_t s = mpz_scan1(odd.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), s);
  const BigInt minus_one = n - 1;

  for (unsigned long b : kBases) {
    BigInt x;
    const BigInt base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == minus_one) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

TwistCurve::TwistCurve(int a, BigInt p) : a_(a), p_(std::move(p)) {
  if (p_ < 3) throw std::invalid_argument("TwistCurve: p must be an odd prime");
  const BigInt disc_factor = BigInt(14) * a;  // primes of disc(E_a) are those of 14a
  if (mpz_divisible_p(disc_factor.get_mpz_t(), p_.get_mpz_t()) || mpz_even_p(p_.get_mpz_t()))
    throw std::invalid_argument("TwistCurve: p divides the discriminant");
  const BigInt aa(a);
  a4_ = mod(-35 * aa * aa);
  a6_ = mod(-98 * aa * aa * aa);
}

BigInt TwistCurve::mod(const BigInt& value) const {
  BigInt out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), p_.get_mpz_t());
  return out;
}

BigInt TwistCurve::inv(const BigInt& value) const {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), value.get_mpz_t(), p_.get_mpz_t()) == 0)
    throw std::domain_error("TwistCurve: non-invertible element (p not prime?)");
  return out;
}

bool TwistCurve::contains(const AffinePoint& point) const {
  if (point.infinity) return true;
  const BigInt& x = point.x;
  return mod(point.y * point.y - (x * x * x + a4_ * x + a6_)) == 0;
}

AffinePoint TwistCurve::negate(const AffinePoint& point) const {
  if (point.infinity) return point;
  return AffinePoint::at(point.x, mod(-point.y));
}

AffinePoint TwistCurve::add(const AffinePoint& lhs, const AffinePoint& rhs) const {
  if (lhs.infinity) return rhs;
  if (rhs.infinity) return lhs;
  if (lhs.x == rhs.x) {
    if (mod(lhs.y + rhs.y) == 0) return AffinePoint::identity();
    return dbl(lhs);
  }
  const BigInt slope = mod((rhs.y - lhs.y) * inv(mod(rhs.x - lhs.x)));
  BigInt x3 = mod(slope * slope - lhs.x - rhs.x);
  BigInt y3 = mod(slope * (lhs.x - x3) - lhs.y);
  return AffinePoint::at(std::move(x3), std::move(y3));
}

AffinePoint TwistCurve::dbl(const AffinePoint& point) const {
  if (point.infinity || point.y == 0) return AffinePoint::identity();
  const BigInt slope = mod((3 * point.x * point.x + a4_) * inv(mod(2 * point.y)));
  BigInt x3 = mod(slope * slope - 2 * point.x);
  BigInt y3 = mod(slope * (point.x - x3) - point.y);
  return AffinePoint::at(std::move(x3), std::move(y3));
}

AffinePoint TwistCurve::scalar_mult(const BigInt& e, const AffinePoint& point) const {
  if (e < 0) throw std::invalid_argument("scalar_mult: negative scalar");
  AffinePoint result = AffinePoint::identity();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = dbl(result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = add(result, point);
  }
  return result;
}

std::vector<AffinePoint> TwistCurve::enumerate() const {
  std::vector<AffinePoint> points;
  points.push_back(AffinePoint::identity());
  const unsigned long p = p_.get_ui();
  // y^2 = rhs: tabulate square roots once
  std::vector<std::vector<unsigned long>> roots(p);
  for (unsigned long y = 0; y < p; ++y) roots[(y * y) % p].push_back(y);
  for (unsigned long x = 0; x < p; ++x) {
    const BigInt bx(x);
    const unsigned long rhs = mod(bx * bx * bx + a4_ * bx + a6_).get_ui();
    for (unsigned long y : roots[rhs]) points.push_back(AffinePoint::at(bx, BigInt(y)));
  }
  return points;
}

std::vector<BigInt> TwistCurve::two_torsion_x() const {
  std::vector<BigInt> xs;
  const unsigned long p = p_.get_ui();
  for (unsigned long x = 0; x < p; ++x) {
    const BigInt bx(x);
    if (mod(bx * bx * bx + a4_ * bx + a6_) == 0) xs.push_back(bx);
  }
  return xs;
}

AffinePoint weier_scalar_mult(const BigInt& e, const AffinePoint& point, int a, const BigInt& p) {
  return TwistCurve(a, p).scalar_mult(e, point);
}

AffinePoint alpha_endomorphism(const AffinePoint& point, int a, const BigInt& d, const BigInt& p) {
  if (point.infinity) return point;
  TwistCurve curve(a, p);  // validates p
  const auto mod = [&p](const BigInt& v) {
    BigInt out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return out;
  };
  const BigInt aa(a);
  const BigInt& x = point.x;
  const BigInt& y = point.y;

  const BigInt x_num = mod(2 * x * x + aa * (7 - d) * x + aa * aa * (-7 - 21 * d));
  const BigInt x_den = mod((-3 + d) * x + aa * (-7 + 5 * d));
  if (x_den == 0) return AffinePoint::identity();

  const BigInt y_num = mod(y * (2 * x * x + aa * (14 - 2 * d) * x + aa * aa * (28 + 14 * d)));
  const BigInt y_den = mod(-(5 + d) * x * x - aa * (42 + 2 * d) * x - aa * aa * (77 - 7 * d));

  BigInt x_den_inv;
  mpz_invert(x_den_inv.get_mpz_t(), x_den.get_mpz_t(), p.get_mpz_t());
  BigInt new_x = mod(x_num * x_den_inv);
  if (mod(y) == 0) return AffinePoint::at(std::move(new_x), BigInt(0));
  if (y_den == 0) throw std::logic_error("alpha_endomorphism: unexpected pole in y");
  BigInt y_den_inv;
  mpz_invert(y_den_inv.get_mpz_t(), y_den.get_mpz_t(), p.get_mpz_t());
  return AffinePoint::at(std::move(new_x), mod(y_num * y_den_inv));
}

}  // namespace jkprove::refcheck
