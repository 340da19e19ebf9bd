#include "jkprove/mont_curve.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace jkprove {

OpCounters& OpCounters::operator+=(const OpCounters& other) {
  multiplications += other.multiplications;
  squarings += other.squarings;
  additions += other.additions;
  gcds += other.gcds;
  return *this;
}

OpCounters operator-(const OpCounters& lhs, const OpCounters& rhs) {
  return OpCounters{lhs.multiplications - rhs.multiplications, lhs.squarings - rhs.squarings,
                    lhs.additions - rhs.additions, lhs.gcds - rhs.gcds};
}

ModulusCtx::ModulusCtx(BigInt n) : n_(std::move(n)) {
  if (n_ < 3 || mpz_even_p(n_.get_mpz_t()))
    throw std::invalid_argument("ModulusCtx: modulus must be odd and >= 3");
}

void ModulusCtx::normalize(BigInt& value) const {
  mpz_mod(value.get_mpz_t(), value.get_mpz_t(), n_.get_mpz_t());
}

BigInt ModulusCtx::reduce(const BigInt& value) const {
  BigInt out = value;
  normalize(out);
  return out;
}

void ModulusCtx::mul(BigInt& out, const BigInt& lhs, const BigInt& rhs) {
  mpz_mul(out.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  mpz_tdiv_r(out.get_mpz_t(), out.get_mpz_t(), n_.get_mpz_t());
  ++counters_.multiplications;
}

void ModulusCtx::sqr(BigInt& out, const BigInt& value) {
  mpz_mul(out.get_mpz_t(), value.get_mpz_t(), value.get_mpz_t());
  mpz_tdiv_r(out.get_mpz_t(), out.get_mpz_t(), n_.get_mpz_t());
  ++counters_.squarings;
}

void ModulusCtx::add(BigInt& out, const BigInt& lhs, const BigInt& rhs) {
  mpz_add(out.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  if (mpz_cmp(out.get_mpz_t(), n_.get_mpz_t()) >= 0)
    mpz_sub(out.get_mpz_t(), out.get_mpz_t(), n_.get_mpz_t());
  ++counters_.additions;
}

void ModulusCtx::sub(BigInt& out, const BigInt& lhs, const BigInt& rhs) {
  mpz_sub(out.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  if (mpz_sgn(out.get_mpz_t()) < 0) mpz_add(out.get_mpz_t(), out.get_mpz_t(), n_.get_mpz_t());
  ++counters_.additions;
}

BigInt ModulusCtx::gcd_with(const BigInt& value) {
  ++counters_.gcds;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), n_.get_mpz_t());
  return g;
}

std::variant<BigInt, GcdWitness> ModulusCtx::inverse(const BigInt& value) {
  ++counters_.gcds;
  BigInt g, s;
  const BigInt reduced = reduce(value);
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, reduced.get_mpz_t(), n_.get_mpz_t());
  if (g != 1) return GcdWitness{g};
  normalize(s);
  return s;
}

unsigned window_width(std::size_t exponent_bits) {
  if (exponent_bits < 2) return 2;
  const unsigned log2 = static_cast<unsigned>(std::bit_width(exponent_bits) - 1);
  return std::max(2u, log2 / 2);
}

BigInt ModulusCtx::pow(const BigInt& base, const BigInt& exponent) {
  if (exponent < 0) throw std::invalid_argument("ModulusCtx::pow: negative exponent");
  BigInt result = 1;
  if (exponent == 0) return reduce(result);

  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  const unsigned width = window_width(bits);

  // odd powers base^1, base^3, ..., base^(2^width - 1)
  std::vector<BigInt> odd_powers(std::size_t{1} << (width - 1));
  odd_powers[0] = reduce(base);
  BigInt base_sq;
  sqr(base_sq, odd_powers[0]);
  for (std::size_t i = 1; i < odd_powers.size(); ++i) mul(odd_powers[i], odd_powers[i - 1], base_sq);

  const mpz_srcptr e = exponent.get_mpz_t();
  bool started = false;
  long i = static_cast<long>(bits) - 1;
  while (i >= 0) {
    if (!mpz_tstbit(e, static_cast<mp_bitcnt_t>(i))) {
      if (started) sqr(result, result);
      --i;
      continue;
    }
    // window [low, i] ending in a set bit
    long low = std::max(0L, i - static_cast<long>(width) + 1);
    while (!mpz_tstbit(e, static_cast<mp_bitcnt_t>(low))) ++low;
    unsigned long window = 0;
    for (long j = i; j >= low; --j) {
      if (started) sqr(result, result);
      window = (window << 1) | mpz_tstbit(e, static_cast<mp_bitcnt_t>(j));
    }
    if (started) {
      mul(result, result, odd_powers[window >> 1]);
    } else {
      result = odd_powers[window >> 1];
      started = true;
    }
    i = low - 1;
  }
  return result;
}

std::optional<BigInt> sqrt_minus7(ModulusCtx& ctx) {
  const BigInt& n = ctx.modulus();
  if (mpz_fdiv_ui(n.get_mpz_t(), 4) != 3)
    throw std::invalid_argument("sqrt_minus7: modulus must be 3 mod 4");
  const BigInt exponent = (n + 1) / 4;
  BigInt d = ctx.pow(BigInt(7), exponent);
  BigInt check;
  ctx.sqr(check, d);
  const BigInt minus7 = ctx.reduce(BigInt(-7));
  if (check != minus7) return std::nullopt;
  return d;
}

std::variant<Montgomerized, GcdWitness> montgomerize(int a, const BigInt& x0, const BigInt& y0,
                                                      const BigInt& d, ModulusCtx& ctx) {
  const auto inverse_of = [&ctx](long value) { return ctx.inverse(BigInt(value)); };

  auto inv2 = inverse_of(2);
  if (auto* w = std::get_if<GcdWitness>(&inv2)) return *w;
  auto inv8 = inverse_of(8);
  if (auto* w = std::get_if<GcdWitness>(&inv8)) return *w;
  auto inv32 = inverse_of(32);
  if (auto* w = std::get_if<GcdWitness>(&inv32)) return *w;
  auto inv56a = inverse_of(56L * a);
  if (auto* w = std::get_if<GcdWitness>(&inv56a)) return *w;

  const BigInt a_res = ctx.reduce(BigInt(a));
  const BigInt dd = ctx.reduce(d);
  BigInt three_d;
  ctx.add(three_d, dd, dd);
  ctx.add(three_d, three_d, dd);

  MontCurve curve;
  curve.d = dd;

  // r = (-7 + d) a / 2
  BigInt t;
  ctx.sub(t, dd, ctx.reduce(BigInt(7)));
  ctx.mul(t, t, a_res);
  ctx.mul(curve.r_shift, t, std::get<BigInt>(inv2));

  // A = (-15 - 3d) / 8
  ctx.sub(t, ctx.reduce(BigInt(-15)), three_d);
  ctx.mul(curve.A, t, std::get<BigInt>(inv8));

  // B = (7 + 3d) / (56 a)
  ctx.add(t, ctx.reduce(BigInt(7)), three_d);
  ctx.mul(curve.B, t, std::get<BigInt>(inv56a));

  // C = (1 - 3d) / 32
  ctx.sub(t, ctx.reduce(BigInt(1)), three_d);
  ctx.mul(curve.C, t, std::get<BigInt>(inv32));

  Montgomerized out;
  ctx.sub(t, ctx.reduce(x0), curve.r_shift);
  ctx.mul(out.start.x, curve.B, t);
  out.start.z = ctx.reduce(BigInt(1));
  ctx.mul(out.start_y, curve.B, ctx.reduce(y0));
  out.curve = std::move(curve);
  return out;
}

void XZDoubler::operator()(XZPoint& point) {
  ctx_.add(sum_sq_, point.x, point.z);
  ctx_.sqr(sum_sq_, sum_sq_);                   // (x + z)^2
  ctx_.sub(diff_sq_, point.x, point.z);
  ctx_.sqr(diff_sq_, diff_sq_);                 // (x - z)^2
  ctx_.sub(four_xz_, sum_sq_, diff_sq_);        // 4xz
  ctx_.mul(point.x, sum_sq_, diff_sq_);
  ctx_.mul(point.z, curve_.C, four_xz_);
  ctx_.add(point.z, point.z, diff_sq_);
  ctx_.mul(point.z, point.z, four_xz_);
}

XZPoint xz_double(const XZPoint& point, const MontCurve& curve, ModulusCtx& ctx) {
  XZPoint out = point;
  XZDoubler doubler(curve, ctx);
  doubler(out);
  return out;
}

ChainResult double_chain(const XZPoint& start, const MontCurve& curve, ModulusCtx& ctx,
                         std::uint64_t count, std::optional<std::uint64_t> keep_at) {
  if (count == 0) throw std::invalid_argument("double_chain: count must be >= 1");
  if (keep_at && *keep_at > count) throw std::invalid_argument("double_chain: keep_at > count");
  ChainResult result;
  XZDoubler doubler(curve, ctx);
  XZPoint current = start;
  if (keep_at && *keep_at == 0) result.kept = current;
  for (std::uint64_t i = 1; i <= count; ++i) {
    if (i == count) result.penultimate = current;
    doubler(current);
    if (keep_at && *keep_at == i) result.kept = current;
  }
  result.final_point = std::move(current);
  return result;
}

bool is_strongly_nonzero(const XZPoint& point, ModulusCtx& ctx) {
  return ctx.gcd_with(point.z) == 1;
}

bool is_zero_mod(const XZPoint& point, const ModulusCtx& ctx) {
  return mpz_divisible_p(point.z.get_mpz_t(), ctx.modulus().get_mpz_t()) != 0;
}

}  // namespace jkprove
