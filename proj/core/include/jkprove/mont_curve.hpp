#pragma once

// Arithmetic modulo a candidate N and the x-only Montgomery doubling used to
// compute 2^i P_a. Every ring operation goes through ModulusCtx so that the
// work done by a run can be read back from its counters.

#include <cstdint>
#include <optional>
#include <variant>

#include "jkprove/types.hpp"

namespace jkprove {

struct OpCounters {
  std::uint64_t multiplications = 0;
  std::uint64_t squarings = 0;
  std::uint64_t additions = 0;
  std::uint64_t gcds = 0;  // gcd calls, including those made by inversions

  /// Squarings weighted as multiplications.
  std::uint64_t products() const { return multiplications + squarings; }

  OpCounters& operator+=(const OpCounters& other);
  friend OpCounters operator-(const OpCounters& lhs, const OpCounters& rhs);
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// A divisor 1 < g < N (or g = N) exposed by a failed inversion.
struct GcdWitness {
  BigInt divisor;
};

/// Residues modulo an odd N >= 3, always kept in [0, N - 1].
class ModulusCtx {
 public:
  /// Throws std::invalid_argument unless n is odd and >= 3.
  explicit ModulusCtx(BigInt n);

  const BigInt& modulus() const { return n_; }
  const OpCounters& counters() const { return counters_; }

  /// Canonical representative of value; not counted.
  BigInt reduce(const BigInt& value) const;

  // out may alias either operand.
  void mul(BigInt& out, const BigInt& lhs, const BigInt& rhs);
  void sqr(BigInt& out, const BigInt& value);
  void add(BigInt& out, const BigInt& lhs, const BigInt& rhs);
  void sub(BigInt& out, const BigInt& lhs, const BigInt& rhs);

  BigInt gcd_with(const BigInt& value);

  /// Inverse of value, or the gcd that prevents it.
  std::variant<BigInt, GcdWitness> inverse(const BigInt& value);

  /// base^exponent by fixed sliding windows of width window_width(bits(exponent)).
  BigInt pow(const BigInt& base, const BigInt& exponent);

 private:
  void normalize(BigInt& value) const;

  BigInt n_;
  OpCounters counters_;
};

/// max(2, floor(log2(bits) / 2)).
unsigned window_width(std::size_t exponent_bits);

/// Montgomery model B y^2 = x^3 + A x^2 + x of E_a over Z/NZ, given sqrt(-7) = d.
struct MontCurve {
  BigInt d;        // d^2 = -7
  BigInt r_shift;  // gamma = (-7 + d) a / 2, a root of the Weierstrass cubic
  BigInt A;        // (-15 - 3d) / 8
  BigInt B;        // (7 + 3d) / (56 a)
  BigInt C;        // (A + 2) / 4 = (1 - 3d) / 32
};

/// Projective x-only point [x : z].
struct XZPoint {
  BigInt x;
  BigInt z;

  friend bool operator==(const XZPoint& lhs, const XZPoint& rhs) {
    return lhs.x == rhs.x && lhs.z == rhs.z;
  }
};

/// d = 7^((N+1)/4) mod N if d^2 = -7 (mod N), nullopt otherwise.
/// Throws std::invalid_argument unless N = 3 (mod 4).
std::optional<BigInt> sqrt_minus7(ModulusCtx& ctx);

struct Montgomerized {
  MontCurve curve;
  XZPoint start;   // [B (x0 - r) : 1]
  BigInt start_y;  // B y0
};

/// Maps (x0, y0) on E_a to the Montgomery model. A failed inversion of 2, 8, 32
/// or 56a is returned as a witness.
std::variant<Montgomerized, GcdWitness> montgomerize(int a, const BigInt& x0, const BigInt& y0,
                                                      const BigInt& d, ModulusCtx& ctx);

/// Doubles in place: 2 squarings, 3 multiplications, 4 additions.
/// Holds scratch space so a long chain does not allocate.
class XZDoubler {
 public:
  XZDoubler(const MontCurve& curve, ModulusCtx& ctx) : curve_(curve), ctx_(ctx) {}

  void operator()(XZPoint& point);

 private:
  const MontCurve& curve_;
  ModulusCtx& ctx_;
  BigInt sum_sq_;
  BigInt diff_sq_;
  BigInt four_xz_;
};

XZPoint xz_double(const XZPoint& point, const MontCurve& curve, ModulusCtx& ctx);

struct ChainResult {
  XZPoint final_point;                // iterate `count`
  XZPoint penultimate;                // iterate `count - 1`
  std::optional<XZPoint> kept;        // iterate `keep_at`, if requested
};

/// Applies xz_double `count` >= 1 times; iterate 0 is `start`.
/// Throws std::invalid_argument for count == 0 or keep_at > count.
ChainResult double_chain(const XZPoint& start, const MontCurve& curve, ModulusCtx& ctx,
                         std::uint64_t count, std::optional<std::uint64_t> keep_at = std::nullopt);

/// gcd(z, N) == 1; counts one gcd.
bool is_strongly_nonzero(const XZPoint& point, ModulusCtx& ctx);

/// N | z.
bool is_zero_mod(const XZPoint& point, const ModulusCtx& ctx);

}  // namespace jkprove
