#pragma once

// Pomerance-style certificates for prime J_k: a point Q on the Montgomery
// model of E_a whose order is 2^r with 2^r > (N^(1/4) + 1)^2, r minimal.
// Checking one costs r doublings, about 2.5k multiplications.
//
// Text format (LF line endings, no trailing whitespace):
//
//   JKCERT 1
//   k=<decimal>
//   N=<decimal>
//   a=<decimal, one of -1,-5,-6,-17,-111>
//   d=<decimal in [0,N-1]>
//   r=<decimal>
//   x=<decimal in [0,N-1]>
//   y=<decimal in [0,N-1]>
//   z=<decimal in [0,N-1]>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "jkprove/mont_curve.hpp"
#include "jkprove/prover.hpp"
#include "jkprove/types.hpp"

namespace jkprove {

struct Certificate {
  Index k = 0;
  BigInt n;
  int a = 0;
  BigInt d;
  std::uint64_t r = 0;
  BigInt x;
  BigInt y;
  BigInt z;

  /// Index of Q in the doubling chain, k + 1 - r.
  Index s() const { return k + 1 - static_cast<Index>(r); }

  friend bool operator==(const Certificate& lhs, const Certificate& rhs) {
    return lhs.k == rhs.k && lhs.n == rhs.n && lhs.a == rhs.a && lhs.d == rhs.d &&
           lhs.r == rhs.r && lhs.x == rhs.x && lhs.y == rhs.y && lhs.z == rhs.z;
  }
};

/// Least r with 2^r > (n^(1/4) + 1)^2, computed exactly in integers.
std::uint64_t minimal_order_exponent(const BigInt& n);

/// Exact test of 2^r > (n^(1/4) + 1)^2.
bool order_exceeds_bound(std::uint64_t r, const BigInt& n);

/// Certificate for prime J_k, or the composite verdict.
/// Throws std::invalid_argument for k < 2, std::logic_error if y recovery fails.
std::variant<Certificate, Verdict> build_certificate(Index k);

enum class VerifyFailure {
  kNone,
  kEvenModulus,
  kNotJk,
  kBadTwist,
  kOutOfRange,
  kSharedFactor,    // gcd(N, 14a) > 1
  kSqrtMinus7,
  kOrderBound,      // r not minimal or too small
  kSingularCurve,
  kCurveEquation,
  kOrderNotStrict,  // 2^(r-1) Q not strongly nonzero
  kOrderNotZero,    // 2^r Q not zero
};

std::string_view to_string(VerifyFailure failure);

struct VerifyResult {
  bool valid = false;
  VerifyFailure reason = VerifyFailure::kNone;
  OpCounters counters;

  explicit operator bool() const { return valid; }
};

VerifyResult verify_certificate(const Certificate& cert);

class CertificateParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize(const Certificate& cert);

/// Strict inverse of serialize. Throws CertificateParseError.
Certificate parse_certificate(std::string_view text);

}  // namespace jkprove
