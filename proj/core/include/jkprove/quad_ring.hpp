#pragma once

// Exact arithmetic in Z[alpha], alpha = (1 + sqrt(-7)) / 2, alpha^2 = alpha - 2.

#include <cstdint>

#include "jkprove/types.hpp"

namespace jkprove {

/// The element u + v*alpha.
struct QuadInt {
  BigInt u;
  BigInt v;

  friend bool operator==(const QuadInt& lhs, const QuadInt& rhs) {
    return lhs.u == rhs.u && lhs.v == rhs.v;
  }
};

inline QuadInt make_quad(long u, long v) { return QuadInt{BigInt(u), BigInt(v)}; }

/// alpha itself, (0, 1).
QuadInt alpha();

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const QuadInt& y);

/// Galois conjugate; conj(alpha) = 1 - alpha.
QuadInt conj(const QuadInt& x);

/// x * conj(x) = u^2 + uv + 2v^2.
BigInt norm(const QuadInt& x);

/// x + conj(x) = 2u + v.
BigInt trace(const QuadInt& x);

/// Square-and-multiply; pow(x, 0) is one.
QuadInt pow(const QuadInt& x, std::uint64_t e);

/// j_k = 1 + 2 alpha^k. Throws std::invalid_argument for k < 1.
QuadInt jk_element(Index k);

}  // namespace jkprove
