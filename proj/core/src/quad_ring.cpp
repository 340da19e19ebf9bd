#include "jkprove/quad_ring.hpp"

#include <stdexcept>

namespace jkprove {

QuadInt alpha() { return make_quad(0, 1); }

QuadInt operator+(const QuadInt& x, const QuadInt& y) { return QuadInt{x.u + y.u, x.v + y.v}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  // (u1 + v1 a)(u2 + v2 a) with a^2 = a - 2
  BigInt vv = x.v * y.v;
  return QuadInt{x.u * y.u - 2 * vv, x.u * y.v + y.u * x.v + vv};
}

QuadInt conj(const QuadInt& x) { return QuadInt{x.u + x.v, -x.v}; }

BigInt norm(const QuadInt& x) { return x.u * x.u + x.u * x.v + 2 * x.v * x.v; }

BigInt trace(const QuadInt& x) { return 2 * x.u + x.v; }

QuadInt pow(const QuadInt& x, std::uint64_t e) {
  QuadInt result = make_quad(1, 0);
  QuadInt base = x;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

QuadInt jk_element(Index k) {
  if (k < 1) throw std::invalid_argument("jk_element: k must be >= 1");
  QuadInt power = pow(alpha(), static_cast<std::uint64_t>(k));
  return QuadInt{1 + 2 * power.u, 2 * power.v};
}

}  // namespace jkprove
