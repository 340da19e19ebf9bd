#include "jkprove/types.hpp"

namespace jkprove {

std::size_t decimal_digits(const BigInt& value) {
  if (value == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  BigInt magnitude = abs(value);
  return magnitude.get_str(10).size();
}

}  // namespace jkprove
