#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jkprove {

using BigInt = mpz_class;

// Index into the sequence J_1, J_2, ...; signed so that callers can pass
// nonsense values and get a clean rejection instead of a wraparound.
using Index = std::int64_t;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const BigInt& value);

}  // namespace jkprove
