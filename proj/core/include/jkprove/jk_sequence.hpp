#pragma once

// The integer sequence J_k = Norm(1 + 2 alpha^k) = 1 + 2 t_k + 2^(k+2), where
// t_k = alpha^k + conj(alpha)^k, together with its behaviour modulo small primes.
//
// J_k satisfies J_{k+4} = 4 J_{k+3} - 7 J_{k+2} + 8 J_{k+1} - 4 J_k with
// J_1 = J_2 = 11, J_3 = 23, J_4 = 67.

#include <array>
#include <cstdint>
#include <vector>

#include "jkprove/types.hpp"

namespace jkprove {

struct JkValue {
  Index k = 0;
  BigInt value;
};

/// Four consecutive terms J_base .. J_{base+3}, exact or reduced.
template <typename T>
struct RecurrenceWindow {
  std::array<T, 4> values{};
  Index base = 1;

  friend bool operator==(const RecurrenceWindow&, const RecurrenceWindow&) = default;
};

using ExactWindow = RecurrenceWindow<BigInt>;
using ResidueWindow = RecurrenceWindow<std::uint64_t>;

ExactWindow initial_exact_window();
void advance(ExactWindow& window);

/// Largest modulus accepted by the residue recurrence (keeps the step in 64 bits).
inline constexpr std::uint64_t kMaxResidueModulus = std::uint64_t{1} << 58;

ResidueWindow initial_residue_window(std::uint64_t modulus);
void advance(ResidueWindow& window, std::uint64_t modulus);

/// t_k via t_{k+1} = t_k - 2 t_{k-1}, t_0 = 2, t_1 = 1.
BigInt trace_of_alpha_power(Index k);

/// Exact J_k from the trace recurrence. Throws std::invalid_argument for k < 1.
JkValue jk_closed(Index k);

/// J_1 .. J_{k_max} from the four-term recurrence.
std::vector<JkValue> jk_stream(Index k_max);

/// Single-consumer generator of J_k mod ell for k = 1, 2, ...
class JkModStream {
 public:
  /// Throws std::invalid_argument for even ell, ell < 3 or ell > kMaxResidueModulus.
  explicit JkModStream(std::uint64_t ell);

  /// Returns J_k mod ell for the next k, starting at k = 1.
  std::uint64_t next();

  /// Index of the value most recently returned by next() (0 before the first call).
  Index index() const { return index_; }

 private:
  std::uint64_t ell_;
  ResidueWindow window_;
  Index index_ = 0;
};

/// J_k mod ell for k = 1 .. k_max.
std::vector<std::uint64_t> jk_mod_stream(std::uint64_t ell, Index k_max);

/// Period of J_k mod p (odd prime p), found by waiting for the initial
/// four-term window to recur. p = 7 has period 3. Throws std::invalid_argument
/// for even p or p < 3, std::domain_error if no period shows up within p^2 steps
/// (only possible for composite p).
std::uint64_t period_mod(std::uint64_t p);

/// Same as period_mod but gives up (returns 0) after max_steps steps.
std::uint64_t find_period(std::uint64_t ell, std::uint64_t max_steps);

/// k = 0 (mod 8) means 3 | J_k; k = 6 (mod 24) means 5 | J_k.
bool forced_composite(Index k);

}  // namespace jkprove
