#pragma once

// Twist selection for E_a: y^2 = x^3 - 35 a^2 x - 98 a^3, and the residue
// sets S_a (Frobenius sign) and T_a (P_a outside alpha E) that justify it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "jkprove/types.hpp"

namespace jkprove {

enum class TwistRow {
  kMod3Is0Or2,           // k = 0, 2 (mod 3)           a = -1
  kMod24Is4_7_13_22,     // k = 4, 7, 13, 22 (mod 24)  a = -5
  kMod24Is10,            // k = 10 (mod 24)            a = -6
  kMod72Is1_19_49_67,    // k = 1, 19, 49, 67 (mod 72) a = -17
  kMod72Is25_43,         // k = 25, 43 (mod 72)        a = -111
};

std::string_view to_string(TwistRow row);

struct TwistChoice {
  int a = 0;
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  TwistRow row = TwistRow::kMod3Is0Or2;
};

inline constexpr std::array<int, 5> kTwists{-1, -5, -6, -17, -111};

bool is_twist(int a);

/// The fixed generator P_a for a in kTwists. Throws std::invalid_argument otherwise.
TwistChoice twist_for(int a);

/// Table row for k. Throws std::invalid_argument for k <= 1 or forced-composite k.
TwistChoice select_twist(Index k);

/// Jacobi symbol (m / n) for odd n >= 1, binary algorithm.
/// Throws std::invalid_argument for even or non-positive n.
int jacobi_symbol(const BigInt& m, const BigInt& n);

/// (j_k / sqrt(-7)) = ((1 + 2^(2k+1)) / 7): +1 for k = 1 (mod 3), else -1.
int chi_sqrt_minus7(Index k);

/// A residue class set { k : k mod modulus in residues }.
struct ResidueSet {
  std::uint32_t modulus = 1;
  std::span<const std::uint32_t> residues;

  bool contains(Index k) const;
};

/// Residues of S_a and T_a. Throws std::invalid_argument for a not in kTwists.
ResidueSet s_table(int a);
ResidueSet t_table(int a);

/// k in S_a computed from (a / J_k) * chi_sqrt_minus7(k) (k >= 2).
bool s_membership(int a, Index k);

/// Table lookup for S_a (k >= 2).
bool s_table_membership(int a, Index k);

/// Table lookup for T_a (k >= 2).
bool t_membership(int a, Index k);

/// T_a recomputed from delta_a and (alpha / j_k) = -1. Returns nullopt for
/// a = -6, whose character (sqrt(-7) / j_k) is not computed here.
std::optional<bool> t_membership_from_characters(int a, Index k);

}  // namespace jkprove
