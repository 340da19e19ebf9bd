#include "jkprove/twist_tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "jkprove/jk_sequence.hpp"

namespace jkprove {

namespace {

constexpr auto kSMinus1 = std::to_array<std::uint32_t>({0, 2});
constexpr auto kSMinus5 = std::to_array<std::uint32_t>({0, 2, 4, 5, 7, 9, 12, 13, 16, 18, 21, 22, 23});
constexpr auto kSMinus6 = std::to_array<std::uint32_t>({3, 7, 9, 10, 11, 12, 13, 17, 20, 22});
constexpr auto kSMinus17 = std::to_array<std::uint32_t>({
    0,   1,   5,   7,   9,   10,  13,  14,  15,  18,  19,  20,  22,  23,  27,  30,  31,  33,
    34,  36,  42,  43,  44,  45,  49,  50,  53,  56,  61,  62,  63,  66,  67,  68,  70,  71,
    72,  73,  75,  76,  78,  79,  80,  81,  82,  83,  90,  91,  92,  93,  97,  99,  100, 104,
    106, 108, 110, 111, 112, 114, 117, 118, 121, 122, 123, 125, 126, 128, 129, 133, 135, 136,
    137, 138, 139, 141, 143});
constexpr auto kSMinus111 = std::to_array<std::uint32_t>({2,  4,  6,  9,  14, 15, 18, 20, 22, 23, 25, 30,
                                                   33, 34, 35, 37, 38, 39, 41, 42, 43, 47, 49, 50,
                                                   52, 53, 54, 55, 57, 58, 63, 65, 66, 67, 68, 70});

constexpr auto kAll = std::to_array<std::uint32_t>({0});
constexpr auto kTMinus5 = std::to_array<std::uint32_t>({3, 4, 7, 8, 11, 13, 14, 15, 16, 17, 20, 22});
constexpr auto kTMinus6 = std::to_array<std::uint32_t>({1, 5, 10, 12, 15, 19, 20, 21, 22, 23});
constexpr auto kTMinus111 = std::to_array<std::uint32_t>({1, 2, 3, 6});

constexpr std::array<TwistChoice, 5> kChoices{{
    {-1, 1, 8, TwistRow::kMod3Is0Or2},
    {-5, 15, 50, TwistRow::kMod24Is4_7_13_22},
    {-6, 21, 63, TwistRow::kMod24Is10},
    {-17, 81, 440, TwistRow::kMod72Is1_19_49_67},
    {-111, -633, 12384, TwistRow::kMod72Is25_43},
}};

void check_k(Index k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
}

}  // namespace

std::string_view to_string(TwistRow row) {
  switch (row) {
    case TwistRow::kMod3Is0Or2: return "k=0,2 mod 3";
    case TwistRow::kMod24Is4_7_13_22: return "k=4,7,13,22 mod 24";
    case TwistRow::kMod24Is10: return "k=10 mod 24";
    case TwistRow::kMod72Is1_19_49_67: return "k=1,19,49,67 mod 72";
    case TwistRow::kMod72Is25_43: return "k=25,43 mod 72";
  }
  return "?";
}

bool is_twist(int a) { return std::find(kTwists.begin(), kTwists.end(), a) != kTwists.end(); }

TwistChoice twist_for(int a) {
  for (const auto& choice : kChoices)
    if (choice.a == a) return choice;
  throw std::invalid_argument("not one of the five twists");
}

TwistChoice select_twist(Index k) {
  if (k <= 1) throw std::invalid_argument("select_twist: k must be >= 2");
  if (forced_composite(k)) throw std::invalid_argument("select_twist: k is forced composite");
  if (k % 3 != 1) return kChoices[0];
  switch (k % 24) {
    case 4: case 7: case 13: case 22: return kChoices[1];
    case 10: return kChoices[2];
    default: break;
  }
  switch (k % 72) {
    case 1: case 19: case 49: case 67: return kChoices[3];
    case 25: case 43: return kChoices[4];
    default: break;
  }
  // k = 1 (mod 3) leaves 1, 4, 7, 10, 13, 16, 19, 22 mod 24; 16 is forced composite.
  throw std::logic_error("select_twist: table does not cover k");
}

int jacobi_symbol(const BigInt& m, const BigInt& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  BigInt top = m % n;
  if (top < 0) top += n;
  BigInt bottom = n;
  int sign = 1;
  while (top != 0) {
    const mp_bitcnt_t twos = mpz_scan1(top.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), twos);
    // (2 / n) = -1 iff n = 3, 5 (mod 8)
    const unsigned long bottom8 = mpz_fdiv_ui(bottom.get_mpz_t(), 8);
    if ((twos & 1) && (bottom8 == 3 || bottom8 == 5)) sign = -sign;
    // reciprocity: flip if both are 3 (mod 4)
    if (mpz_fdiv_ui(top.get_mpz_t(), 4) == 3 && bottom8 % 4 == 3) sign = -sign;
    top.swap(bottom);
    top %= bottom;
  }
  return bottom == 1 ? sign : 0;
}

int chi_sqrt_minus7(Index k) {
  if (k < 1) throw std::invalid_argument("chi_sqrt_minus7: k must be >= 1");
  // alpha = 4 (mod sqrt(-7)) so j_k = 1 + 2 * 4^k = 1 + 2^(2k+1) (mod 7); 2^3 = 1 (mod 7).
  const Index exponent = (2 * (k % 3) + 1) % 3;
  const long residue = (1 + (1L << exponent)) % 7;
  const int symbol = jacobi_symbol(BigInt(residue), BigInt(7));
  const int closed_form = (k % 3 == 1) ? 1 : -1;
  if (symbol != closed_form) throw std::logic_error("chi_sqrt_minus7: closed form mismatch");
  return symbol;
}

bool ResidueSet::contains(Index k) const {
  const auto r = static_cast<std::uint32_t>(((k % modulus) + modulus) % modulus);
  return std::binary_search(residues.begin(), residues.end(), r);
}

ResidueSet s_table(int a) {
  switch (a) {
    case -1: return {3, kSMinus1};
    case -5: return {24, kSMinus5};
    case -6: return {24, kSMinus6};
    case -17: return {144, kSMinus17};
    case -111: return {72, kSMinus111};
    default: throw std::invalid_argument("s_table: not one of the five twists");
  }
}

ResidueSet t_table(int a) {
  switch (a) {
    case -1: return {1, kAll};
    case -5: return {24, kTMinus5};
    case -6: return {24, kTMinus6};
    case -17: return {1, kAll};
    case -111: return {8, kTMinus111};
    default: throw std::invalid_argument("t_table: not one of the five twists");
  }
}

bool s_membership(int a, Index k) {
  check_k(k);
  if (!is_twist(a)) throw std::invalid_argument("s_membership: not one of the five twists");
  const JkValue jk = jk_closed(k);
  return jacobi_symbol(BigInt(a), jk.value) * chi_sqrt_minus7(k) == 1;
}

bool s_table_membership(int a, Index k) {
  check_k(k);
  return s_table(a).contains(k);
}

bool t_membership(int a, Index k) {
  check_k(k);
  return t_table(a).contains(k);
}

std::optional<bool> t_membership_from_characters(int a, Index k) {
  check_k(k);
  // k in T_a iff (delta_a / j_k) = -1, with (alpha / j_k) = -1 for every k > 1.
  switch (a) {
    case -1:
    case -17:
      // delta = alpha
      return true;
    case -5: {
      // delta = -5 alpha: (-5 / J_k) * (-1) = -1
      return jacobi_symbol(BigInt(-5), jk_closed(k).value) == 1;
    }
    case -111: {
      // delta = -3
      return jacobi_symbol(BigInt(-3), jk_closed(k).value) == -1;
    }
    case -6:
      return std::nullopt;
    default:
      throw std::invalid_argument("t_membership_from_characters: not one of the five twists");
  }
}

}  // namespace jkprove
