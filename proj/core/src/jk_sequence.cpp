#include "jkprove/jk_sequence.hpp"

#include <stdexcept>

namespace jkprove {

ExactWindow initial_exact_window() {
  return ExactWindow{{BigInt(11), BigInt(11), BigInt(23), BigInt(67)}, 1};
}

void advance(ExactWindow& window) {
  auto& w = window.values;
  BigInt next = 4 * w[3] - 7 * w[2] + 8 * w[1] - 4 * w[0];
  w[0] = std::move(w[1]);
  w[1] = std::move(w[2]);
  w[2] = std::move(w[3]);
  w[3] = std::move(next);
  ++window.base;
}

ResidueWindow initial_residue_window(std::uint64_t modulus) {
  return ResidueWindow{{11 % modulus, 11 % modulus, 23 % modulus, 67 % modulus}, 1};
}

void advance(ResidueWindow& window, std::uint64_t modulus) {
  auto& w = window.values;
  // All terms are in [0, modulus); negated terms are written as modulus - x.
  const std::uint64_t next =
      (4 * w[3] + 7 * (modulus - w[2]) + 8 * w[1] + 4 * (modulus - w[0])) % modulus;
  w[0] = w[1];
  w[1] = w[2];
  w[2] = w[3];
  w[3] = next;
  ++window.base;
}

BigInt trace_of_alpha_power(Index k) {
  if (k < 0) throw std::invalid_argument("trace_of_alpha_power: k must be >= 0");
  BigInt prev = 2;
  BigInt cur = 1;
  if (k == 0) return prev;
  BigInt next;
  for (Index i = 1; i < k; ++i) {
    next = cur - 2 * prev;
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

JkValue jk_closed(Index k) {
  if (k < 1) throw std::invalid_argument("jk_closed: k must be >= 1");
  BigInt value = 2 * trace_of_alpha_power(k) + 1;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(k + 2));
  value += power;
  return JkValue{k, std::move(value)};
}

std::vector<JkValue> jk_stream(Index k_max) {
  std::vector<JkValue> out;
  if (k_max < 1) return out;
  out.reserve(static_cast<std::size_t>(k_max));
  ExactWindow window = initial_exact_window();
  for (Index k = 1; k <= k_max; ++k) {
    out.push_back(JkValue{k, window.values[0]});
    advance(window);
  }
  return out;
}

namespace {

void check_odd_modulus(std::uint64_t ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("modulus must be odd and >= 3");
  if (ell > kMaxResidueModulus) throw std::invalid_argument("modulus too large");
}

}  // namespace

JkModStream::JkModStream(std::uint64_t ell) : ell_(ell) {
  check_odd_modulus(ell);
  window_ = initial_residue_window(ell);
}

std::uint64_t JkModStream::next() {
  const std::uint64_t value = window_.values[0];
  advance(window_, ell_);
  ++index_;
  return value;
}

std::vector<std::uint64_t> jk_mod_stream(std::uint64_t ell, Index k_max) {
  JkModStream stream(ell);
  std::vector<std::uint64_t> out;
  if (k_max < 1) return out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (Index k = 1; k <= k_max; ++k) out.push_back(stream.next());
  return out;
}

std::uint64_t find_period(std::uint64_t ell, std::uint64_t max_steps) {
  check_odd_modulus(ell);
  const ResidueWindow start = initial_residue_window(ell);
  ResidueWindow window = start;
  for (std::uint64_t step = 1; step <= max_steps; ++step) {
    advance(window, ell);
    if (window.values == start.values) return step;
  }
  return 0;
}

std::uint64_t period_mod(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("period_mod: p must be an odd prime");
  if (p == 7) return 3;
  if (p > (std::uint64_t{1} << 31)) throw std::invalid_argument("period_mod: p too large");
  const std::uint64_t period = find_period(p, p * p);
  if (period == 0) throw std::domain_error("period_mod: no period within p^2 steps");
  return period;
}

bool forced_composite(Index k) { return k % 8 == 0 || k % 24 == 6; }

}  // namespace jkprove
