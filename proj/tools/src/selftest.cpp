#include <exception>
#include <functional>
#include <string>

#include "jkprove/certificate.hpp"
#include "jkprove/jk_sequence.hpp"
#include "jkprove/mont_curve.hpp"
#include "jkprove/prover.hpp"
#include "jkprove/quad_ring.hpp"
#include "jkprove/refcheck.hpp"
#include "jkprove/sieve.hpp"
#include "jkprove/twist_tables.hpp"
#include "jkprove_cli/cli.hpp"

namespace jkprove::cli {
namespace {

constexpr Index kPrimeIndicesTo100[] = {2,  3,  4,  5,  7,  9,  10, 17, 18, 28,
                                        38, 49, 53, 60, 63, 65, 77, 84, 87, 100};

bool is_listed_prime_index(Index k) {
  for (Index p : kPrimeIndicesTo100) {
    if (p == k) return true;
  }
  return false;
}

// Returns an empty string on success, otherwise the first failed check.
using Check = std::function<std::string()>;

std::string check_quad_ring() {
  for (Index k = 1; k <= 60; ++k) {
    if (norm(jk_element(k)) != jk_closed(k).value) return "norm(1 + 2 alpha^k) at k=" + std::to_string(k);
  }
  const QuadInt x = make_quad(3, -5);
  const QuadInt y = make_quad(-7, 2);
  if (norm(x * y) != norm(x) * norm(y)) return "norm is not multiplicative";
  if (alpha() * alpha() != alpha() + make_quad(-2, 0)) return "alpha^2 != alpha - 2";
  return {};
}

std::string check_jk_sequence() {
  const auto values = jk_stream(18);
  if (values[0].value != 11 || values[1].value != 11 || values[2].value != 23 ||
      values[3].value != 67 || values[16].value != 524087 || values[17].value != 1046579) {
    return "initial values";
  }
  const std::pair<std::uint64_t, std::uint64_t> periods[] = {
      {3, 8}, {5, 24}, {7, 3}, {17, 144}, {37, 36}};
  for (const auto& [p, m] : periods) {
    if (period_mod(p) != m) return "period mod " + std::to_string(p);
  }
  return {};
}

std::string check_twist_tables() {
  for (Index k = 2; k <= 500; ++k) {
    if (forced_composite(k)) continue;
    const TwistChoice twist = select_twist(k);
    if (!s_membership(twist.a, k) || !t_membership(twist.a, k)) {
      return "row not in S and T at k=" + std::to_string(k);
    }
    if (s_membership(twist.a, k) != s_table_membership(twist.a, k)) {
      return "S table at k=" + std::to_string(k);
    }
  }
  if (jacobi_symbol(BigInt(1001), BigInt(9907)) != -1) return "jacobi(1001, 9907)";
  return {};
}

std::string check_mont_curve() {
  ModulusCtx ctx(BigInt(524087));
  BigInt expected;
  const BigInt base(12345);
  const BigInt exp(987654321);
  mpz_powm(expected.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), ctx.modulus().get_mpz_t());
  if (ctx.pow(base, exp) != expected) return "windowed power";
  const auto d = sqrt_minus7(ctx);
  if (!d || (*d * *d + 7) % ctx.modulus() != 0) return "sqrt(-7) mod 524087";
  return {};
}

std::string check_prover() {
  for (Index k = 2; k <= 100; ++k) {
    if (test_jk(k).verdict.is_prime() != is_listed_prime_index(k)) {
      return "verdict at k=" + std::to_string(k);
    }
  }
  const TestResult r = test_jk(1129);
  if (r.stats.step7.products() != 5 * 1130 || r.stats.step7.additions != 4 * 1130) {
    return "step 7 cost";
  }
  return {};
}

std::string check_certificate() {
  auto built = build_certificate(17);
  if (!std::holds_alternative<Certificate>(built)) return "k=17 not certified";
  const Certificate cert = std::get<Certificate>(built);
  if (!verify_certificate(parse_certificate(serialize(cert))).valid) return "round trip";
  Certificate bad = cert;
  bad.y = (bad.y + 1) % bad.n;
  if (verify_certificate(bad).reason != VerifyFailure::kCurveEquation) return "tampered y accepted";
  return {};
}

std::string check_sieve() {
  const SieveReport direct = sieve_range(1000, 10000);
  const SieveReport folded = sieve_range(1000, 10000, {2, SieveStrategy::kPeriodFold});
  if (direct.survivor != folded.survivor) return "strategies disagree";
  for (Index k : kPrimeIndicesTo100) {
    if (!direct.survivor[k]) return "prime index removed: " + std::to_string(k);
  }
  for (Index k = 1; k <= 1000; ++k) {
    if (direct.survivor[k]) continue;
    const BigInt j = jk_closed(k).value;
    const auto factor = refcheck::trial_division(j, 10000);
    if (!factor || BigInt(*factor) == j) return "no small factor at k=" + std::to_string(k);
  }
  return {};
}

std::string check_refcheck() {
  const BigInt p(23);
  const TwistChoice twist = select_twist(3);
  const refcheck::AffinePoint P = refcheck::AffinePoint::at(BigInt(twist.x0 % 23 + 23) % 23,
                                                            BigInt(twist.y0 % 23 + 23) % 23);
  const refcheck::TwistCurve curve(twist.a, p);
  if (!curve.contains(P)) return "P_a not on E_a mod 23";
  if (curve.scalar_mult(BigInt(16), P) != refcheck::AffinePoint::identity() ||
      curve.scalar_mult(BigInt(8), P) == refcheck::AffinePoint::identity()) {
    return "order of P_a mod 23";
  }
  const BigInt d(4);  // 4^2 = 16 = -7 mod 23
  for (const auto& Q : curve.enumerate()) {
    const auto image = refcheck::alpha_endomorphism(Q, twist.a, d, p);
    if (refcheck::alpha_endomorphism(image, twist.a, p - d, p) != curve.dbl(Q)) {
      return "alpha * conj(alpha) != 2";
    }
  }
  if (!refcheck::probable_prime(BigInt(524087)) || refcheck::probable_prime(BigInt(8327))) {
    return "probable_prime";
  }
  return {};
}

}  // namespace

std::vector<SelftestLine> run_selftest() {
  const std::pair<const char*, Check> checks[] = {
      {"quad_ring", check_quad_ring},       {"jk_sequence", check_jk_sequence},
      {"twist_tables", check_twist_tables}, {"mont_curve", check_mont_curve},
      {"prover", check_prover},             {"certificate", check_certificate},
      {"sieve", check_sieve},               {"refcheck", check_refcheck},
  };
  std::vector<SelftestLine> lines;
  for (const auto& [name, check] : checks) {
    SelftestLine line{name, false, {}};
    try {
      line.detail = check();
      line.passed = line.detail.empty();
    } catch (const std::exception& e) {
      line.detail = std::string("exception: ") + e.what();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace jkprove::cli
