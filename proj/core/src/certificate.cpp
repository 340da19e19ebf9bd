#include "jkprove/certificate.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "jkprove/jk_sequence.hpp"
#include "jkprove/twist_tables.hpp"

namespace jkprove {

bool order_exceeds_bound(std::uint64_t r, const BigInt& n) {
  // With m = 2^r: m > (n^(1/4) + 1)^2  <=>  (sqrt(m) - 1)^4 > n
  //   <=>  m^2 + 6m + 1 - n > 4 (m + 1) sqrt(m), both sides positive.
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(r));
  const BigInt lhs = m * m + 6 * m + 1 - n;
  if (lhs <= 0) return false;
  const BigInt rhs_sq = 16 * (m + 1) * (m + 1) * m;
  return lhs * lhs > rhs_sq;
}

std::uint64_t minimal_order_exponent(const BigInt& n) {
  std::uint64_t r = 1;
  while (!order_exceeds_bound(r, n)) ++r;
  return r;
}

std::variant<Certificate, Verdict> build_certificate(Index k) {
  if (k < 2) throw std::invalid_argument("build_certificate: k must be >= 2");
  const BigInt n = jk_closed(k).value;
  const std::uint64_t r = minimal_order_exponent(n);
  const Index s = k + 1 - static_cast<Index>(r);
  if (s < 0) throw std::logic_error("build_certificate: order bound exceeds 2^(k+1)");

  ProverOptions options;
  options.keep_at = static_cast<std::uint64_t>(s);
  ProverTrace trace = run_prover(k, options);
  if (!trace.verdict.is_prime()) return trace.verdict;

  const MontCurve& curve = trace.start->curve;
  const XZPoint& q = *trace.kept;
  ModulusCtx ctx(n);

  Certificate cert;
  cert.k = k;
  cert.n = n;
  cert.a = trace.twist->a;
  cert.d = curve.d;
  cert.r = r;
  cert.x = q.x;
  cert.z = q.z;

  if (s == 0) {
    cert.y = trace.start->start_y;
  } else {
    // y^2 = (x^3 + A x^2 z + x z^2) / (B z)
    BigInt rhs, t;
    ctx.sqr(t, q.x);
    ctx.mul(rhs, t, q.x);
    ctx.mul(t, t, curve.A);
    ctx.mul(t, t, q.z);
    ctx.add(rhs, rhs, t);
    ctx.sqr(t, q.z);
    ctx.mul(t, t, q.x);
    ctx.add(rhs, rhs, t);
    ctx.mul(t, curve.B, q.z);
    auto inverse = ctx.inverse(t);
    if (std::holds_alternative<GcdWitness>(inverse))
      throw std::logic_error("build_certificate: B z not invertible for prime N");
    ctx.mul(rhs, rhs, std::get<BigInt>(inverse));
    cert.y = ctx.pow(rhs, (n + 1) / 4);
    BigInt check;
    ctx.sqr(check, cert.y);
    if (check != rhs) throw std::logic_error("build_certificate: y^2 is not a square mod N");
  }
  return cert;
}

std::string_view to_string(VerifyFailure failure) {
  switch (failure) {
    case VerifyFailure::kNone: return "none";
    case VerifyFailure::kEvenModulus: return "even-modulus";
    case VerifyFailure::kNotJk: return "not-jk";
    case VerifyFailure::kBadTwist: return "bad-twist";
    case VerifyFailure::kOutOfRange: return "out-of-range";
    case VerifyFailure::kSharedFactor: return "shared-factor";
    case VerifyFailure::kSqrtMinus7: return "sqrt-minus7";
    case VerifyFailure::kOrderBound: return "order-bound";
    case VerifyFailure::kSingularCurve: return "singular-curve";
    case VerifyFailure::kCurveEquation: return "curve-equation";
    case VerifyFailure::kOrderNotStrict: return "order-not-strict";
    case VerifyFailure::kOrderNotZero: return "order-not-zero";
  }
  return "unknown";
}

VerifyResult verify_certificate(const Certificate& cert) {
  VerifyResult result;
  const auto fail = [&result](VerifyFailure reason) {
    result.valid = false;
    result.reason = reason;
    return result;
  };

  const BigInt& n = cert.n;
  if (n < 3 || mpz_even_p(n.get_mpz_t())) return fail(VerifyFailure::kEvenModulus);
  if (cert.k < 2 || jk_closed(cert.k).value != n) return fail(VerifyFailure::kNotJk);
  if (!is_twist(cert.a)) return fail(VerifyFailure::kBadTwist);
  for (const BigInt* v : {&cert.d, &cert.x, &cert.y, &cert.z})
    if (*v < 0 || *v >= n) return fail(VerifyFailure::kOutOfRange);

  ModulusCtx ctx(n);
  const auto finish = [&]() {
    result.counters = ctx.counters();
    return result;
  };

  if (ctx.gcd_with(BigInt(14 * cert.a)) != 1) {
    fail(VerifyFailure::kSharedFactor);
    return finish();
  }

  BigInt t;
  ctx.sqr(t, cert.d);
  if (t != ctx.reduce(BigInt(-7))) {
    fail(VerifyFailure::kSqrtMinus7);
    return finish();
  }

  if (cert.r < 1 || !order_exceeds_bound(cert.r, n) || order_exceeds_bound(cert.r - 1, n) ||
      static_cast<Index>(cert.r) > cert.k + 1) {
    fail(VerifyFailure::kOrderBound);
    return finish();
  }

  // Curve constants from d and a alone. N is odd and prime to 7a here, so the
  // denominators are units.
  const TwistChoice twist = twist_for(cert.a);
  auto mapped = montgomerize(cert.a, BigInt(twist.x0), BigInt(twist.y0), cert.d, ctx);
  if (std::holds_alternative<GcdWitness>(mapped)) {
    fail(VerifyFailure::kSharedFactor);
    return finish();
  }
  const MontCurve& curve = std::get<Montgomerized>(mapped).curve;

  // B (A^2 - 4) must be a unit
  BigInt disc;
  ctx.sqr(disc, curve.A);
  ctx.sub(disc, disc, ctx.reduce(BigInt(4)));
  ctx.mul(disc, disc, curve.B);
  if (ctx.gcd_with(disc) != 1) {
    fail(VerifyFailure::kSingularCurve);
    return finish();
  }

  // B y^2 z = x^3 + A x^2 z + x z^2
  BigInt lhs, rhs, x2;
  ctx.sqr(lhs, cert.y);
  ctx.mul(lhs, lhs, curve.B);
  ctx.mul(lhs, lhs, cert.z);
  ctx.sqr(x2, cert.x);
  ctx.mul(rhs, x2, cert.x);
  ctx.mul(t, x2, curve.A);
  ctx.mul(t, t, cert.z);
  ctx.add(rhs, rhs, t);
  ctx.sqr(t, cert.z);
  ctx.mul(t, t, cert.x);
  ctx.add(rhs, rhs, t);
  if (lhs != rhs) {
    fail(VerifyFailure::kCurveEquation);
    return finish();
  }

  const ChainResult chain = double_chain(XZPoint{cert.x, cert.z}, curve, ctx, cert.r);
  if (!is_strongly_nonzero(chain.penultimate, ctx)) {
    fail(VerifyFailure::kOrderNotStrict);
    return finish();
  }
  if (!is_zero_mod(chain.final_point, ctx)) {
    fail(VerifyFailure::kOrderNotZero);
    return finish();
  }

  result.valid = true;
  result.reason = VerifyFailure::kNone;
  return finish();
}

std::string serialize(const Certificate& cert) {
  std::ostringstream out;
  out << "JKCERT 1\n"
      << "k=" << cert.k << '\n'
      << "N=" << to_decimal(cert.n) << '\n'
      << "a=" << cert.a << '\n'
      << "d=" << to_decimal(cert.d) << '\n'
      << "r=" << cert.r << '\n'
      << "x=" << to_decimal(cert.x) << '\n'
      << "y=" << to_decimal(cert.y) << '\n'
      << "z=" << to_decimal(cert.z) << '\n';
  return out.str();
}

namespace {

// Canonical decimal: optional '-' (if allowed), no leading zeros, no '+'.
bool is_canonical_decimal(std::string_view text, bool allow_negative) {
  if (allow_negative && !text.empty() && text.front() == '-') {
    text.remove_prefix(1);
    if (text == "0") return false;
  }
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  return text.size() == 1 || text.front() != '0';
}

BigInt parse_big(std::string_view text, std::string_view field) {
  if (!is_canonical_decimal(text, false))
    throw CertificateParseError("field " + std::string(field) + ": not a canonical decimal");
  return BigInt(std::string(text), 10);
}

template <typename Int>
Int parse_small(std::string_view text, std::string_view field, bool allow_negative) {
  if (!is_canonical_decimal(text, allow_negative))
    throw CertificateParseError("field " + std::string(field) + ": not a canonical decimal");
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw CertificateParseError("field " + std::string(field) + ": out of range");
  return value;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  if (text.empty()) throw CertificateParseError("empty input");

  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    if (end == std::string_view::npos) throw CertificateParseError("missing final newline");
    lines.push_back(text.substr(0, end));
    text.remove_prefix(end + 1);
  }

  constexpr std::array<std::string_view, 8> kKeys{"k", "N", "a", "d", "r", "x", "y", "z"};
  if (lines.front() != "JKCERT 1") {
    if (lines.front().starts_with("JKCERT ")) throw CertificateParseError("unknown version");
    throw CertificateParseError("missing JKCERT header");
  }
  if (lines.size() != kKeys.size() + 1)
    throw CertificateParseError("expected " + std::to_string(kKeys.size() + 1) + " lines");

  std::array<std::string_view, 8> values;
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    const std::string_view line = lines[i + 1];
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || line.substr(0, eq) != kKeys[i])
      throw CertificateParseError("line " + std::to_string(i + 2) + ": expected field " +
                                  std::string(kKeys[i]));
    values[i] = line.substr(eq + 1);
  }

  Certificate cert;
  cert.k = parse_small<Index>(values[0], "k", false);
  cert.n = parse_big(values[1], "N");
  cert.a = parse_small<int>(values[2], "a", true);
  if (!is_twist(cert.a)) throw CertificateParseError("field a: not one of -1,-5,-6,-17,-111");
  cert.d = parse_big(values[3], "d");
  cert.r = parse_small<std::uint64_t>(values[4], "r", false);
  cert.x = parse_big(values[5], "x");
  cert.y = parse_big(values[6], "y");
  cert.z = parse_big(values[7], "z");
  for (const auto& [value, name] : {std::pair{&cert.d, "d"}, std::pair{&cert.x, "x"},
                                    std::pair{&cert.y, "y"}, std::pair{&cert.z, "z"}})
    if (*value >= cert.n) throw CertificateParseError(std::string("field ") + name + ": not below N");
  return cert;
}

}  // namespace jkprove
