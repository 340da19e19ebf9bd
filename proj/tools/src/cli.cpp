#include "jkprove_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "jkprove/certificate.hpp"
#include "jkprove/jk_sequence.hpp"
#include "jkprove/prover.hpp"

namespace jkprove::cli {
namespace {

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

int cmd_test(Index k, const std::string& mode_name, bool json, std::ostream& out,
             std::ostream& err) {
  if (k < 2) {
    err << "test: k must be at least 2\n";
    return kExitUsage;
  }
  const ZeroTestMode mode =
      mode_name == "simple" ? ZeroTestMode::kSimpleNonzero : ZeroTestMode::kStrongGcd;
  if (mode == ZeroTestMode::kSimpleNonzero && k < 6) {
    err << "test: --mode simple needs k >= 6\n";
    return kExitUsage;
  }
  const TestResult result = test_jk(k, mode);
  const std::size_t digits = decimal_digits(jk_closed(k).value);
  const std::uint64_t mults = result.stats.total.products();
  if (json) {
    nlohmann::ordered_json record;
    record["k"] = k;
    record["verdict"] = result.verdict.label();
    record["digits"] = digits;
    record["mults"] = mults;
    record["ms"] = result.stats.elapsed.count();
    out << record.dump() << '\n';
  } else {
    out << "k=" << k << " verdict=" << result.verdict.label() << " digits=" << digits
        << " mults=" << mults << " ms=" << format_ms(result.stats.elapsed.count()) << '\n';
  }
  return kExitOk;
}

int cmd_search(Index k_min, Index k_max, std::uint64_t limit, unsigned jobs,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (k_min < 2 || k_min > k_max) {
    err << "search: need 2 <= kmin <= kmax\n";
    return kExitUsage;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "search: cannot open " << out_path << '\n';
      return kExitIo;
    }
    sink = &file;
  }
  const auto records = search(k_min, k_max, limit, jobs);
  std::size_t primes = 0;
  for (const SearchRecord& record : records) {
    if (record.verdict.is_prime()) ++primes;
    *sink << record.k << ',' << record.verdict.label() << ',' << record.stats.total.products()
          << ',' << format_ms(record.stats.elapsed.count()) << '\n';
  }
  *sink << "survivors=" << records.size() << " primes=" << primes << '\n';
  if (file.is_open() && !file) {
    err << "search: write to " << out_path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_certify(Index k, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (k < 2) {
    err << "certify: k must be at least 2\n";
    return kExitUsage;
  }
  auto built = build_certificate(k);
  if (std::holds_alternative<Verdict>(built)) {
    out << "no certificate: composite\n";
    return kExitOk;
  }
  const std::string text = serialize(std::get<Certificate>(built));
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "certify: cannot write " << out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "verify: cannot read " << path << '\n';
    return kExitIo;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  Certificate cert;
  try {
    cert = parse_certificate(buffer.str());
  } catch (const CertificateParseError& e) {
    err << "verify: " << e.what() << '\n';
    return kExitIo;
  }
  const VerifyResult result = verify_certificate(cert);
  if (result.valid) {
    out << "VALID\n";
  } else {
    out << "INVALID:" << to_string(result.reason) << '\n';
  }
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  bool all = true;
  for (const SelftestLine& line : run_selftest()) {
    out << line.module << ": " << (line.passed ? "pass" : "FAIL");
    if (!line.detail.empty()) out << " (" << line.detail << ')';
    out << '\n';
    all = all && line.passed;
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_bench(std::vector<Index> ks, int repeats, std::ostream& out, std::ostream& err) {
  if (ks.empty()) ks = default_bench_set();
  for (Index k : ks) {
    if (k < 2) {
      err << "bench: every k must be at least 2\n";
      return kExitUsage;
    }
  }
  out << std::left << std::setw(10) << "k" << std::setw(14) << "step2_ms" << std::setw(14)
      << "step7_ms" << "mults\n";
  std::vector<BenchRow> rows;
  for (Index k : ks) {
    const BenchRow row = bench_one(k, repeats);
    rows.push_back(row);
    out << std::left << std::setw(10) << row.k << std::setw(14) << format_ms(row.step2_ms)
        << std::setw(14) << format_ms(row.step7_ms) << row.total_products << '\n';
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].step7_ms <= 0) continue;
    out << "ratio step7(" << rows[i].k << ")/step7(" << rows[i - 1].k
        << ")=" << std::setprecision(3) << rows[i].step7_ms / rows[i - 1].step7_ms << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primality testing for J_k = Norm(1 + 2 alpha^k)", "jkprove"};
  app.require_subcommand(1);

  Index test_k = 0;
  std::string mode = "strong";
  bool json = false;
  auto* test = app.add_subcommand("test", "Decide whether J_k is prime");
  test->add_option("k", test_k, "Index k >= 2")->required();
  test->add_option("--mode", mode, "Zero test for 2^k P")
      ->check(CLI::IsMember({"strong", "simple"}));
  test->add_flag("--json", json, "Print a JSON object");

  Index k_min = 0;
  Index k_max = 0;
  std::uint64_t sieve_limit = 100000;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "Sieve a range of k and test the survivors");
  search_cmd->add_option("kmin", k_min)->required();
  search_cmd->add_option("kmax", k_max)->required();
  search_cmd->add_option("--sieve-limit", sieve_limit, "Largest sieving prime")
      ->capture_default_str();
  search_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", search_out, "Write records to FILE");

  Index certify_k = 0;
  std::string certify_out;
  auto* certify = app.add_subcommand("certify", "Write a primality certificate for J_k");
  certify->add_option("k", certify_k)->required();
  certify->add_option("--out", certify_out, "Write to FILE");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("file", verify_path)->required();

  auto* selftest = app.add_subcommand("selftest", "Run quick invariant checks");

  std::vector<Index> kset;
  int repeats = 1;
  auto* bench = app.add_subcommand("bench", "Time steps 2 and 7 of the prover");
  bench->add_option("--kset", kset, "Indices to time")->delimiter(',');
  bench->add_option("--repeats", repeats, "Best-of count")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (test->parsed()) return cmd_test(test_k, mode, json, out, err);
  if (search_cmd->parsed()) {
    return cmd_search(k_min, k_max, sieve_limit, jobs, search_out, out, err);
  }
  if (certify->parsed()) return cmd_certify(certify_k, certify_out, out, err);
  if (verify->parsed()) return cmd_verify(verify_path, out, err);
  if (selftest->parsed()) return cmd_selftest(out);
  if (bench->parsed()) return cmd_bench(kset, repeats, out, err);
  return kExitUsage;
}

}  // namespace jkprove::cli
