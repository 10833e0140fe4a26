#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "klr/bruhat.hpp"
#include "klr/fib_factor.hpp"
#include "klr/omega.hpp"
#include "klr/rpoly.hpp"

namespace klr::cli {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

// Dense coefficients from exponent 0, offset in half units (always 0 here).
json poly_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_json(c));
  return {{"coeffs", coeffs}, {"offset", 0}, {"text", p.to_string()}};
}

// Parses a permutation argument; "e" is the identity of rank `rank_hint`.
Permutation perm_arg(const std::string& text, int rank_hint) {
  if (text == "e") {
    if (rank_hint <= 0) throw UsageError("cannot infer the rank of 'e'; give --n or another permutation");
    return Permutation::identity(rank_hint);
  }
  return Permutation::parse(text);
}

// Parses a pair where either side may be "e".
std::pair<Permutation, Permutation> perm_pair(const RunConfig& c) {
  const std::string& a = c.perms.at(0);
  const std::string& b = c.perms.at(1);
  if (a == "e" && b == "e") {
    return {perm_arg(a, c.n), perm_arg(b, c.n)};
  }
  if (a == "e") {
    Permutation v = Permutation::parse(b);
    return {Permutation::identity(v.rank()), v};
  }
  Permutation u = Permutation::parse(a);
  Permutation v = perm_arg(b, u.rank());
  if (u.rank() != v.rank()) throw UsageError("permutations have different ranks");
  return {u, v};
}

void check_capacity(const RunConfig& c, int rank, int ceiling, std::ostream& err) {
  if (rank <= ceiling) return;
  if (!c.force) {
    throw CapacityError("n = " + std::to_string(rank) + " exceeds the ceiling " +
                        std::to_string(ceiling) + " for this command; pass --force to override");
  }
  err << "warning: n = " << rank << " exceeds the default ceiling " << ceiling
      << "; running anyway (--force)\n";
}

void write_report(const VerificationReport& r, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
      mismatches.push_back({{"inputs", m.inputs}, {"expected", m.expected}, {"actual", m.actual}});
    json j = {{"format_version", kFormatVersion},
              {"theorem", r.theorem},
              {"n", r.n},
              {"subject", r.subject_label},
              {"subjects", r.subjects},
              {"checks", r.checks},
              {"passed", r.passed()},
              {"mismatches", mismatches}};
    out << j.dump(2) << '\n';
    return;
  }
  out << r.summary() << '\n';
  for (const auto& m : r.mismatches)
    out << "  MISMATCH " << m.inputs << ": expected " << m.expected << ", got " << m.actual << '\n';
}

int run_compute(const RunConfig& c, RPolyEngine& engine, std::ostream& out, std::ostream& err) {
  const auto [u, v] = perm_pair(c);
  check_capacity(c, u.rank(), kSingleCeiling, err);
  IntPoly result;
  std::optional<FibFactorization> cert;
  const char* kind = "rtilde";
  switch (c.compute) {
    case ComputeKind::kRtilde:
      result = engine.rtilde(u, v);
      break;
    case ComputeKind::kR:
      kind = "r";
      result = engine.rpoly(u, v);
      break;
    case ComputeKind::kBridge:
      kind = "bridge";
      result = engine.rtilde_to_r(u, v);
      break;
    case ComputeKind::kFactor:
      kind = "factor";
      result = engine.rtilde(u, v);
      if (!result.is_zero()) cert = factor_fibonacci(result);
      break;
  }
  if (c.format == Format::kJson) {
    json j = {{"format_version", kFormatVersion}, {"kind", kind}, {"u", u.to_string()},
              {"v", v.to_string()}, {"poly", poly_json(result)}};
    if (c.compute == ComputeKind::kFactor) {
      j["certificate"] = cert ? json{{"g", cert->g}, {"h", cert->hs}} : json(nullptr);
    }
    out << j.dump(2) << '\n';
  } else if (c.compute == ComputeKind::kFactor) {
    out << result.to_string() << '\n' << (cert ? cert->to_string() : "no factorization") << '\n';
  } else {
    out << result.to_string() << '\n';
  }
  return exit_code::kOk;
}

int run_interval(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Permutation top = perm_arg(c.perms.at(0), c.n);
  check_capacity(c, top.rank(), kSweepCeiling, err);
  const auto interval = interval_below(top, c.force ? kMaxRank : kSweepCeiling);
  if (c.format == Format::kJson) {
    json elems = json::array();
    for (const auto& p : interval.elements) elems.push_back(p.to_string());
    out << json{{"format_version", kFormatVersion}, {"top", top.to_string()}, {"elements", elems}}.dump(2)
        << '\n';
  } else {
    for (const auto& p : interval.elements) out << p.to_string() << '\n';
  }
  return exit_code::kOk;
}

int run_subwords(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Permutation sigma = perm_arg(c.perms.at(0), c.n);
  if (sigma.rank() != c.n) throw UsageError("--sigma has rank " + std::to_string(sigma.rank()) +
                                            " but --n is " + std::to_string(c.n));
  if (c.n < 3) throw UsageError("subwords needs --n >= 3");
  check_capacity(c, c.n, kSingleCeiling, err);
  const auto subwords = reduced_subwords_for(c.n, sigma);
  if (c.format == Format::kJson) {
    json arr = json::array();
    for (const auto& w : subwords) {
      std::vector<int> letters(w.word.letters().begin(), w.word.letters().end());
      arr.push_back({{"positions", w.positions},
                     {"word", letters},
                     {"d", d_stat(w.word)},
                     {"h", h_stat(c.n, w.word)},
                     {"g", g_stat(w.word)}});
    }
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& w : subwords) {
      std::string pos;
      for (int p : w.positions) pos += (pos.empty() ? "" : ",") + std::to_string(p);
      out << "positions={" << pos << "} word=[" << w.word.to_string() << "] d=" << d_stat(w.word)
          << " h=" << h_stat(c.n, w.word) << " g=" << g_stat(w.word) << '\n';
    }
  }
  return exit_code::kOk;
}

SweepOptions sweep_options(const RunConfig& c) {
  return {c.jobs, c.force ? kMaxRank : kSweepCeiling};
}

int run_verify(const RunConfig& c, RPolyEngine& engine, std::ostream& out, std::ostream& err) {
  if (c.theorem != Theorem::kTRecurrence) check_capacity(c, c.n, kSweepCeiling, err);
  const auto report = verify_theorem(engine, c.theorem, c.n, sweep_options(c));
  write_report(report, c.format, out);
  return report.passed() ? exit_code::kOk : exit_code::kMismatch;
}

int run_table(const RunConfig& c, RPolyEngine& engine, std::ostream& out, std::ostream& err) {
  check_capacity(c, c.n, kSweepCeiling, err);
  const auto rows = sigma_table(engine, c.n, sweep_options(c));
  std::ofstream file;
  if (c.out) {
    file.open(*c.out, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + c.out->string());
  }
  std::ostream& sink = c.out ? file : out;
  sink << "sigma,length,d,h,g,rtilde\n";
  for (const auto& r : rows) {
    const std::string name = r.sigma.to_string();
    sink << (r.sigma.rank() >= 10 ? '"' + name + '"' : name) << ',' << r.length << ',' << r.d
         << ',' << r.h << ',' << r.g << ",\"" << r.rtilde.to_string() << "\"\n";
  }
  if (c.out) err << "wrote " << rows.size() << " rows to " << c.out->string() << '\n';
  return exit_code::kOk;
}

int run_conjecture(const RunConfig& c, RPolyEngine& engine, std::ostream& out, std::ostream& err) {
  check_capacity(c, c.n, kSweepCeiling, err);
  ConjectureOptions opts{c.certs.has_value(), c.jobs, c.force ? kMaxRank : kSweepCeiling};
  const auto report = verify_conjecture(engine, c.n, opts);
  if (c.certs) {
    std::ofstream file(*c.certs, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + c.certs->string());
    for (const auto& cert : *report.certificates) {
      file << cert.lower.to_string() << ' ' << cert.upper.to_string() << ' '
           << cert.factorization.to_string() << '\n';
    }
  }
  if (c.format == Format::kJson) {
    json failures = json::array();
    for (const auto& f : report.failures)
      failures.push_back({{"sigma1", f.lower.to_string()}, {"sigma2", f.upper.to_string()},
                          {"rtilde", poly_json(f.rtilde)}});
    out << json{{"format_version", kFormatVersion}, {"n", report.n},
                {"pairs_tested", report.pairs_tested}, {"successes", report.successes},
                {"passed", report.passed()}, {"failures", failures}}
               .dump(2)
        << '\n';
  } else {
    out << "conjecture n=" << report.n << ": pairs tested: " << report.pairs_tested
        << ", successes: " << report.successes << ", failures: " << report.failures.size() << '\n';
    for (const auto& f : report.failures)
      out << "  FAIL " << f.lower.to_string() << ' ' << f.upper.to_string() << ": "
          << f.rtilde.to_string() << '\n';
  }
  return report.passed() ? exit_code::kOk : exit_code::kMismatch;
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err) {
  RunConfig c;
  CLI::App app{"Kazhdan-Lusztig R- and R~-polynomials on symmetric groups", "klr"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string cache;
  app.add_option("--cache", cache,
                 std::string("R~ cache file, loaded at start and rewritten at exit (fallback: $") +
                     kCacheEnvVar + ")");
  app.add_option("--jobs", c.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--force", c.force, "Allow ranks above the default ceilings (sweeps 8, single 9)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* compute = app.add_subcommand("compute", "Compute one polynomial for a pair u, v");
  bool f_rtilde = false, f_r = false, f_bridge = false, f_factor = false;
  auto* o_rtilde = compute->add_flag("--rtilde", f_rtilde, "R~_{u,v} by its recurrence (default)");
  auto* o_r = compute->add_flag("--r", f_r, "R_{u,v} by its recurrence");
  auto* o_bridge = compute->add_flag("--bridge", f_bridge, "R_{u,v} via the R~ substitution");
  auto* o_factor = compute->add_flag("--factor", f_factor, "R~_{u,v} and its Fibonacci certificate");
  o_rtilde->excludes(o_r, o_bridge, o_factor);
  o_r->excludes(o_bridge, o_factor);
  o_bridge->excludes(o_factor);
  compute->add_option("perms", c.perms, "u and v (\"3412\", \"3,4,1,2\" or \"e\")")
      ->expected(2)
      ->required();
  compute->add_option("--n", c.n, "Rank, used when both arguments are 'e'");

  auto* interval = app.add_subcommand("interval", "List all permutations below <perm>");
  interval->add_option("perm", c.perms, "Top of the interval")->expected(1)->required();
  interval->add_option("--n", c.n, "Rank, used when perm is 'e'");

  auto* subwords = app.add_subcommand("subwords", "Reduced Omega_n subwords expressing sigma");
  std::string sigma;
  subwords->add_option("--n", c.n, "Rank")->required();
  subwords->add_option("--sigma", sigma, "Target permutation")->required();

  auto* verify = app.add_subcommand("verify", "Sweep one identity against the recurrence");
  std::string theorem;
  verify->add_option("theorem", theorem, "main|corollary|vni|ll|trec|relation|lemmas")
      ->required()
      ->check(CLI::IsMember({"main", "corollary", "vni", "ll", "trec", "relation", "lemmas"}));
  verify->add_option("--n", c.n, "Rank")->required();

  auto* table = app.add_subcommand("table", "CSV of sigma, length, d, h, g, R~ for sigma <= v_n");
  table->add_option("--n", c.n, "Rank")->required();
  std::string out_path;
  table->add_option("--out", out_path, "Output file (default: standard output)");

  auto* conjecture = app.add_subcommand("conjecture", "Factor R~ for all sigma1 <= sigma2 <= v_n");
  conjecture->add_option("--n", c.n, "Rank")->required();
  std::string certs_path;
  conjecture->add_option("--certs", certs_path, "Write certificates to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  if (!cache.empty()) c.cache = cache;
  c.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kText;
  if (*compute) {
    c.command = Command::kCompute;
    c.compute = f_r ? ComputeKind::kR
                : f_bridge ? ComputeKind::kBridge
                : f_factor ? ComputeKind::kFactor
                           : ComputeKind::kRtilde;
  } else if (*interval) {
    c.command = Command::kInterval;
  } else if (*subwords) {
    c.command = Command::kSubwords;
    c.perms = {sigma};
  } else if (*verify) {
    c.command = Command::kVerify;
    c.theorem = *parse_theorem(theorem);
  } else if (*table) {
    c.command = Command::kTable;
    if (!out_path.empty()) c.out = out_path;
  } else {
    c.command = Command::kConjecture;
    if (!certs_path.empty()) c.certs = certs_path;
  }

  if (c.format == Format::kCsv && c.command != Command::kTable) {
    err << "klr: --format csv is only available for 'table'\n";
    return exit_code::kUsage;
  }
  if (c.command == Command::kTable && c.format == Format::kJson) {
    err << "klr: 'table' writes CSV only\n";
    return exit_code::kUsage;
  }
  if (c.n < 0 || c.n > kMaxRank) {
    err << "klr: --n must be between 1 and " << kMaxRank << "\n";
    return exit_code::kUsage;
  }
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RPolyEngine engine;
  try {
    if (c.cache) {
      const std::size_t loaded = engine.cache().load(*c.cache);
      if (loaded) err << "loaded " << loaded << " cached R~ entries from " << c.cache->string() << '\n';
    }
    int status = exit_code::kOk;
    switch (c.command) {
      case Command::kCompute: status = run_compute(c, engine, out, err); break;
      case Command::kInterval: status = run_interval(c, out, err); break;
      case Command::kSubwords: status = run_subwords(c, out, err); break;
      case Command::kVerify: status = run_verify(c, engine, out, err); break;
      case Command::kTable: status = run_table(c, engine, out, err); break;
      case Command::kConjecture: status = run_conjecture(c, engine, out, err); break;
    }
    if (c.cache) engine.cache().save(*c.cache);
    return status;
  } catch (const CapacityError& e) {
    err << "klr: " << e.what() << '\n';
    return exit_code::kCapacity;
  } catch (const std::invalid_argument& e) {
    // ParseError, RankMismatch and range errors are all usage errors.
    err << "klr: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::out_of_range& e) {
    err << "klr: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "klr: internal error: " << e.what() << '\n';
    return exit_code::kMismatch;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (auto* code = std::get_if<int>(&parsed)) return *code;
  auto& config = std::get<RunConfig>(parsed);
  if (!config.cache) {
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) config.cache = env;
  }
  return run(config, out, err);
}

}  // namespace klr::cli
