#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/factor.hpp"
#include "serialize.hpp"

namespace erdos_straus::cli {

namespace {

struct Options {
  std::string out_path;

  std::string solve_n;
  std::uint64_t k_max = 3;
  bool json = false;
  bool csv = false;

  std::string oracle_n;

  std::uint64_t cover_limit = 100'000;
  std::uint64_t lcm_bound = kDefaultLcmBound;

  std::uint64_t scan_limit = 1'000'000;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::string> verify_args;
};

int do_solve(const Options& o, std::ostream& out) {
  const BigInt n = parse_integer(o.solve_n);
  const Solution s = solve_any(n, o.k_max);
  if (o.json) {
    out << to_json(s).dump() << '\n';
  } else if (o.csv) {
    write_solution_csv(out, s);
  } else {
    out << "4/" << s.n.get_str() << " = 1/" << s.triple.x().get_str() << " + 1/"
        << s.triple.y().get_str() << " + 1/" << s.triple.z().get_str() << "  ["
        << to_string(s.strategy);
    if (s.family) out << ' ' << s.family->to_string();
    out << "]\n";
  }
  return kSuccess;
}

int do_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const BigInt n = parse_integer(o.oracle_n);
  if (n < 1) throw DomainError("oracle: n must be positive");
  const auto triples = enumerate_all(n);
  std::optional<TypeCounts> counts;
  if (n > 2 && is_prime(n)) {
    TypeCounts c;
    for (const auto& t : triples) {
      (classify(n, t) == SolutionKind::TypeI ? c.type_i : c.type_ii) += 1;
    }
    counts = c;
  }
  if (o.json) {
    out << oracle_to_json(n, triples, counts).dump() << '\n';
  } else if (o.csv) {
    out << "n,x,y,z\n";
    for (const auto& t : triples) {
      out << n.get_str() << ',' << t.x().get_str() << ',' << t.y().get_str() << ','
          << t.z().get_str() << '\n';
    }
  } else {
    out << triples.size() << " decomposition(s) of 4/" << n.get_str() << '\n';
    for (const auto& t : triples) out << "  " << t << '\n';
    if (counts) out << "Type I: " << counts->type_i << ", Type II: " << counts->type_ii << '\n';
  }
  if (!triples.empty()) return kSuccess;
  if (counts) {
    err << "ALERT: no decomposition of 4/" << n.get_str() << " exists\n";
    return kCounterexample;
  }
  return kNegative;
}

int do_families(const Options& o, std::ostream& out) {
  const auto params = enumerate_params(o.k_max);
  if (o.json) {
    json list = json::array();
    for (const auto& f : params) {
      json entry = to_json(f);
      const auto cls = residue_class(f);
      entry["modulus"] = cls.modulus.get_str();
      entry["residue"] = cls.residue.get_str();
      list.push_back(std::move(entry));
    }
    out << json{{"k_max", o.k_max}, {"families", std::move(list)}}.dump() << '\n';
  } else if (o.csv) {
    out << "kind,k,l,modulus,residue\n";
    for (const auto& f : params) {
      const auto cls = residue_class(f);
      out << to_string(f.kind()) << ',' << f.k() << ',' << f.l() << ','
          << cls.modulus.get_str() << ',' << cls.residue.get_str() << '\n';
    }
  } else {
    for (const auto& f : params) {
      out << f.to_string() << ": p ≡ " << residue_class(f).to_string() << '\n';
    }
  }
  return kSuccess;
}

int do_cover(const Options& o, std::ostream& out) {
  const auto report = analyze_coverage(o.k_max, o.cover_limit, o.lcm_bound);
  if (o.json) {
    out << to_json(report).dump() << '\n';
    return kSuccess;
  }
  out << "k_max: " << report.k_max << '\n'
      << "distinct classes: " << report.classes.size() << '\n'
      << "lcm: " << report.lcm.get_str() << '\n'
      << "uncovered primes ≡ 1 (mod 4) up to " << report.scan_limit << ": "
      << report.uncovered_primes.size() << '\n';
  constexpr std::size_t kShown = 50;
  for (std::size_t i = 0; i < report.uncovered_primes.size() && i < kShown; ++i) {
    out << (i == 0 ? "  " : ", ") << report.uncovered_primes[i];
  }
  if (!report.uncovered_primes.empty()) {
    if (report.uncovered_primes.size() > kShown) out << ", ...";
    out << '\n';
  }
  if (report.density_method == DensityMethod::Exact) {
    out << "witness: "
        << (report.witness ? report.witness->to_string() : std::string("none (classes cover)"))
        << '\n';
  } else {
    out << "witness: not searched (lcm above bound " << report.lcm_bound << ")\n";
  }
  out << "density (" << to_string(report.density_method) << "): " << report.density << '\n';
  return kSuccess;
}

int do_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto summary = scan({o.scan_limit, o.k_max, o.workers});
  if (o.json) {
    out << to_json(summary).dump() << '\n';
  } else {
    out << "primes checked: " << summary.primes_checked << " (limit " << summary.limit
        << ", k_max " << summary.k_max << ")\n";
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
      out << "  " << to_string(static_cast<Strategy>(i)) << ": " << summary.by_strategy[i]
          << '\n';
    }
    out << "alarms: " << summary.alarms.size() << '\n'
        << "failures: " << summary.failures.size() << '\n';
  }
  for (auto p : summary.alarms) err << "ALERT: no decomposition of 4/" << p << '\n';
  for (const auto& f : summary.failures) err << "failure: " << f << '\n';
  if (!summary.alarms.empty()) return kCounterexample;
  if (!summary.failures.empty()) return kNegative;
  return kSuccess;
}

int do_verify(const Options& o, std::ostream& out) {
  const BigInt n = parse_integer(o.verify_args.at(0));
  if (n < 1) throw DomainError("verify: n must be positive");
  const EsTriple t(parse_integer(o.verify_args.at(1)), parse_integer(o.verify_args.at(2)),
                   parse_integer(o.verify_args.at(3)));
  const bool ok = verify_triple(n, t);
  out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kSuccess : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Erdős–Straus decompositions 4/p = 1/x + 1/y + 1/z", "erdos-straus"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--out", o.out_path, "Write results to this file instead of stdout");

  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* c = sub->add_flag("--csv", o.csv, "CSV output");
    j->excludes(c);
  };

  auto* solve = app.add_subcommand("solve", "Find one decomposition of 4/p for a prime p");
  solve->add_option("p", o.solve_n, "Prime to decompose")->required();
  solve->add_option("--kmax", o.k_max, "Largest family parameter k");
  add_format(solve);

  auto* oracle = app.add_subcommand("oracle", "List every decomposition of 4/n");
  oracle->add_option("n", o.oracle_n, "Positive integer")->required();
  add_format(oracle);

  auto* families = app.add_subcommand("families", "List family parameters and residue classes");
  families->add_option("--kmax", o.k_max, "Largest family parameter k");
  add_format(families);

  auto* cover = app.add_subcommand("cover", "Measure how the family classes cover p ≡ 1 (mod 4)");
  cover->add_option("--kmax", o.k_max, "Largest family parameter k");
  cover->add_option("--limit", o.cover_limit, "Sieve primes up to this bound")
      ->check(CLI::Range(std::uint64_t{5}, std::uint64_t{1} << 40));
  cover->add_option("--lcm-bound", o.lcm_bound, "Largest lcm for exact residue analysis")
      ->check(CLI::PositiveNumber);
  cover->add_flag("--json", o.json, "JSON output");

  auto* scan_cmd = app.add_subcommand("scan", "Solve and verify every prime up to a bound");
  scan_cmd->add_option("--limit", o.scan_limit, "Largest prime to check");
  scan_cmd->add_option("--kmax", o.k_max, "Largest family parameter k");
  scan_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  scan_cmd->add_flag("--json", o.json, "JSON summary");

  auto* verify = app.add_subcommand("verify", "Check 4/n = 1/x + 1/y + 1/z exactly");
  verify->add_option("values", o.verify_args, "n x y z")->required()->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kSuccess : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (*solve) return do_solve(o, *sink);
    if (*oracle) return do_oracle(o, *sink, err);
    if (*families) return do_families(o, *sink);
    if (*cover) return do_cover(o, *sink);
    if (*scan_cmd) return do_scan(o, *sink, err);
    if (*verify) return do_verify(o, *sink);
  } catch (const CounterexampleAlert& e) {
    err << "ALERT: " << e.what() << '\n';
    return kCounterexample;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"erdos-straus"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace erdos_straus::cli
