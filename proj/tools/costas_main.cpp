// Command-line frontend: experiment scans, theorem verification suites,
// and CSV/JSON report writers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "costas/experiments.hpp"
#include "costas/golomb.hpp"
#include "costas/welch.hpp"

using namespace costas;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr u64 kGolombPairGuard = 10'000'000;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void write_table(const Table& t, const std::string& path, const std::string& format) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    out = &file;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj;
      for (size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      arr.push_back(obj);
    }
    *out << arr.dump(2) << '\n';
  } else {
    for (size_t i = 0; i < t.header.size(); ++i)
      *out << t.header[i] << (i + 1 < t.header.size() ? ',' : '\n');
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i)
        *out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
  }
}

int run_diagonal(u64 p_max, const std::string& out, const std::string& format, int workers) {
  const auto rows = table1_scan(p_max, workers);
  Table t{{"p", "max_s", "fit", "err"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.p), std::to_string(r.max_s),
                      std::to_string(r.fit), std::to_string(r.err)});
  write_table(t, out, format);
  const auto stats = logfit_stats(rows);
  std::cerr << "diagonal: " << stats.total << " primes, " << stats.exact
            << " exact log fits, " << stats.within_one << " within +-1\n";
  return kExitOk;
}

int run_ratio(u64 p_min, u64 p_max, const std::string& out, const std::string& format,
              int workers) {
  const auto rows = ratio_scan(p_min, p_max, workers);
  Table t{{"p", "zero_count", "total", "ratio"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.p), std::to_string(r.zero_count),
                      std::to_string(r.total), fmt_double(r.ratio)});
  write_table(t, out, format);
  return kExitOk;
}

// Accepts "5" or "3..8".
bool parse_m_range(const std::string& spec, int& lo, int& hi) {
  const auto pos = spec.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoi(spec);
    } else {
      lo = std::stoi(spec.substr(0, pos));
      hi = std::stoi(spec.substr(pos + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 3 && hi >= lo && hi <= 12;
}

int run_parity2(const std::string& m_spec, const std::string& out,
                const std::string& format, bool force) {
  int lo = 0, hi = 0;
  if (!parse_m_range(m_spec, lo, hi)) {
    std::cerr << "parity2: bad --m value '" << m_spec << "' (expect e.g. 5 or 3..8)\n";
    return kExitUsage;
  }
  if (hi > 8 && !force) {
    std::cerr << "parity2: m > 8 enumerates " << euler_phi((u64{1} << hi) - 1)
              << "^2/" << hi << " permutations; rerun with --force\n";
    return kExitGuard;
  }
  for (int m = lo; m <= hi; ++m) {
    const auto rows = table2_scan(m);
    Table t{{"ee", "eo", "count"}, {}};
    for (const auto& r : rows)
      t.rows.push_back({std::to_string(r.ee), std::to_string(r.eo), std::to_string(r.count)});
    std::string path;
    if (!out.empty())
      path = (lo == hi) ? out : out + "/table2_m" + std::to_string(m) + ".csv";
    else if (lo != hi)
      std::cout << "# m=" << m << '\n';
    write_table(t, path, format);
    std::cerr << "parity2: m=" << m << " has " << rows.size() << " parity classes\n";
  }
  return kExitOk;
}

int run_germain(std::vector<u64> primes, u64 p_max, bool g2, bool force,
                const std::string& out, const std::string& format) {
  if (primes.empty()) primes = sophie_germain_primes(5, p_max);
  for (u64 p : primes) {
    if (!is_sophie_germain(p)) {
      std::cerr << "germain: " << p << " is not a Sophie Germain prime\n";
      return kExitUsage;
    }
    if (g2 && golomb_scan_pair_count(p) > kGolombPairGuard && !force) {
      const auto ratio = complexity_ratio(p);
      std::cerr << "germain: G2 scan at p=" << p << " covers "
                << golomb_scan_pair_count(p) << " pairs (cost ratio "
                << ratio.num << "/" << ratio.den << " ~ " << fmt_double(ratio.value())
                << " vs W1); rerun with --force\n";
      return kExitGuard;
    }
  }
  Table t{{"p", "w1_max", "g2_max"}, {}};
  std::vector<GermainRow> rows;
  for (u64 p : primes) {
    rows.push_back(table3_scan(p, g2));
    const auto& r = rows.back();
    t.rows.push_back({std::to_string(r.p), std::to_string(r.w1_max),
                      r.g2_max ? std::to_string(*r.g2_max) : std::string{}});
  }
  write_table(t, out, format);
  const auto stats = germain_logfit_check(rows);
  std::cerr << "germain: " << stats.total << " primes, " << stats.exact
            << " exact log fits, " << stats.within_one << " within +-1\n";
  return kExitOk;
}

int run_estimate(u64 p) {
  const auto r = complexity_ratio(p);
  std::cout << r.num << "/" << r.den << " ~ " << fmt_double(r.value()) << '\n';
  return kExitOk;
}

int verify_costas_suite(u64 p_max, int m_max) {
  for (u64 p : primes_upto(p_max)) {
    for (u64 g : primitive_roots(p))
      for (u64 c = 0; c + 1 < p; ++c) {
        const WelchSpec spec{p, g, c};
        if (!is_costas(welch_generate(spec))) {
          std::cerr << "violation: W1(p=" << p << ", g=" << g << ", c=" << c
                    << ") is not Costas\n";
          return kExitViolation;
        }
      }
    if (p < 5) continue;
    const auto F = prime_cyclic_field(p);
    for (u64 s : units_mod(p - 1))
      for (u64 t : units_mod(p - 1))
        if (!is_costas(golomb_generate(F, {s, t}))) {
          std::cerr << "violation: G2(q=" << p << ", s=" << s << ", t=" << t
                    << ") is not Costas\n";
          return kExitViolation;
        }
  }
  for (int m = 2; m <= m_max; ++m) {
    const auto F = to_cyclic_field(binary_field(m));
    for (u64 s : units_mod(F.n()))
      for (u64 t : units_mod(F.n()))
        if (!is_costas(golomb_generate(F, {s, t}))) {
          std::cerr << "violation: G2(q=2^" << m << ", s=" << s << ", t=" << t
                    << ") is not Costas\n";
          return kExitViolation;
        }
  }
  std::cerr << "costas: all constructions verified (p <= " << p_max
            << ", 2^m <= 2^" << m_max << ")\n";
  return kExitOk;
}

int verify_parity_suite(u64 p_max) {
  for (u64 p : primes_upto(p_max)) {
    if (p < 5) continue;
    const auto F = prime_cyclic_field(p);
    for (u64 s : units_mod(p - 1))
      for (u64 t : units_mod(p - 1)) {
        const auto q = parity_populations(golomb_generate(F, {s, t}));
        const bool ok = (p % 4 == 1)
                            ? (q.ee == (p - 5) / 4 && q.eo == (p - 1) / 4 &&
                               q.oe == (p - 1) / 4 && q.oo == (p - 1) / 4)
                            : (q.oo == (p + 1) / 4 && q.ee == (p - 3) / 4 &&
                               q.eo == (p - 3) / 4 && q.oe == (p - 3) / 4);
        if (!ok) {
          std::cerr << "violation: G2 parity at p=" << p << ", s=" << s << ", t=" << t << '\n';
          return kExitViolation;
        }
      }
    for (u64 g : primitive_roots(p)) {
      const auto q = parity_populations(welch_generate({p, g, 0}));
      bool ok = true;
      if (p % 4 == 1) {
        ok = q.ee == q.oo && q.eo == q.oe && q.ee == q.eo;
      } else {
        const i64 diff = static_cast<i64>(q.eo) - static_cast<i64>(q.ee);
        const i64 h = static_cast<i64>(class_number(p));
        ok = (p % 8 == 3) ? diff == -3 * h : diff == h;
      }
      if (!ok) {
        std::cerr << "violation: W1 parity at p=" << p << ", g=" << g << '\n';
        return kExitViolation;
      }
    }
  }
  std::cerr << "parity: both parity theorems verified for 5 <= p <= " << p_max << '\n';
  return kExitOk;
}

int verify_u_axis_suite(u64 p_max) {
  for (u64 p : primes_upto(p_max)) {
    if (p < 7) continue;
    const auto result = verify_w1_u_axis_theorem(p);
    if (!result.holds) {
      std::cerr << "violation: " << result.details << '\n';
      return kExitViolation;
    }
  }
  std::cerr << "u-axis: theorem verified for 7 <= p <= " << p_max << '\n';
  return kExitOk;
}

int verify_gw_suite(u64 p_max) {
  for (u64 p : primes_upto(p_max)) {
    if (p < 7) continue;
    const auto result = verify_thm_gw(p);
    if (!result.holds) {
      std::cerr << "violation: " << result.details << '\n';
      return kExitViolation;
    }
  }
  std::cerr << "gw: theorem verified for 7 <= p <= " << p_max << '\n';
  return kExitOk;
}

int verify_conjectures_suite(u64 p_max) {
  bool violated = false;
  for (u64 p : primes_upto(p_max)) {
    if (p < 7) continue;
    const auto rep = verify_conjectures(p);
    auto name = [](ConjectureStatus s) {
      return s == ConjectureStatus::holds     ? "holds"
             : s == ConjectureStatus::skipped ? "skipped"
                                              : "VIOLATED";
    };
    std::cerr << "p=" << p << ": w1-full-vs-origin " << name(rep.w1_full_vs_origin)
              << ", g2-full-vs-shared-b " << name(rep.g2_full_vs_shared_b)
              << ", w1-vs-g2-plus-1 " << name(rep.w1_vs_g2_plus_one) << '\n';
    if (rep.w1_full_vs_origin == ConjectureStatus::violated ||
        rep.g2_full_vs_shared_b == ConjectureStatus::violated ||
        rep.w1_vs_g2_plus_one == ConjectureStatus::violated) {
      std::cerr << "violation: " << rep.details << '\n';
      violated = true;
    }
  }
  return violated ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Costas permutation experiments: Welch and Golomb constructions,\n"
               "cross-correlation scans, parity populations, diagonal statistics"};
  app.require_subcommand(1);

  std::string out, format = "csv";
  int workers = 1;
  bool g2 = false, force = false;
  u64 p_max = 0, p_min = 3, prime = 0;
  std::vector<u64> primes;
  std::string m_spec;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "Output path (default: stdout)");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* diagonal = app.add_subcommand("diagonal", "Diagonal fixed-point maxima per prime");
  diagonal->add_option("--p-max", p_max, "Largest prime to scan")
      ->required()
      ->check(CLI::Range(u64{2}, u64{100000}));
  diagonal->add_option("--workers", workers)->check(CLI::PositiveNumber);
  add_output(diagonal);

  auto* ratio = app.add_subcommand("ratio", "Fixed-point-free ratio per prime");
  ratio->add_option("--p-min", p_min);
  ratio->add_option("--p-max", p_max)->required()->check(CLI::Range(u64{3}, u64{100000}));
  ratio->add_option("--workers", workers)->check(CLI::PositiveNumber);
  add_output(ratio);

  auto* parity2 = app.add_subcommand("parity2", "Parity classes of G2 permutations over GF(2^m)");
  parity2->add_option("--m", m_spec, "Degree or range, e.g. 5 or 3..8")->required();
  parity2->add_flag("--force", force, "Allow m > 8");
  add_output(parity2);

  auto* germain = app.add_subcommand("germain", "Pair-scan maxima at Sophie Germain primes");
  germain->add_option("--primes", primes, "Comma-separated list")->delimiter(',');
  germain->add_option("--p-max", p_max, "Scan all Germain primes up to this bound");
  germain->add_flag("--g2", g2, "Also run the G2 pair scan");
  germain->add_flag("--force", force, "Override the G2 cost guard");
  add_output(germain);

  auto* estimate = app.add_subcommand("estimate", "G2/W1 scan cost ratio for a prime");
  estimate->add_option("prime", prime)->required();

  auto* verify = app.add_subcommand("verify", "Theorem and property suites");
  verify->require_subcommand(1);
  u64 vmax_costas = 200, vmax_parity = 100, vmax_uaxis = 100, vmax_gw = 60, vmax_con = 40;
  int m_max = 8;
  auto* v_costas = verify->add_subcommand("costas", "All constructions satisfy the Costas property");
  v_costas->add_option("--p-max", vmax_costas);
  v_costas->add_option("--m-max", m_max)->check(CLI::Range(2, 12));
  auto* v_parity = verify->add_subcommand("parity", "Parity-population theorems");
  v_parity->add_option("--p-max", vmax_parity);
  auto* v_uaxis = verify->add_subcommand("u-axis", "W1 u-axis maximum equals (p-1)/q");
  v_uaxis->add_option("--p-max", vmax_uaxis);
  auto* v_gw = verify->add_subcommand("gw", "W1 vs constrained G2 maxima at the origin");
  v_gw->add_option("--p-max", vmax_gw);
  auto* v_con = verify->add_subcommand("conjectures", "Full-scan conjecture checks");
  v_con->add_option("--p-max", vmax_con);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*diagonal) return run_diagonal(p_max, out, format, workers);
    if (*ratio) return run_ratio(p_min, p_max, out, format, workers);
    if (*parity2) return run_parity2(m_spec, out, format, force);
    if (*germain) {
      if (primes.empty() && p_max == 0) {
        std::cerr << "germain: need --primes or --p-max\n";
        return kExitUsage;
      }
      return run_germain(primes, p_max, g2, force, out, format);
    }
    if (*estimate) return run_estimate(prime);
    if (*verify) {
      if (*v_costas) return verify_costas_suite(vmax_costas, m_max);
      if (*v_parity) return verify_parity_suite(vmax_parity);
      if (*v_uaxis) return verify_u_axis_suite(vmax_uaxis);
      if (*v_gw) return verify_gw_suite(vmax_gw);
      if (*v_con) return verify_conjectures_suite(vmax_con);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
