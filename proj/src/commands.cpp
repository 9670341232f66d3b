#include "pearson/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearson/canonical.hpp"
#include "pearson/codebook.hpp"
#include "pearson/counting.hpp"
#include "pearson/errors.hpp"

namespace pearson {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace {

void metadata_line(std::ostream& out, const std::string& seed,
                   const std::string& rng) {
  out << "# " << kToolName << ' ' << kToolVersion << ", seed=" << seed
      << ", rng=" << rng << '\n';
}

struct CountRow {
  std::uint32_t q;
  std::uint32_t n;
  BigCount n1;
  BigCount n2;
  BigCount p;
  RedundancyReport red;
};

std::vector<CountRow> count_rows(const CountOptions& opt) {
  if (opt.qs.empty()) throw std::invalid_argument("no alphabet sizes given");
  for (std::uint32_t q : opt.qs) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  }
  if (opt.n_min < 2) throw std::invalid_argument("length must be at least 2");
  if (opt.n_max < opt.n_min) {
    throw std::invalid_argument("length range is empty");
  }
  std::vector<CountRow> rows;
  for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
    for (std::uint32_t q : opt.qs) {
      CountRow row{q,
                   n,
                   count_t_constrained(q, n, 1),
                   count_t_constrained(q, n, 2),
                   count_pearson_closed(q, n),
                   redundancy_report(q, n)};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void print_aligned(std::ostream& out,
                   const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
}

Codebook build_family(std::uint32_t q, std::uint32_t n, Family family,
                      const std::vector<Symbol>& refs, std::uint64_t budget) {
  if (family == Family::Pearson) {
    if (!refs.empty()) {
      throw std::invalid_argument(
          "reference symbols only apply to the tconstrained family");
    }
    return make_pearson_codebook(q, n, budget);
  }
  if (refs.empty()) {
    throw std::invalid_argument("tconstrained family needs --refs");
  }
  return make_t_constrained_codebook(q, n, refs, budget);
}

}  // namespace

int cmd_count(const CountOptions& opt, std::ostream& out) {
  const auto rows = count_rows(opt);
  if (opt.format == OutputFormat::Csv) {
    metadata_line(out, "n/a", "n/a");
    out << "q,n,N1,N2,P,r1,r2,rP,r0_approx\n";
    for (const auto& r : rows) {
      out << r.q << ',' << r.n << ',' << r.n1.str() << ',' << r.n2.str()
          << ',' << r.p.str() << ',' << format_real(r.red.r1) << ','
          << format_real(r.red.r2) << ',' << format_real(r.red.rP) << ','
          << format_real(r.red.r0_approx) << '\n';
    }
  } else {
    std::vector<std::vector<std::string>> table;
    table.push_back({"n", "q", "N2", "P", "N1"});
    for (const auto& r : rows) {
      table.push_back({std::to_string(r.n), std::to_string(r.q), r.n2.str(),
                       r.p.str(), r.n1.str()});
    }
    print_aligned(out, table);
  }
  return kExitOk;
}

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out,
                  std::ostream& err) {
  if (opt.n < 2) throw std::invalid_argument("length must be at least 2");
  const Codebook cb =
      build_family(opt.q, opt.n, opt.family, opt.refs, opt.budget);
  save_codebook(cb, out);
  err << cb.size() << " words\n";
  return kExitOk;
}

int cmd_check(const CheckOptions& opt, std::ostream& out) {
  const Codebook cb = load_codebook_file(opt.input_path);
  if (const auto violation = verify_pearson(cb)) {
    out << violation->to_string() << '\n';
    return kExitVerificationFailure;
  }
  out << "OK: " << cb.size() << " words, q=" << cb.q() << ", n=" << cb.n()
      << '\n';
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  if (opt.n < 2) throw std::invalid_argument("length must be at least 2");
  const Codebook cb =
      build_family(opt.q, opt.n, opt.family, opt.refs, opt.budget);
  const TrialStats stats = run_experiment(cb, opt.channel, opt.trials);

  metadata_line(out, std::to_string(opt.channel.seed), kRngDescription);
  out << "detector,q,n,a,b,sigma,trials,errors,wer,ci\n";
  const auto row = [&](const char* name, std::uint64_t errors, double wer,
                       double ci) {
    out << name << ',' << opt.q << ',' << opt.n << ','
        << format_real(opt.channel.gain_a) << ','
        << format_real(opt.channel.offset_b) << ','
        << format_real(opt.channel.noise_sigma) << ',' << opt.trials << ','
        << errors << ',' << format_real(wer) << ',' << format_real(ci)
        << '\n';
  };
  row("pearson", stats.word_errors_pearson, stats.wer_pearson,
      stats.wer_ci_pearson);
  row("euclidean", stats.word_errors_euclidean, stats.wer_euclidean,
      stats.wer_ci_euclidean);
  return kExitOk;
}

int cmd_redundancy(const RedundancyOptions& opt, std::ostream& out) {
  if (opt.q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (opt.n_min < 2) throw std::invalid_argument("length must be at least 2");
  if (opt.n_max < opt.n_min) {
    throw std::invalid_argument("length range is empty");
  }
  std::vector<RedundancyReport> reports;
  for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
    reports.push_back(redundancy_report(opt.q, n));
  }
  if (opt.format == OutputFormat::Csv) {
    metadata_line(out, "n/a", "n/a");
    out << "n,r1,r2,rP,r0_approx\n";
    for (const auto& r : reports) {
      out << r.n << ',' << format_real(r.r1) << ',' << format_real(r.r2)
          << ',' << format_real(r.rP) << ',' << format_real(r.r0_approx)
          << '\n';
    }
  } else {
    std::vector<std::vector<std::string>> table;
    table.push_back({"n", "r1", "r2", "rP", "r0_approx"});
    for (const auto& r : reports) {
      table.push_back({std::to_string(r.n), format_real(r.r1),
                       format_real(r.r2), format_real(r.rP),
                       r.r0_applicable ? format_real(r.r0_approx) : "n/a"});
    }
    print_aligned(out, table);
  }
  return kExitOk;
}

namespace {

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "human") return OutputFormat::Human;
  throw std::invalid_argument("unknown format " + s);
}

Family parse_family(const std::string& s) {
  if (s == "pearson") return Family::Pearson;
  if (s == "tconstrained") return Family::TConstrained;
  throw std::invalid_argument("unknown family " + s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pearson codes: counting, enumeration, verification, and "
               "gain/offset channel simulation"};
  app.require_subcommand(1);

  // count
  std::vector<std::uint32_t> count_qs;
  std::uint32_t count_n = 0;
  std::uint32_t count_n_max = 0;
  std::string count_format = "csv";
  std::string count_output;
  auto* count = app.add_subcommand(
      "count", "Tabulate N1, N2, P and redundancies over (q, n)");
  count->add_option("--q", count_qs, "alphabet sizes (comma separated)")
      ->required()
      ->delimiter(',');
  count->add_option("--n", count_n, "smallest word length")->required();
  auto* count_n_max_opt = count->add_option("--n-max", count_n_max,
                                            "largest word length (default --n)");
  count->add_option("--format", count_format, "csv or human")
      ->check(CLI::IsMember({"csv", "human"}));
  count->add_option("--output", count_output, "write to file instead of stdout");

  // enumerate
  std::uint32_t enum_q = 0;
  std::uint32_t enum_n = 0;
  std::string enum_family = "pearson";
  std::vector<Symbol> enum_refs;
  std::uint64_t enum_budget = kDefaultEnumerationBudget;
  std::string enum_output;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Write a codebook in the text format to stdout or --output");
  enumerate->add_option("--q", enum_q, "alphabet size")->required();
  enumerate->add_option("--n", enum_n, "word length")->required();
  enumerate->add_option("--family", enum_family, "pearson or tconstrained")
      ->check(CLI::IsMember({"pearson", "tconstrained"}));
  enumerate->add_option("--refs", enum_refs,
                        "reference symbols for tconstrained (comma separated)")
      ->delimiter(',');
  enumerate->add_option("--budget", enum_budget,
                        "maximum candidate visits (q^n guard)");
  enumerate->add_option("--output", enum_output,
                        "write to file instead of stdout");

  // check
  std::string check_input;
  auto* check = app.add_subcommand(
      "check", "Verify that a codebook file is a Pearson code");
  check->add_option("file", check_input, "codebook file")->required();

  // simulate
  SimulateOptions sim;
  std::string sim_family = "pearson";
  std::vector<Symbol> sim_refs;
  std::string sim_output;
  auto* simulate = app.add_subcommand(
      "simulate",
      "Monte Carlo word error rates for the Pearson and Euclidean detectors");
  simulate->add_option("--q", sim.q, "alphabet size")->required();
  simulate->add_option("--n", sim.n, "word length")->required();
  simulate->add_option("--family", sim_family, "pearson or tconstrained")
      ->check(CLI::IsMember({"pearson", "tconstrained"}));
  simulate->add_option("--refs", sim_refs,
                       "reference symbols for tconstrained (comma separated)")
      ->delimiter(',');
  simulate->add_option("--gain", sim.channel.gain_a, "channel gain a > 0");
  simulate->add_option("--offset", sim.channel.offset_b, "channel offset b");
  simulate->add_option("--sigma", sim.channel.noise_sigma,
                       "noise standard deviation");
  simulate->add_option("--trials", sim.trials, "number of Monte Carlo trials");
  simulate->add_option("--seed", sim.channel.seed, "RNG seed");
  simulate->add_option("--budget", sim.budget,
                       "maximum candidate visits (q^n guard)");
  simulate->add_option("--output", sim_output,
                       "write to file instead of stdout");

  // redundancy
  RedundancyOptions red;
  std::string red_format = "csv";
  std::string red_output;
  auto* redundancy = app.add_subcommand(
      "redundancy", "Redundancy columns r1, r2, rP, r0_approx versus n");
  redundancy->add_option("--q", red.q, "alphabet size")->required();
  redundancy->add_option("--n", red.n_min, "smallest word length")->required();
  auto* red_n_max_opt = redundancy->add_option(
      "--n-max", red.n_max, "largest word length (default --n)");
  redundancy->add_option("--format", red_format, "csv or human")
      ->check(CLI::IsMember({"csv", "human"}));
  redundancy->add_option("--output", red_output,
                         "write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsageError;
  }

  // --output redirects the data stream of the chosen subcommand.
  const auto with_output = [&](const std::string& path,
                               auto&& fn) -> int {
    if (path.empty()) return fn(out);
    std::ofstream file(path);
    if (!file) {
      err << "cannot write " << path << '\n';
      return kExitUsageError;
    }
    const int rc = fn(file);
    file.flush();
    if (!file) {
      err << "write failed for " << path << '\n';
      return kExitResourceError;
    }
    return rc;
  };

  try {
    if (count->parsed()) {
      CountOptions opt;
      opt.qs = count_qs;
      opt.n_min = count_n;
      opt.n_max = count_n_max_opt->count() ? count_n_max : count_n;
      opt.format = parse_format(count_format);
      return with_output(count_output,
                         [&](std::ostream& o) { return cmd_count(opt, o); });
    }
    if (enumerate->parsed()) {
      EnumerateOptions opt;
      opt.q = enum_q;
      opt.n = enum_n;
      opt.family = parse_family(enum_family);
      opt.refs = enum_refs;
      opt.budget = enum_budget;
      return with_output(enum_output, [&](std::ostream& o) {
        return cmd_enumerate(opt, o, err);
      });
    }
    if (check->parsed()) {
      return cmd_check(CheckOptions{check_input}, out);
    }
    if (simulate->parsed()) {
      sim.family = parse_family(sim_family);
      sim.refs = sim_refs;
      return with_output(sim_output, [&](std::ostream& o) {
        return cmd_simulate(sim, o);
      });
    }
    if (redundancy->parsed()) {
      if (!red_n_max_opt->count()) red.n_max = red.n_min;
      red.format = parse_format(red_format);
      return with_output(red_output, [&](std::ostream& o) {
        return cmd_redundancy(red, o);
      });
    }
    err << "no subcommand given\n";
    return kExitUsageError;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceError;
  } catch (const NotPearsonError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
}

}  // namespace pearson
