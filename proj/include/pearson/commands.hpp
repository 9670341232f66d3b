#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pearson/channel.hpp"
#include "pearson/enumerate.hpp"
#include "pearson/word.hpp"

namespace pearson {

inline constexpr const char* kToolName = "pearsoncode";
inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { Csv, Human };
enum class Family { Pearson, TConstrained };

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;
inline constexpr int kExitResourceError = 3;

// count: one row per (q, n). CSV header q,n,N1,N2,P,r1,r2,rP,r0_approx with
// exact counts in full decimal; human format mirrors the n | q | N2 P N1
// table layout.
struct CountOptions {
  std::vector<std::uint32_t> qs;
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 2;
  OutputFormat format = OutputFormat::Csv;
};
int cmd_count(const CountOptions& opt, std::ostream& out);

// enumerate: writes the codebook text format to out and the word count to
// err.
struct EnumerateOptions {
  std::uint32_t q = 2;
  std::uint32_t n = 2;
  Family family = Family::Pearson;
  std::vector<Symbol> refs;  // required for TConstrained
  std::uint64_t budget = kDefaultEnumerationBudget;
};
int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out,
                  std::ostream& err);

// check: loads a codebook file, prints OK or the first violation; exit code
// 0 iff the codebook is a Pearson code.
struct CheckOptions {
  std::string input_path;
};
int cmd_check(const CheckOptions& opt, std::ostream& out);

// simulate: builds the requested codebook, runs both detectors over seeded
// trials, emits CSV detector,q,n,a,b,sigma,trials,errors,wer,ci.
struct SimulateOptions {
  std::uint32_t q = 2;
  std::uint32_t n = 2;
  Family family = Family::Pearson;
  std::vector<Symbol> refs;
  std::uint64_t budget = kDefaultEnumerationBudget;
  ChannelParams channel;
  std::uint64_t trials = 10'000;
};
int cmd_simulate(const SimulateOptions& opt, std::ostream& out);

// redundancy: one row per n for a fixed q. CSV header n,r1,r2,rP,r0_approx.
struct RedundancyOptions {
  std::uint32_t q = 2;
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 2;
  OutputFormat format = OutputFormat::Csv;
};
int cmd_redundancy(const RedundancyOptions& opt, std::ostream& out);

// Parses argv-style arguments (program name excluded), dispatches, and maps
// failures to exit codes: 0 success, 1 verification failure, 2 usage/parse
// error, 3 budget or resource error. --output redirects the report stream to
// a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Reals are printed with 6 significant digits; NaN prints as "nan".
std::string format_real(double v);

}  // namespace pearson
