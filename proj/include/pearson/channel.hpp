#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pearson/canonical.hpp"
#include "pearson/codebook.hpp"
#include "pearson/word.hpp"

namespace pearson {

// r = a(x + nu) + b: the noise enters before the gain, so exactly the same
// noisy signal x + nu is scaled and shifted under any (a, b). Gain and offset
// are constant across a codeword.
struct ChannelParams {
  double gain_a = 1.0;       // > 0
  double offset_b = 0.0;
  double noise_sigma = 0.0;  // >= 0, per-sample Gaussian standard deviation
  std::uint64_t seed = 1;

  void validate() const;  // std::invalid_argument on bad gain or sigma
};

// RNG identity, recorded in CSV metadata. Every trial t runs on its own
// mt19937_64 seeded with a splitmix64 hash of (seed, t): results cannot
// depend on how trials are split across workers, and the per-trial noise is
// the same no matter which (a, b) the channel applies afterwards.
inline constexpr const char* kRngDescription =
    "mt19937_64/splitmix64-per-trial/box-muller";

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial);
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

// Box-Muller on 53-bit uniforms (k + 0.5) * 2^-53, which never hit 0 or 1.
std::pair<double, double> gaussian_pair(std::mt19937_64& eng);

// Uniform draw via multiply-shift on one 64-bit output. size >= 1.
std::size_t draw_index(std::mt19937_64& eng, std::size_t size);

// a(x + nu) + b elementwise, nu_i iid N(0, sigma^2) from eng. sigma = 0
// consumes no randomness.
ReceivedVector transmit(const Word& x, const ChannelParams& p,
                        std::mt19937_64& eng);

struct DetectorSet {
  bool pearson = true;
  bool euclidean = true;
};

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t word_errors_pearson = 0;
  std::uint64_t word_errors_euclidean = 0;
  std::uint64_t ties_pearson = 0;
  double wer_pearson = 0.0;
  double wer_euclidean = 0.0;
  // 95% normal-approximation half-widths, 1.96 sqrt(wer(1-wer)/trials).
  double wer_ci_pearson = 0.0;
  double wer_ci_euclidean = 0.0;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

// Draws codewords uniformly, transmits, detects with each requested
// detector, counts whole-word errors. Bitwise deterministic given
// (cb, p, trials) and identical for every worker count. Requesting the
// Pearson detector on a non-Pearson codebook throws NotPearsonError carrying
// the violation witness. When pearson_decisions is non-null it is resized to
// trials and receives the decided codebook index of every trial.
TrialStats run_experiment(const Codebook& cb, const ChannelParams& p,
                          std::uint64_t trials, DetectorSet detectors = {},
                          unsigned workers = 1,
                          std::vector<std::uint32_t>* pearson_decisions = nullptr);

}  // namespace pearson
