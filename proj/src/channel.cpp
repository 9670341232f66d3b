#include "pearson/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "pearson/detection.hpp"

namespace pearson {

void ChannelParams::validate() const {
  if (!(gain_a > 0) || !std::isfinite(gain_a)) {
    throw std::invalid_argument("gain must be positive and finite");
  }
  if (!(noise_sigma >= 0) || !std::isfinite(noise_sigma)) {
    throw std::invalid_argument("noise sigma must be nonnegative and finite");
  }
  if (!std::isfinite(offset_b)) {
    throw std::invalid_argument("offset must be finite");
  }
}

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer on seed + (trial+1) * golden gamma: distinct trials
  // land in well-separated engine seeds regardless of the user seed.
  std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(derive_trial_seed(seed, trial));
}

std::pair<double, double> gaussian_pair(std::mt19937_64& eng) {
  // 53-bit uniforms (k + 0.5) * 2^-53 lie strictly inside (0, 1), keeping
  // log and the trig arguments finite.
  const double u1 =
      (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
  const double u2 =
      (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::acos(-1.0) * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::size_t draw_index(std::mt19937_64& eng, std::size_t size) {
  if (size == 0) throw std::invalid_argument("draw from empty range");
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(eng()) * size;
  return static_cast<std::size_t>(wide >> 64);
}

ReceivedVector transmit(const Word& x, const ChannelParams& p,
                        std::mt19937_64& eng) {
  p.validate();
  ReceivedVector r(x.n());
  double spare = 0;
  bool have_spare = false;
  for (std::size_t i = 0; i < x.n(); ++i) {
    double noisy = static_cast<double>(x[i]);
    if (p.noise_sigma > 0) {
      double z;
      if (have_spare) {
        z = spare;
        have_spare = false;
      } else {
        const auto [z0, z1] = gaussian_pair(eng);
        z = z0;
        spare = z1;
        have_spare = true;
      }
      noisy += p.noise_sigma * z;
    }
    r[i] = p.gain_a * noisy + p.offset_b;
  }
  return r;
}

namespace {

struct Tally {
  std::uint64_t errors_pearson = 0;
  std::uint64_t errors_euclidean = 0;
  std::uint64_t ties_pearson = 0;
};

void run_range(const Codebook& cb, const Detector& det,
               const ChannelParams& p, DetectorSet detectors,
               std::uint64_t begin, std::uint64_t end, Tally& tally,
               std::vector<std::uint32_t>* pearson_decisions) {
  for (std::uint64_t t = begin; t < end; ++t) {
    auto eng = trial_engine(p.seed, t);
    const std::size_t sent = draw_index(eng, cb.size());
    const ReceivedVector r = transmit(cb[sent], p, eng);
    if (detectors.pearson) {
      const Detector::Scored s = det.min_pearson_index(r);
      if (s.index != sent) ++tally.errors_pearson;
      if (s.tie) ++tally.ties_pearson;
      if (pearson_decisions) (*pearson_decisions)[t] = s.index;
    }
    if (detectors.euclidean) {
      const Detector::Scored s = det.min_euclidean_index(r);
      if (s.index != sent) ++tally.errors_euclidean;
    }
  }
}

}  // namespace

TrialStats run_experiment(const Codebook& cb, const ChannelParams& p,
                          std::uint64_t trials, DetectorSet detectors,
                          unsigned workers,
                          std::vector<std::uint32_t>* pearson_decisions) {
  p.validate();
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (cb.empty()) throw std::invalid_argument("empty codebook");
  if (!detectors.pearson && !detectors.euclidean) {
    throw std::invalid_argument("no detector requested");
  }
  if (detectors.pearson) {
    if (auto violation = verify_pearson(cb)) {
      throw NotPearsonError(*violation);
    }
  }

  const Detector det(cb);
  if (pearson_decisions) {
    pearson_decisions->assign(static_cast<std::size_t>(trials), 0);
  }

  if (workers < 1) workers = 1;
  if (workers > trials) workers = static_cast<unsigned>(trials);

  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    run_range(cb, det, p, detectors, 0, trials, tallies[0],
              pearson_decisions);
  } else {
    // Trial t is fully determined by (seed, t), so any partition of the
    // trial range yields identical merged statistics.
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = trials / workers;
    const std::uint64_t rest = trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < rest ? 1 : 0);
      threads.emplace_back(run_range, std::cref(cb), std::cref(det),
                           std::cref(p), detectors, begin, end,
                           std::ref(tallies[w]), pearson_decisions);
      begin = end;
    }
    for (auto& th : threads) th.join();
  }

  Tally total;
  for (const Tally& t : tallies) {
    total.errors_pearson += t.errors_pearson;
    total.errors_euclidean += t.errors_euclidean;
    total.ties_pearson += t.ties_pearson;
  }

  TrialStats stats;
  stats.trials = trials;
  stats.word_errors_pearson = total.errors_pearson;
  stats.word_errors_euclidean = total.errors_euclidean;
  stats.ties_pearson = total.ties_pearson;
  const auto wer_ci = [&](std::uint64_t errors) {
    const double wer =
        static_cast<double>(errors) / static_cast<double>(trials);
    const double half =
        1.96 * std::sqrt(wer * (1.0 - wer) / static_cast<double>(trials));
    return std::make_pair(wer, half);
  };
  if (detectors.pearson) {
    std::tie(stats.wer_pearson, stats.wer_ci_pearson) =
        wer_ci(total.errors_pearson);
  }
  if (detectors.euclidean) {
    std::tie(stats.wer_euclidean, stats.wer_ci_euclidean) =
        wer_ci(total.errors_euclidean);
  }
  return stats;
}

}  // namespace pearson
