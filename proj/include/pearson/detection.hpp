#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pearson/codebook.hpp"
#include "pearson/errors.hpp"
#include "pearson/word.hpp"

namespace pearson {

double vector_mean(std::span<const double> v);  // empty vector: domain error

// Square root of the UN-normalized sum of squared deviations (no 1/n).
double vector_sigma(std::span<const double> v);

// rho in [-1, 1]; rho = 1 exactly when y = c1 + c2*x with c2 > 0. Both
// vectors need sigma > 0 (domain error otherwise) and equal lengths.
double pearson_correlation(std::span<const double> x,
                           std::span<const double> y);

// delta = 1 - rho in [0, 2]; invariant under positive-scale affine maps of
// either argument. Same preconditions as pearson_correlation.
double pearson_distance(std::span<const double> x, std::span<const double> y);

// Two metric values within this absolute tolerance count as tied.
inline constexpr double kTieTolerance = 1e-12;

struct DetectionResult {
  Word decided;           // a member of the codebook searched
  double distance = 0.0;  // Pearson delta, or the Euclidean norm for the baseline
  bool tie = false;       // >= 2 codewords within kTieTolerance of the minimum
};

// Full-scan detectors over a fixed codebook. Per-codeword deviation vectors
// and sigmas are precomputed once; the codebook must outlive the detector.
// Detection calls are pure and safe to run concurrently.
class Detector {
 public:
  // cb must be nonempty. Constant codewords are tolerated here and rejected
  // only by min_pearson, so the Euclidean baseline still works on arbitrary
  // books.
  explicit Detector(const Codebook& cb);

  const Codebook& codebook() const noexcept { return *cb_; }

  // argmin of delta(r, x) over the codebook. Ties go to the lexicographically
  // smallest codeword and are flagged. sigma(r) = 0 is DegenerateInputError
  // (the distance is undefined), not a decision; a constant codeword in cb is
  // std::invalid_argument.
  DetectionResult min_pearson(std::span<const double> r) const;

  // Baseline: argmin of sum (r_i - x_i)^2, same tie rule applied to the
  // Euclidean norm. No constraint on constant codewords.
  DetectionResult min_euclidean(std::span<const double> r) const;

  // Index-returning variants for the simulation inner loop.
  struct Scored {
    std::uint32_t index = 0;
    double metric = 0.0;
    bool tie = false;
  };
  Scored min_pearson_index(std::span<const double> r) const;
  Scored min_euclidean_index(std::span<const double> r) const;

 private:
  Scored scan(const std::vector<double>& metrics) const;

  const Codebook* cb_;
  std::size_t n_;
  // Row-major size x n: (x - mean(x)) / sigma(x), valid where sigma > 0.
  std::vector<double> unit_dev_;
  std::vector<double> symbols_;  // row-major size x n, symbols as doubles
  std::size_t constant_word_ = SIZE_MAX;  // first constant codeword, if any
};

// One-shot conveniences; build a Detector when calling in a loop.
DetectionResult detect_min_pearson(const ReceivedVector& r, const Codebook& cb);
DetectionResult detect_min_euclidean(const ReceivedVector& r,
                                     const Codebook& cb);

}  // namespace pearson
