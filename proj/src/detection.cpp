#include "pearson/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace pearson {

double vector_mean(std::span<const double> v) {
  if (v.empty()) throw std::domain_error("mean of empty vector");
  double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double vector_sigma(std::span<const double> v) {
  const double mean = vector_mean(v);
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss);
}

double pearson_correlation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::domain_error("correlation needs equal lengths");
  }
  const double mx = vector_mean(x);
  const double my = vector_mean(y);
  double sx = 0, sy = 0, dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sx += dx * dx;
    sy += dy * dy;
    dot += dx * dy;
  }
  if (sx == 0 || sy == 0) {
    throw std::domain_error("correlation undefined: zero sigma");
  }
  return dot / (std::sqrt(sx) * std::sqrt(sy));
}

double pearson_distance(std::span<const double> x, std::span<const double> y) {
  return 1.0 - pearson_correlation(x, y);
}

Detector::Detector(const Codebook& cb) : cb_(&cb), n_(cb.n()) {
  if (cb.empty()) throw std::invalid_argument("empty codebook");
  const std::size_t size = cb.size();
  unit_dev_.resize(size * n_);
  symbols_.resize(size * n_);
  for (std::size_t k = 0; k < size; ++k) {
    const Word& w = cb[k];
    double mean = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      symbols_[k * n_ + i] = static_cast<double>(w[i]);
      mean += symbols_[k * n_ + i];
    }
    mean /= static_cast<double>(n_);
    double ss = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = symbols_[k * n_ + i] - mean;
      unit_dev_[k * n_ + i] = d;
      ss += d * d;
    }
    if (ss == 0) {
      if (constant_word_ == SIZE_MAX) constant_word_ = k;
      continue;
    }
    const double sigma = std::sqrt(ss);
    for (std::size_t i = 0; i < n_; ++i) {
      unit_dev_[k * n_ + i] /= sigma;
    }
  }
}

Detector::Scored Detector::scan(const std::vector<double>& metrics) const {
  double best = metrics[0];
  for (double m : metrics) best = std::min(best, m);
  // Everything within tolerance of the minimum ties; the decision is the
  // lexicographically smallest of the tied codewords.
  std::size_t chosen = SIZE_MAX;
  std::size_t tied = 0;
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    if (metrics[k] <= best + kTieTolerance) {
      ++tied;
      if (chosen == SIZE_MAX || (*cb_)[k] < (*cb_)[chosen]) chosen = k;
    }
  }
  return Scored{static_cast<std::uint32_t>(chosen), metrics[chosen],
                tied >= 2};
}

Detector::Scored Detector::min_pearson_index(std::span<const double> r) const {
  if (r.size() != n_) {
    throw std::domain_error("received vector length does not match codebook");
  }
  if (constant_word_ != SIZE_MAX) {
    throw std::invalid_argument(
        "codebook contains constant word " +
        (*cb_)[constant_word_].to_string() +
        ": Pearson distance undefined (Property B violated)");
  }
  double mean = 0;
  for (double x : r) mean += x;
  mean /= static_cast<double>(n_);
  std::vector<double> dev(n_);
  double ss = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    dev[i] = r[i] - mean;
    ss += dev[i] * dev[i];
  }
  if (ss == 0) {
    throw DegenerateInputError(
        "received vector has zero sigma: Pearson distance undefined");
  }
  const double sigma_r = std::sqrt(ss);

  // delta = 1 - dot(dev_r, unit_dev_x) / sigma_r.
  std::vector<double> metrics(cb_->size());
  for (std::size_t k = 0; k < cb_->size(); ++k) {
    const double* u = &unit_dev_[k * n_];
    double dot = 0;
    for (std::size_t i = 0; i < n_; ++i) dot += dev[i] * u[i];
    metrics[k] = 1.0 - dot / sigma_r;
  }
  return scan(metrics);
}

Detector::Scored Detector::min_euclidean_index(
    std::span<const double> r) const {
  if (r.size() != n_) {
    throw std::domain_error("received vector length does not match codebook");
  }
  std::vector<double> metrics(cb_->size());
  for (std::size_t k = 0; k < cb_->size(); ++k) {
    const double* s = &symbols_[k * n_];
    double ss = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = r[i] - s[i];
      ss += d * d;
    }
    metrics[k] = std::sqrt(ss);
  }
  return scan(metrics);
}

DetectionResult Detector::min_pearson(std::span<const double> r) const {
  const Scored s = min_pearson_index(r);
  return DetectionResult{(*cb_)[s.index], s.metric, s.tie};
}

DetectionResult Detector::min_euclidean(std::span<const double> r) const {
  const Scored s = min_euclidean_index(r);
  return DetectionResult{(*cb_)[s.index], s.metric, s.tie};
}

DetectionResult detect_min_pearson(const ReceivedVector& r,
                                   const Codebook& cb) {
  return Detector(cb).min_pearson(r);
}

DetectionResult detect_min_euclidean(const ReceivedVector& r,
                                     const Codebook& cb) {
  return Detector(cb).min_euclidean(r);
}

}  // namespace pearson
