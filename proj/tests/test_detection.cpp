#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pearson/codebook.hpp"
#include "pearson/detection.hpp"
#include "pearson/enumerate.hpp"
#include "pearson/errors.hpp"

using namespace pearson;

namespace {

std::vector<double> to_real(const Word& w) {
  std::vector<double> r(w.n());
  for (std::size_t i = 0; i < w.n(); ++i) r[i] = w[i];
  return r;
}

// Independent reference detector: recompute every distance with the free
// function and apply the same tie rule by hand.
DetectionResult naive_min_pearson(const std::vector<double>& r,
                                  const Codebook& cb) {
  std::vector<double> deltas(cb.size());
  for (std::size_t i = 0; i < cb.size(); ++i) {
    deltas[i] = pearson_distance(r, to_real(cb[i]));
  }
  double best = deltas[0];
  for (double d : deltas) best = std::min(best, d);
  std::size_t chosen = SIZE_MAX;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cb.size(); ++i) {
    if (deltas[i] <= best + kTieTolerance) {
      ++hits;
      if (chosen == SIZE_MAX || cb[i] < cb[chosen]) chosen = i;
    }
  }
  return DetectionResult{cb[chosen], deltas[chosen], hits >= 2};
}

}  // namespace

TEST_CASE("mean and sigma") {
  CHECK(vector_mean(std::vector<double>{0, 1}) == 0.5);
  CHECK(vector_mean(std::vector<double>{3, 3, 3}) == 3.0);
  CHECK(vector_mean(std::vector<double>{0, 0, 1}) ==
        doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(vector_mean(std::vector<double>{}), std::domain_error);

  CHECK(vector_sigma(std::vector<double>{3, 3, 3}) == 0.0);
  CHECK(vector_sigma(std::vector<double>{0, 1}) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(vector_sigma(std::vector<double>{0, 0, 1}) ==
        doctest::Approx(std::sqrt(2.0 / 3)).epsilon(1e-15));
}

TEST_CASE("correlation endpoints and a worked value") {
  CHECK(pearson_correlation(std::vector<double>{0, 1},
                            std::vector<double>{5, 7}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pearson_correlation(std::vector<double>{0, 1},
                            std::vector<double>{1, 0}) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // Deviations (-1/3,-1/3,2/3) and (-2/3,1/3,1/3): dot 1/3 over product 2/3.
  CHECK(pearson_correlation(std::vector<double>{0, 0, 1},
                            std::vector<double>{0, 1, 1}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(pearson_correlation(std::vector<double>{1, 1},
                                      std::vector<double>{0, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(pearson_correlation(std::vector<double>{0, 1, 2},
                                      std::vector<double>{0, 1}),
                  std::domain_error);
}

TEST_CASE("distance examples") {
  CHECK(pearson_distance(std::vector<double>{0, 1},
                         std::vector<double>{0, 1}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pearson_distance(std::vector<double>{0, 1},
                         std::vector<double>{1, 0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pearson_distance(std::vector<double>{0, 0, 1},
                         std::vector<double>{0, 1, 1}) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("distance is symmetric, self-zero, and in range") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 5.0);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<double> x(5), y(5);
    for (double& v : x) v = u(rng);
    for (double& v : y) v = u(rng);
    if (vector_sigma(x) == 0 || vector_sigma(y) == 0) continue;
    const double dxy = pearson_distance(x, y);
    const double dyx = pearson_distance(y, x);
    CHECK(std::abs(dxy - dyx) <= 1e-12);
    CHECK(dxy >= -1e-9);
    CHECK(dxy <= 2 + 1e-9);
    CHECK(std::abs(pearson_correlation(x, x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("distance ignores positive affine maps of either argument") {
  const std::vector<double> x{0, 1, 3, 2};
  const std::vector<double> y{1, 4, 4, 0};
  const double base = pearson_distance(x, y);
  for (double a : {0.25, 1.0, 7.5}) {
    for (double b : {-20.0, 0.0, 3.5}) {
      std::vector<double> xs(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xs[i] = a * x[i] + b;
      CHECK(pearson_distance(xs, y) == doctest::Approx(base).epsilon(1e-9));
      CHECK(pearson_distance(x, xs) ==
            doctest::Approx(0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("minimum-distance detection on clean and affinely distorted input") {
  const Codebook cb = make_pearson_codebook(4, 4);
  const Detector det(cb);
  for (std::size_t i = 0; i < cb.size(); i += 7) {
    const std::vector<double> clean = to_real(cb[i]);
    const DetectionResult hit = det.min_pearson(clean);
    CHECK(hit.decided == cb[i]);
    CHECK(hit.distance == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(hit.tie);

    std::vector<double> warped(clean.size());
    for (std::size_t k = 0; k < clean.size(); ++k) {
      warped[k] = 3.0 * clean[k] + 7.0;
    }
    const DetectionResult warped_hit = det.min_pearson(warped);
    CHECK(warped_hit.decided == cb[i]);
    CHECK(warped_hit.distance == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("detection ties go to the lexicographically smallest codeword") {
  Codebook cb(3, 3);
  cb.add(Word(3, {2, 1, 0}));  // insertion order should not matter
  cb.add(Word(3, {0, 1, 2}));
  const Detector det(cb);
  // (0,1,0) is uncorrelated with both codewords: delta = 1 for each.
  const DetectionResult p = det.min_pearson(std::vector<double>{0, 1, 0});
  CHECK(p.decided == Word(3, {0, 1, 2}));
  CHECK(p.distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.tie);
  // The same input ties in Euclidean distance too: 4 on both sides.
  const DetectionResult e = det.min_euclidean(std::vector<double>{0, 1, 0});
  CHECK(e.decided == Word(3, {0, 1, 2}));
  CHECK(e.distance == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.tie);
}

TEST_CASE("detection error cases") {
  const Codebook cb = make_pearson_codebook(3, 3);
  const Detector det(cb);
  CHECK_THROWS_AS(det.min_pearson(std::vector<double>{1, 1, 1}),
                  DegenerateInputError);
  CHECK_THROWS_AS(det.min_pearson(std::vector<double>{0, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(det.min_euclidean(std::vector<double>{0, 1}),
                  std::domain_error);

  Codebook with_constant(3, 2);
  with_constant.add(Word(3, {1, 1}));
  with_constant.add(Word(3, {0, 1}));
  const Detector dc(with_constant);
  CHECK_THROWS_AS(dc.min_pearson(std::vector<double>{0, 1}),
                  std::invalid_argument);
  // The Euclidean baseline accepts constant codewords.
  const DetectionResult e = dc.min_euclidean(std::vector<double>{1.1, 1.0});
  CHECK(e.decided == Word(3, {1, 1}));

  CHECK_THROWS_AS(Detector(Codebook(3, 2)), std::invalid_argument);
}

TEST_CASE("euclidean baseline examples") {
  Codebook cb(2, 2);
  cb.add(Word(2, {0, 1}));
  cb.add(Word(2, {1, 0}));
  const Detector det(cb);
  const DetectionResult r = det.min_euclidean(std::vector<double>{0.4, 0.6});
  CHECK(r.decided == Word(2, {0, 1}));
  // Squared distances 0.32 vs 0.72; the metric reported is the norm.
  CHECK(r.distance == doctest::Approx(std::sqrt(0.32)).epsilon(1e-12));
  CHECK_FALSE(r.tie);
}

TEST_CASE("offset breaks the euclidean baseline but not the pearson rule") {
  const Codebook cb = make_pearson_codebook(4, 4);
  const Detector det(cb);
  const Word sent(4, {0, 0, 0, 1});
  std::vector<double> r = to_real(sent);
  for (double& v : r) v += 2.0;  // pure offset
  CHECK(det.min_pearson(r).decided == sent);
  CHECK(det.min_euclidean(r).decided != sent);
}

TEST_CASE("confusable pair keeps exactly equal distances") {
  // (0,2,4,4) = 2 * (0,1,2,2): no received vector can separate them.
  const std::vector<double> w1{0, 1, 2, 2};
  const std::vector<double> w2{0, 2, 4, 4};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 5.0);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<double> r(4);
    for (double& v : r) v = u(rng);
    if (vector_sigma(r) == 0) continue;
    CHECK(std::abs(pearson_distance(r, w1) - pearson_distance(r, w2)) <=
          1e-12);
  }
}

TEST_CASE("detector agrees with the naive reference on random inputs") {
  const Codebook cb = make_pearson_codebook(3, 4);
  REQUIRE(cb.size() == 50);
  const Detector det(cb);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-0.5, 3.5);
  for (int iter = 0; iter < 10'000; ++iter) {
    std::vector<double> r(4);
    for (double& v : r) v = u(rng);
    if (vector_sigma(r) == 0) continue;
    const DetectionResult fast = det.min_pearson(r);
    const DetectionResult slow = naive_min_pearson(r, cb);
    CHECK(fast.decided == slow.decided);
    CHECK(fast.distance == doctest::Approx(slow.distance).epsilon(1e-12));
    CHECK(fast.tie == slow.tie);
    CHECK(cb.contains(fast.decided));
    CHECK(fast.distance >= -1e-9);
    CHECK(fast.distance <= 2 + 1e-9);
  }
}

TEST_CASE("one-shot helpers match the detector") {
  const Codebook cb = make_pearson_codebook(3, 3);
  const Detector det(cb);
  const std::vector<double> r{0.1, 0.9, 2.1};
  CHECK(detect_min_pearson(r, cb).decided == det.min_pearson(r).decided);
  CHECK(detect_min_euclidean(r, cb).decided == det.min_euclidean(r).decided);
}
