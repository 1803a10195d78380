// Copyright 2026 The Sarkas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Test-only oracles and generators shared by the unit and acceptance tests.

#ifndef SARKAS_TESTS_SUPPORT_HPP_
#define SARKAS_TESTS_SUPPORT_HPP_

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <string>
#include <vector>

#include "sarkas/learners.hpp"

namespace sarkas::testing {

inline SpacePtr plain_space(std::size_t dim) {
  std::vector<std::string> vocab;
  for (std::size_t j = 0; j < dim; ++j) vocab.push_back("f" + std::to_string(j));
  return FeatureSpace::create(vocab, FeatureMode::kLexical,
                              FeatureGroups{FeatureGroup::kUnigram});
}

inline std::vector<std::string> class_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < k; ++c) out.push_back("c" + std::to_string(c));
  return out;
}

// Small dataset with nonnegative counts on a quarter grid; every class shows
// up at least once.
inline Dataset random_count_dataset(Rng& rng, std::size_t max_docs,
                                    std::size_t max_features, std::size_t max_classes) {
  const std::size_t k = 2 + rng.uniform(std::uint64_t{max_classes - 1});
  const std::size_t d = 1 + rng.uniform(std::uint64_t{max_features});
  const std::size_t n = k + rng.uniform(std::uint64_t{max_docs - k + 1});
  const auto space = plain_space(d);
  Dataset ds{{}, {}, class_names(k)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (auto& v : x) v = 0.25 * static_cast<double>(rng.uniform(std::uint64_t{9}));
    ds.add(FeatureVector::from_dense(space, x), i < k ? i : rng.uniform(std::uint64_t{k}));
  }
  return ds;
}

// Posterior of a multinomial model with Laplace-style smoothing, written out
// directly as a product of probabilities.
inline std::vector<double> bayes_posterior(const Dataset& train, const FeatureVector& x,
                                           double alpha) {
  const std::size_t k = train.classes.size();
  const std::size_t d = x.space()->dimension();
  std::vector<double> joint(k, 0.0);
  double evidence = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    double docs = 0.0;
    std::vector<double> mass(d, 0.0);
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (train.labels[i] != c) continue;
      docs += 1.0;
      for (std::size_t j = 0; j < d; ++j) mass[j] += train.vectors[i].get(j);
    }
    double total = 0.0;
    for (double m : mass) total += m;
    double p = docs / static_cast<double>(train.size());
    for (std::size_t j = 0; j < d; ++j) {
      p *= std::pow((alpha + mass[j]) / (alpha * static_cast<double>(d) + total), x.get(j));
    }
    joint[c] = p;
    evidence += p;
  }
  for (auto& p : joint) p /= evidence;
  return joint;
}

inline double central_difference(const Dataset& data, std::vector<double> params,
                                 std::size_t i, double l2, double h) {
  const double x = params[i];
  params[i] = x + h;
  const double up = maxent::objective(data, params, l2);
  params[i] = x - h;
  const double down = maxent::objective(data, params, l2);
  return (up - down) / (2.0 * h);
}

// Points in [-1,1]^3 separated by a random hyperplane with margin >= 0.1.
inline Dataset separable_toy(Rng& rng, std::size_t max_points = 20) {
  constexpr std::size_t d = 3;
  std::vector<double> u(d);
  double norm = 0.0;
  for (auto& x : u) {
    x = rng.uniform01() * 2.0 - 1.0;
    norm += x * x;
  }
  for (auto& x : u) x /= std::sqrt(norm);
  const double offset = rng.uniform01() * 0.6 - 0.3;
  const auto space = plain_space(d);
  const std::size_t n = 4 + rng.uniform(std::uint64_t{max_points - 3});
  while (true) {
    Dataset ds{{}, {}, {"below", "above"}};
    while (ds.size() < n) {
      std::vector<double> p(d);
      double side = offset;
      for (std::size_t j = 0; j < d; ++j) {
        p[j] = rng.uniform01() * 2.0 - 1.0;
        side += p[j] * u[j];
      }
      if (std::abs(side) < 0.1) continue;
      ds.add(FeatureVector::from_dense(space, p), side > 0 ? 1 : 0);
    }
    std::size_t above = 0;
    for (auto l : ds.labels) above += l;
    if (above > 0 && above < n) return ds;
  }
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("sarkas-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace sarkas::testing

#endif  // SARKAS_TESTS_SUPPORT_HPP_
