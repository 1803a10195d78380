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

// Supervised learners behind one train/predict contract: multinomial Naive
// Bayes, maximum entropy (softmax regression) and one-vs-rest linear SVM.
//
// Every model scores a vector as bias[c] + weights[c] . x and predicts the
// arg max, ties going to the lowest class index. For Naive Bayes the weights
// are log feature likelihoods and the bias is the log prior.

#ifndef SARKAS_LEARNERS_HPP_
#define SARKAS_LEARNERS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sarkas/common.hpp"
#include "sarkas/features.hpp"

namespace sarkas {

enum class Algorithm { kNaiveBayes, kMaxEnt, kSvm };

inline constexpr std::array<Algorithm, 3> kAllAlgorithms = {
    Algorithm::kNaiveBayes, Algorithm::kMaxEnt, Algorithm::kSvm};

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kNaiveBayes: return "nb";
    case Algorithm::kMaxEnt: return "maxent";
    case Algorithm::kSvm: return "svm";
  }
  return "nb";
}

inline std::string_view algorithm_title(Algorithm a) {
  switch (a) {
    case Algorithm::kNaiveBayes: return "Naive Bayes";
    case Algorithm::kMaxEnt: return "Maximum Entropy";
    case Algorithm::kSvm: return "Support Vector Machine";
  }
  return "";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "nb") return Algorithm::kNaiveBayes;
  if (s == "maxent") return Algorithm::kMaxEnt;
  if (s == "svm") return Algorithm::kSvm;
  return std::nullopt;
}

struct Dataset {
  std::vector<FeatureVector> vectors;
  std::vector<std::size_t> labels;
  std::vector<std::string> classes;

  std::size_t size() const { return vectors.size(); }

  void add(FeatureVector v, std::size_t label) {
    vectors.push_back(std::move(v));
    labels.push_back(label);
  }
};

struct Hyperparams {
  double nb_alpha = 1.0;
  double maxent_l2 = 1e-3;
  int maxent_max_iterations = 500;
  double maxent_tolerance = 1e-8;
  double svm_lambda = 1e-3;
  int svm_epochs = 50;

  nlohmann::json to_json() const {
    return {{"nb_alpha", nb_alpha},
            {"maxent_l2", maxent_l2},
            {"maxent_max_iterations", maxent_max_iterations},
            {"maxent_tolerance", maxent_tolerance},
            {"svm_lambda", svm_lambda},
            {"svm_epochs", svm_epochs}};
  }

  static Hyperparams from_json(const nlohmann::json& j) {
    Hyperparams h;
    h.nb_alpha = j.at("nb_alpha").get<double>();
    h.maxent_l2 = j.at("maxent_l2").get<double>();
    h.maxent_max_iterations = j.at("maxent_max_iterations").get<int>();
    h.maxent_tolerance = j.at("maxent_tolerance").get<double>();
    h.svm_lambda = j.at("svm_lambda").get<double>();
    h.svm_epochs = j.at("svm_epochs").get<int>();
    return h;
  }
};

inline constexpr int kModelFormatVersion = 1;
inline constexpr std::string_view kModelMagic = "SARKAS-MODEL";

namespace detail {

inline std::vector<double> softmax(std::span<const double> scores) {
  double top = -std::numeric_limits<double>::infinity();
  for (double s : scores) top = std::max(top, s);
  std::vector<double> p(scores.size(), 0.0);
  double z = 0.0;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    p[c] = std::exp(scores[c] - top);
    z += p[c];
  }
  for (double& x : p) x /= z;
  return p;
}

inline std::size_t argmax(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

}  // namespace detail

class Model {
 public:
  Algorithm algorithm = Algorithm::kNaiveBayes;
  std::vector<std::string> classes;
  SpacePtr space;
  Hyperparams hyperparams;
  std::uint64_t seed = 0;

  // Naive Bayes class priors; sum to 1. Empty for linear models.
  std::vector<double> priors;
  // [class][column]
  std::vector<std::vector<double>> weights;
  // Linear-model intercepts; Naive Bayes derives them from the priors.
  std::vector<double> bias;

  std::size_t num_classes() const { return classes.size(); }

  std::vector<double> scores(const FeatureVector& v) const {
    check_space(v);
    std::vector<double> s(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const double b = algorithm == Algorithm::kNaiveBayes
                           ? std::log(priors[c])
                           : bias[c];
      s[c] = b + v.dot(weights[c]);
    }
    return s;
  }

 private:
  void check_space(const FeatureVector& v) const {
    if (!same_space(v.space(), space)) {
      throw Error("feature vector space does not match the model's");
    }
  }
};

inline std::size_t predict(const Model& model, const FeatureVector& v) {
  return detail::argmax(model.scores(v));
}

// Naive Bayes: posterior. MaxEnt: softmax probabilities. SVM: softmax over
// raw margins, which is not calibrated.
inline std::vector<double> predict_dist(const Model& model,
                                        const FeatureVector& v) {
  return detail::softmax(model.scores(v));
}

namespace detail {

inline void validate_dataset(const Dataset& data, Algorithm algorithm) {
  if (data.vectors.empty()) throw Error("cannot train on an empty dataset");
  if (data.vectors.size() != data.labels.size()) {
    throw Error("dataset has " + std::to_string(data.vectors.size()) +
                " vectors but " + std::to_string(data.labels.size()) + " labels");
  }
  if (data.classes.size() < 2) throw Error("dataset needs at least 2 classes");
  std::vector<bool> seen(data.classes.size(), false);
  const SpacePtr& space = data.vectors.front().space();
  if (!space) throw Error("feature vector without a feature space");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.labels[i] >= data.classes.size()) {
      throw Error("label " + std::to_string(data.labels[i]) + " of example " +
                  std::to_string(i) + " is not a class index");
    }
    seen[data.labels[i]] = true;
    if (!same_space(data.vectors[i].space(), space)) {
      throw Error("example " + std::to_string(i) +
                  ": feature space dimension mismatch");
    }
    for (const auto& [col, value] : data.vectors[i].entries()) {
      if (!std::isfinite(value)) {
        throw Error("example " + std::to_string(i) + ": non-finite value in column " +
                    std::to_string(col));
      }
      if (algorithm == Algorithm::kNaiveBayes && value < 0.0) {
        throw Error("example " + std::to_string(i) +
                    ": Naive Bayes needs nonnegative feature values");
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), true) < 2) {
    throw Error("dataset contains a single class; need at least 2");
  }
}

// Multinomial event model with feature values as fractional counts.
inline void train_naive_bayes(const Dataset& data, Model& m) {
  const std::size_t classes = data.classes.size();
  const std::size_t dim = m.space->dimension();
  const double alpha = m.hyperparams.nb_alpha;
  std::vector<std::vector<double>> mass(classes, std::vector<double>(dim, 0.0));
  std::vector<double> docs(classes, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto c = data.labels[i];
    docs[c] += 1.0;
    for (const auto& [col, v] : data.vectors[i].entries()) mass[c][col] += v;
  }
  m.priors.resize(classes);
  m.weights.assign(classes, std::vector<double>(dim, 0.0));
  for (std::size_t c = 0; c < classes; ++c) {
    m.priors[c] = docs[c] / static_cast<double>(data.size());
    double total = 0.0;
    for (double x : mass[c]) total += x;
    const double denom = alpha * static_cast<double>(dim) + total;
    for (std::size_t j = 0; j < dim; ++j) {
      m.weights[c][j] = std::log((alpha + mass[c][j]) / denom);
    }
  }
}

}  // namespace detail

// Softmax regression objective over a flat parameter vector laid out as
// [class][column..., bias] (stride dimension + 1):
//   J = mean_i(logsumexp(z_i) - z_i[y_i]) + l2/2 * |W|^2
// The bias is not regularized.
namespace maxent {

inline std::size_t stride(const Dataset& data) {
  return data.vectors.front().space()->dimension() + 1;
}

inline double objective(const Dataset& data, std::span<const double> params,
                        double l2) {
  const std::size_t classes = data.classes.size();
  const std::size_t k = stride(data);
  double loss = 0.0;
  std::vector<double> z(classes);
  for (std::size_t i = 0; i < data.size(); ++i) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < classes; ++c) {
      z[c] = params[c * k + k - 1] + data.vectors[i].dot(params.subspan(c * k, k - 1));
      top = std::max(top, z[c]);
    }
    double sum = 0.0;
    for (double zc : z) sum += std::exp(zc - top);
    loss += top + std::log(sum) - z[data.labels[i]];
  }
  loss /= static_cast<double>(data.size());
  double reg = 0.0;
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t j = 0; j + 1 < k; ++j) reg += params[c * k + j] * params[c * k + j];
  }
  return loss + 0.5 * l2 * reg;
}

inline std::vector<double> gradient(const Dataset& data,
                                    std::span<const double> params, double l2) {
  const std::size_t classes = data.classes.size();
  const std::size_t k = stride(data);
  std::vector<double> g(params.size(), 0.0);
  std::vector<double> z(classes);
  const double inv_n = 1.0 / static_cast<double>(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t c = 0; c < classes; ++c) {
      z[c] = params[c * k + k - 1] + data.vectors[i].dot(params.subspan(c * k, k - 1));
    }
    const auto p = detail::softmax(z);
    for (std::size_t c = 0; c < classes; ++c) {
      const double r = (p[c] - (c == data.labels[i] ? 1.0 : 0.0)) * inv_n;
      for (const auto& [col, v] : data.vectors[i].entries()) g[c * k + col] += r * v;
      g[c * k + k - 1] += r;
    }
  }
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t j = 0; j + 1 < k; ++j) g[c * k + j] += l2 * params[c * k + j];
  }
  return g;
}

// Full-batch gradient descent with Armijo backtracking. Stops when the
// relative objective change drops below `tolerance` or after
// `max_iterations`. Objective values of accepted steps are appended to
// `history` when given.
inline std::vector<double> fit(const Dataset& data, const Hyperparams& h,
                               std::vector<double>* history = nullptr) {
  const std::size_t size = data.classes.size() * stride(data);
  std::vector<double> params(size, 0.0);
  std::vector<double> trial(size);
  double f = objective(data, params, h.maxent_l2);
  if (history) history->push_back(f);
  double step = 1.0;
  for (int iter = 0; iter < h.maxent_max_iterations; ++iter) {
    const auto g = gradient(data, params, h.maxent_l2);
    double g2 = 0.0;
    for (double x : g) g2 += x * x;
    if (g2 == 0.0) break;

    double f_new = f;
    bool accepted = false;
    while (step > 1e-16) {
      for (std::size_t i = 0; i < size; ++i) trial[i] = params[i] - step * g[i];
      f_new = objective(data, trial, h.maxent_l2);
      if (f_new <= f - 1e-4 * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    params.swap(trial);
    const double change = std::abs(f - f_new) / std::max(std::abs(f), 1e-300);
    f = f_new;
    if (history) history->push_back(f);
    if (change < h.maxent_tolerance) break;
    step *= 2.0;
  }
  return params;
}

}  // namespace maxent

namespace detail {

inline void train_maxent(const Dataset& data, Model& m) {
  const auto params = maxent::fit(data, m.hyperparams);
  const std::size_t k = maxent::stride(data);
  m.weights.assign(data.classes.size(), {});
  m.bias.assign(data.classes.size(), 0.0);
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    m.weights[c].assign(params.begin() + static_cast<std::ptrdiff_t>(c * k),
                        params.begin() + static_cast<std::ptrdiff_t>(c * k + k - 1));
    m.bias[c] = params[c * k + k - 1];
  }
}

// Pegasos with the intercept folded in as a constant feature, one binary
// problem per class. Step size is 1/(lambda * (t + 1/lambda)) so the first
// steps are O(1) instead of 1/lambda. Each class's visiting order comes from
// its own stream of the seed.
inline void train_svm(const Dataset& data, Model& m) {
  const std::size_t dim = m.space->dimension();
  const double lambda = m.hyperparams.svm_lambda;
  const double radius = 1.0 / std::sqrt(lambda);
  const double t0 = 1.0 / lambda;
  const Rng root(m.seed);
  m.weights.assign(data.classes.size(), std::vector<double>(dim, 0.0));
  m.bias.assign(data.classes.size(), 0.0);

  std::vector<std::size_t> order(data.size());
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    Rng rng = root.split(c);
    auto& w = m.weights[c];
    double& b = m.bias[c];
    std::uint64_t t = 0;
    for (int epoch = 0; epoch < m.hyperparams.svm_epochs; ++epoch) {
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.shuffle(order);
      for (std::size_t i : order) {
        ++t;
        const double eta = 1.0 / (lambda * (static_cast<double>(t) + t0));
        const double y = data.labels[i] == c ? 1.0 : -1.0;
        const auto& x = data.vectors[i];
        const double margin = y * (x.dot(w) + b);
        const double shrink = 1.0 - eta * lambda;
        for (double& wj : w) wj *= shrink;
        b *= shrink;
        if (margin < 1.0) {
          for (const auto& [col, v] : x.entries()) w[col] += eta * y * v;
          b += eta * y;
        }
        double norm2 = b * b;
        for (double wj : w) norm2 += wj * wj;
        if (norm2 > radius * radius) {
          const double scale = radius / std::sqrt(norm2);
          for (double& wj : w) wj *= scale;
          b *= scale;
        }
      }
    }
  }
}

}  // namespace detail

// Deterministic in (data order, hyperparameters, seed).
inline Model train(const Dataset& data, Algorithm algorithm,
                   const Hyperparams& hyperparams = {}, std::uint64_t seed = 42) {
  detail::validate_dataset(data, algorithm);
  Model m;
  m.algorithm = algorithm;
  m.classes = data.classes;
  m.space = data.vectors.front().space();
  m.hyperparams = hyperparams;
  m.seed = seed;
  switch (algorithm) {
    case Algorithm::kNaiveBayes: detail::train_naive_bayes(data, m); break;
    case Algorithm::kMaxEnt: detail::train_maxent(data, m); break;
    case Algorithm::kSvm: detail::train_svm(data, m); break;
  }
  return m;
}

// Canonical text form: a magic line, then sorted-key JSON. Doubles are
// written in shortest round-trip form, so parameters reload bit-exactly.
inline std::string serialize_model(const Model& m) {
  nlohmann::json j;
  j["format_version"] = kModelFormatVersion;
  j["algorithm"] = std::string(algorithm_name(m.algorithm));
  j["classes"] = m.classes;
  j["feature_space"] = m.space->to_json();
  j["hyperparameters"] = m.hyperparams.to_json();
  j["seed"] = m.seed;
  j["weights"] = m.weights;
  if (m.algorithm == Algorithm::kNaiveBayes) {
    j["priors"] = m.priors;
  } else {
    j["bias"] = m.bias;
  }
  return std::string(kModelMagic) + " " + std::to_string(kModelFormatVersion) +
         "\n" + j.dump() + "\n";
}

inline Model parse_model(std::string_view content,
                         const std::string& source = "<model>") {
  const auto newline = content.find('\n');
  const std::string_view header =
      newline == std::string_view::npos ? content : content.substr(0, newline);
  const auto fields = text::split(header, ' ');
  if (fields.size() != 2 || fields[0] != kModelMagic) {
    throw ParseError(source, 1, "not a model file (missing SARKAS-MODEL header)");
  }
  const auto version = text::parse_int(fields[1]);
  if (!version) throw ParseError(source, 1, "unreadable format version");
  if (*version != kModelFormatVersion) {
    throw Error(source + ": model format version " + std::to_string(*version) +
                " found, expected " + std::to_string(kModelFormatVersion));
  }
  if (newline == std::string_view::npos) {
    throw ParseError(source, 2, "truncated model file");
  }
  try {
    const auto j = nlohmann::json::parse(content.substr(newline + 1));
    if (j.at("format_version").get<int>() != kModelFormatVersion) {
      throw Error(source + ": model format version " +
                  std::to_string(j.at("format_version").get<int>()) +
                  " found, expected " + std::to_string(kModelFormatVersion));
    }
    Model m;
    const auto algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    if (!algorithm) throw ParseError(source, 2, "unknown algorithm");
    m.algorithm = *algorithm;
    m.classes = j.at("classes").get<std::vector<std::string>>();
    m.space = FeatureSpace::from_json(j.at("feature_space"));
    m.hyperparams = Hyperparams::from_json(j.at("hyperparameters"));
    m.seed = j.at("seed").get<std::uint64_t>();
    m.weights = j.at("weights").get<std::vector<std::vector<double>>>();
    if (m.algorithm == Algorithm::kNaiveBayes) {
      m.priors = j.at("priors").get<std::vector<double>>();
    } else {
      m.bias = j.at("bias").get<std::vector<double>>();
    }
    const std::size_t classes = m.classes.size();
    bool ok = m.weights.size() == classes &&
              (m.algorithm == Algorithm::kNaiveBayes ? m.priors.size()
                                                     : m.bias.size()) == classes;
    for (const auto& w : m.weights) ok &= w.size() == m.space->dimension();
    if (!ok) throw ParseError(source, 2, "parameter dimensions do not match");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 2, std::string("corrupt model: ") + e.what());
  }
}

inline void save_model(const Model& m, const std::string& path) {
  io::write_file(path, serialize_model(m));
}

inline Model load_model(const std::string& path) {
  return parse_model(io::read_file(path), path);
}

}  // namespace sarkas

#endif  // SARKAS_LEARNERS_HPP_
