#include "artbench/fuzzy_art.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace artbench {

void validate(const FaParams& p) {
  if (!(p.alpha > 0.0)) throw std::invalid_argument("FaParams: alpha must be > 0");
  if (!(p.beta > 0.0 && p.beta <= 1.0)) throw std::invalid_argument("FaParams: beta must be in (0,1]");
  if (!(p.rho >= 0.0 && p.rho <= 1.0)) throw std::invalid_argument("FaParams: rho must be in [0,1]");
  if (!(p.gamma_star >= 0.0)) throw std::invalid_argument("FaParams: gamma_star must be >= 0");
  if (p.gamma_star > p.gamma) throw std::invalid_argument("FaParams: gamma_star must be <= gamma");
}

double l1_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double fuzzy_and_norm(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("fuzzy_and_norm: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::min(a[i], b[i]);
  return s;
}

double pow_gamma(double t, double g) {
  const int gi = static_cast<int>(g);
  if (static_cast<double>(gi) == g && gi >= 0 && gi <= 8) {
    double r = 1.0;
    for (int i = 0; i < gi; ++i) r *= t;
    return r;
  }
  return std::pow(t, g);
}

FeatureVector complement_code(const RawVector& x) {
  const std::size_t d = x.size();
  FeatureVector out;
  out.dim = static_cast<int>(d);
  out.values.resize(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      throw std::domain_error("complement_code: component " + std::to_string(i) +
                              " = " + std::to_string(x[i]) + " outside [0,1]");
    }
    out.values[i] = x[i];
    out.values[d + i] = 1.0 - x[i];
  }
  return out;
}

namespace {

void check_dims(const Category& c, const FeatureVector& x, const char* who) {
  if (c.w.size() != x.values.size()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

}  // namespace

double activation(const Category& c, const FeatureVector& x, double alpha, double gamma) {
  check_dims(c, x, "activation");
  if (!(alpha > 0.0)) throw std::invalid_argument("activation: alpha must be > 0");
  const double s = fuzzy_and_norm(x.values, c.w);
  return pow_gamma(s / (alpha + l1_norm(c.w)), gamma);
}

double match_raw(const Category& c, const FeatureVector& x, double gamma) {
  check_dims(c, x, "match_raw");
  const double xn = l1_norm(x.values);
  if (!(xn > 0.0)) throw std::domain_error("match_raw: |x| must be > 0");
  return pow_gamma(fuzzy_and_norm(x.values, c.w) / xn, gamma);
}

double match_normalized(const Category& c, const FeatureVector& x, double alpha,
                        double gamma, double gamma_star) {
  check_dims(c, x, "match_normalized");
  if (gamma_star > gamma) throw std::invalid_argument("match_normalized: gamma_star must be <= gamma");
  const double xn = l1_norm(x.values);
  if (!(xn > 0.0)) throw std::domain_error("match_normalized: |x| must be > 0");
  return pow_gamma(l1_norm(c.w) / xn, gamma_star) * activation(c, x, alpha, gamma);
}

void learn(Category& c, const FeatureVector& x, double beta, long long count) {
  check_dims(c, x, "learn");
  for (std::size_t i = 0; i < c.w.size(); ++i) {
    c.w[i] = (1.0 - beta) * c.w[i] + beta * std::min(x.values[i], c.w[i]);
  }
  c.n += count;
}

namespace detail {

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace detail

std::size_t fa_train_step(std::vector<Category>& module, const FeatureVector& x,
                          const FaParams& p, long long count) {
  validate(p);
  std::vector<double> scores(module.size());
  for (std::size_t j = 0; j < module.size(); ++j) {
    scores[j] = activation(module[j], x, p.alpha, p.gamma);
  }
  for (std::size_t j : detail::rank_descending(scores)) {
    if (match_normalized(module[j], x, p.alpha, p.gamma, p.gamma_star) >= p.rho) {
      learn(module[j], x, p.beta, count);
      return j;
    }
  }
  module.push_back(Category{x.values, count});
  return module.size() - 1;
}

}  // namespace artbench
