#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace artbench {

/// A raw sample with every feature already scaled to [0,1].
using RawVector = std::vector<double>;

/// A complement-coded sample [x, 1-x] in [0,1]^{2d}. Its L1 norm is the
/// constant d, which keeps category weights from collapsing toward zero.
struct FeatureVector {
  std::vector<double> values;
  int dim = 0;  // d; values.size() == 2 * dim
};

/// One hyperbox prototype: the weight vector plus an instance count of how
/// many samples it has absorbed.
struct Category {
  std::vector<double> w;
  long long n = 1;
};

/// Fuzzy ART hyperparameters. gamma/gamma_star are the kernel widths of the
/// higher-order activation and of the match normalization reference; both
/// equal to 1 gives the classic formulation.
struct FaParams {
  double rho = 0.0;
  double alpha = 1e-3;
  double beta = 1.0;
  double gamma = 1.0;
  double gamma_star = 1.0;
};

/// Throws std::invalid_argument when a constraint (alpha > 0, 0 < beta <= 1,
/// 0 <= rho <= 1, 0 <= gamma_star <= gamma) is violated.
void validate(const FaParams& p);

double l1_norm(std::span<const double> v);

/// |a AND b|: L1 norm of the componentwise minimum.
double fuzzy_and_norm(std::span<const double> a, std::span<const double> b);

/// t^g, with a fast path for small integral g (the common gamma values).
double pow_gamma(double t, double g);

/// [x, 1-x]. Throws std::domain_error naming the first component outside [0,1].
FeatureVector complement_code(const RawVector& x);

/// (|x AND w| / (alpha + |w|))^gamma. Always in [0,1).
double activation(const Category& c, const FeatureVector& x, double alpha, double gamma);

/// (|x AND w| / |x|)^gamma. Equals 1 exactly when w contains x componentwise.
double match_raw(const Category& c, const FeatureVector& x, double gamma);

/// (|w| / |x|)^gamma_star * activation(c, x, alpha, gamma). With
/// gamma_star = 0 this is identical to the activation; with
/// gamma_star = gamma it tracks match_raw(gamma) to within gamma*alpha/|w|.
double match_normalized(const Category& c, const FeatureVector& x, double alpha,
                        double gamma, double gamma_star);

/// w <- (1-beta) w + beta (x AND w); instance count grows by `count`
/// (greater than 1 when absorbing an already-counted weight during merge
/// compression).
void learn(Category& c, const FeatureVector& x, double beta, long long count = 1);

/// One training-step presentation to a standalone module: categories are
/// ranked by activation (ties to the lowest index), the first whose
/// normalized match passes rho learns, and search exhaustion fast-commits a
/// new category with w = x. No uncommitted node takes part in the
/// competition. Returns the index of the category that learned or was
/// created.
std::size_t fa_train_step(std::vector<Category>& module, const FeatureVector& x,
                          const FaParams& p, long long count = 1);

namespace detail {
/// Indices 0..n-1 sorted by descending score, ties to the lowest index.
std::vector<std::size_t> rank_descending(std::span<const double> scores);
}  // namespace detail

}  // namespace artbench
