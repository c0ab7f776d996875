// Copyright 2026 The envc Authors.
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

// Small-sample statistics for scoring reader responses. Everything is
// self-contained; sums run left to right over input order so results are
// reproducible.

#ifndef ENVC_STATS_H_
#define ENVC_STATS_H_

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace envc {

// Regularized incomplete beta I_x(a, b), by Lentz's continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// Inverse of the standard normal CDF. Acklam's rational approximation refined
// by one Halley step against erfc; relative error near machine precision.
double NormalQuantile(double p);

double StudentTCdf(double t, double df);
// Safeguarded Newton iteration on StudentTCdf; absolute error below 1e-10 for
// df >= 1 and p in [1e-12, 1 - 1e-12].
double StudentTQuantile(double p, double df);

struct TTestResult {
  double t = 0;
  int df = 0;
  double mean_diff = 0;
  double ci_low = 0;  // 95% two-sided
  double ci_high = 0;
};

// Paired-samples t-test on d_i = a_i - b_i. When every difference is zero the
// test reports t = 0 with a zero-width interval; identical non-zero
// differences are an error (t would be infinite).
absl::StatusOr<TTestResult> PairedTTest(std::span<const double> a, std::span<const double> b);

// Wilson score interval for k successes in n trials at confidence `level`.
absl::StatusOr<std::pair<double, double>> WilsonInterval(int64_t successes, int64_t trials,
                                                         double level);

struct LogisticFitResult {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  bool converged = false;
  // Set when some coefficient exceeded the divergence bound, which indicates
  // (quasi-)complete separation. converged is false in that case.
  bool separation = false;
  int iterations = 0;
};

inline constexpr double kLogisticTolerance = 1e-10;
inline constexpr int kLogisticMaxIterations = 100;
inline constexpr double kSeparationBound = 30.0;

// Maximum-likelihood logistic regression by iteratively reweighted least
// squares. `design` includes the intercept column if one is wanted. Standard
// errors are the square roots of the diagonal of the inverse observed
// information at the returned coefficients.
absl::StatusOr<LogisticFitResult> LogisticFit(const Eigen::MatrixXd& design,
                                              const std::vector<bool>& outcomes);

double LogisticLogLikelihood(const Eigen::MatrixXd& design, const std::vector<bool>& outcomes,
                             const Eigen::VectorXd& beta);
// Gradient of LogisticLogLikelihood with respect to beta.
Eigen::VectorXd LogisticScore(const Eigen::MatrixXd& design, const std::vector<bool>& outcomes,
                              const Eigen::VectorXd& beta);

}  // namespace envc

#endif  // ENVC_STATS_H_
