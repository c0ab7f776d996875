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

#include "envc/stats.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "strings.h"

namespace envc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b), valid for x < (a + 1) / (a + b + 2).
double BetaContinuedFraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double StudentTPdf(double t, double df) {
  const double log_norm =
      std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) - 0.5 * std::log(df * std::numbers::pi);
  return std::exp(log_norm - (df + 1.0) / 2.0 * std::log1p(t * t / df));
}

double Sigmoid(double eta) {
  if (eta >= 0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

// log(1 + exp(eta)) without overflow.
double Softplus(double eta) {
  return eta > 0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta));
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * BetaContinuedFraction(a, b, x) / a;
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double NormalQuantile(double p) {
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley refinement.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

double StudentTCdf(double t, double df) {
  if (t == 0.0) return 0.5;
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * RegularizedIncompleteBeta(df / 2.0, 0.5, df / (df + t * t));
  return t > 0 ? 1.0 - tail : tail;
}

double StudentTQuantile(double p, double df) {
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  if (p == 0.5) return 0.0;
  // Work in the lower tail, where the CDF has full relative precision.
  const bool upper = p > 0.5;
  const double q = upper ? 1.0 - p : p;

  // Cornish-Fisher start from the normal quantile.
  const double z = NormalQuantile(q);
  double t = z + (z * z * z + z) / (4.0 * df);
  if (!(t < 0.0)) t = -1.0;

  // Bracket: cdf(lo) <= q <= cdf(hi), hi = 0.
  double hi = 0.0;
  double lo = std::min(t, -1.0);
  while (StudentTCdf(lo, df) > q) {
    hi = lo;
    lo *= 2.0;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double f = StudentTCdf(t, df) - q;
    if (f > 0) {
      hi = std::min(hi, t);
    } else {
      lo = std::max(lo, t);
    }
    double next = t - f / StudentTPdf(t, df);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - t);
    t = next;
    if (step <= 1e-15 * (1.0 + std::fabs(t))) break;
  }
  return upper ? -t : t;
}

absl::StatusOr<TTestResult> PairedTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(
        StrCat("paired t-test: length mismatch (", a.size(), " vs ", b.size(), ")"));
  }
  const size_t n = a.size();
  if (n < 2) return absl::InvalidArgumentError("paired t-test: need at least 2 pairs");

  double sum = 0;
  for (size_t i = 0; i < n; ++i) sum += a[i] - b[i];
  const double mean = sum / static_cast<double>(n);
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dev = (a[i] - b[i]) - mean;
    ss += dev * dev;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TTestResult r;
  r.df = static_cast<int>(n - 1);
  r.mean_diff = mean;
  if (sd == 0.0) {
    if (mean != 0.0) return absl::InvalidArgumentError("degenerate: infinite t");
    r.t = 0.0;
    r.ci_low = r.ci_high = 0.0;
    return r;
  }
  const double se = sd / std::sqrt(static_cast<double>(n));
  r.t = mean / se;
  const double crit = StudentTQuantile(0.975, r.df);
  r.ci_low = mean - crit * se;
  r.ci_high = mean + crit * se;
  return r;
}

absl::StatusOr<std::pair<double, double>> WilsonInterval(int64_t successes, int64_t trials,
                                                         double level) {
  if (trials < 1) return absl::InvalidArgumentError("wilson: trials must be >= 1");
  if (successes < 0 || successes > trials) {
    return absl::InvalidArgumentError(
        StrCat("wilson: successes ", successes, " outside [0, ", trials, "]"));
  }
  if (!(level > 0.0 && level < 1.0)) {
    return absl::InvalidArgumentError(StrCat("wilson: level ", level, " outside (0, 1)"));
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z = NormalQuantile(1.0 - (1.0 - level) / 2.0);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // At the boundaries the exact endpoint is 0 or 1; don't leave rounding dust.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return std::make_pair(low, high);
}

double LogisticLogLikelihood(const Eigen::MatrixXd& design, const std::vector<bool>& outcomes,
                             const Eigen::VectorXd& beta) {
  const Eigen::VectorXd eta = design * beta;
  double ll = 0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    ll += (outcomes[i] ? eta[i] : 0.0) - Softplus(eta[i]);
  }
  return ll;
}

Eigen::VectorXd LogisticScore(const Eigen::MatrixXd& design, const std::vector<bool>& outcomes,
                              const Eigen::VectorXd& beta) {
  const Eigen::VectorXd eta = design * beta;
  Eigen::VectorXd resid(eta.size());
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    resid[i] = (outcomes[i] ? 1.0 : 0.0) - Sigmoid(eta[i]);
  }
  return design.transpose() * resid;
}

absl::StatusOr<LogisticFitResult> LogisticFit(const Eigen::MatrixXd& design,
                                              const std::vector<bool>& outcomes) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (k == 0) return absl::InvalidArgumentError("logistic: design has no columns");
  if (n < k) {
    return absl::InvalidArgumentError(StrCat("logistic: ", n, " rows < ", k, " columns"));
  }
  if (static_cast<Eigen::Index>(outcomes.size()) != n) {
    return absl::InvalidArgumentError(
        StrCat("logistic: ", outcomes.size(), " outcomes for ", n, " rows"));
  }

  auto information = [&](const Eigen::VectorXd& beta) {
    const Eigen::VectorXd eta = design * beta;
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double p = Sigmoid(eta[i]);
      w[i] = p * (1.0 - p);
    }
    return Eigen::MatrixXd(design.transpose() * w.asDiagonal() * design);
  };
  // Smallest over largest eigenvalue of the information matrix must exceed
  // kMinReciprocalCondition.
  constexpr double kMinReciprocalCondition = 1e-14;
  auto well_conditioned = [&](const Eigen::MatrixXd& info) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(info, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) return false;
    const double hi = eig.eigenvalues().maxCoeff();
    return hi > 0 && eig.eigenvalues().minCoeff() > kMinReciprocalCondition * hi;
  };

  LogisticFitResult result;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
  for (int iter = 1; iter <= kLogisticMaxIterations; ++iter) {
    result.iterations = iter;
    const Eigen::MatrixXd info = information(beta);
    if (!well_conditioned(info)) {
      if (iter == 1) return absl::FailedPreconditionError("logistic: singular information matrix");
      result.separation = true;
      break;
    }
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    const Eigen::VectorXd step = ldlt.solve(LogisticScore(design, outcomes, beta));
    beta += step;
    if (beta.cwiseAbs().maxCoeff() > kSeparationBound) {
      result.separation = true;
      break;
    }
    if (step.cwiseAbs().maxCoeff() < kLogisticTolerance) {
      result.converged = true;
      break;
    }
  }

  result.coefficients = beta;
  const Eigen::MatrixXd final_info = information(beta);
  if (well_conditioned(final_info)) {
    const Eigen::MatrixXd cov = final_info.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    result.standard_errors = cov.diagonal().cwiseSqrt();
  } else {
    result.standard_errors = Eigen::VectorXd::Constant(k, std::numeric_limits<double>::infinity());
  }
  return result;
}

}  // namespace envc
