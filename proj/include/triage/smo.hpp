#pragma once

// Binary RBF-kernel SVM trained by sequential minimal optimization.
//
// The dual is   max W(a) = sum a_i - 1/2 sum_ij a_i a_j y_i y_j K_ij
//               s.t. 0 <= a_i <= C,  sum a_i y_i = 0.
// The solver keeps F_i = sum_k a_k y_k K_ik - y_i (the error without bias).
// With v_i = -F_i, the KKT conditions hold to within `tol` iff
//   max{v_i : i in I_up} - min{v_i : i in I_low} <= tol.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "triage/error.hpp"
#include "triage/sparse.hpp"

namespace triage {

inline double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma) {
  return std::exp(-gamma * squared_distance(x, y));
}

struct SvmBinaryModel {
  std::vector<SparseVector> support_vectors;
  std::vector<double> coeffs;  // alpha_i * y_i
  double bias = 0.0;
  double gamma = 0.01;
};

inline double decision_value(const SvmBinaryModel& model, const SparseVector& x) {
  double sum = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    sum += model.coeffs[i] * rbf_kernel(model.support_vectors[i], x, model.gamma);
  }
  return sum;
}

struct SmoParams {
  double c = 1.0;
  double gamma = 0.01;
  double tol = 1e-3;
  int max_passes = 10;   // consecutive sweeps without an update before stopping
  std::uint64_t seed = 42;
  long max_sweeps = 100000;
};

struct SmoTrace {
  long sweeps = 0;
  long steps = 0;
  bool converged = false;
  double final_gap = 0.0;
  std::vector<double> objective;  // dual objective after each accepted step
};

struct SmoResult {
  SvmBinaryModel model;
  std::vector<double> alpha;  // one per training point
  SmoTrace trace;
};

inline constexpr double kSupportVectorFloor = 1e-9;

/// Dual objective W(alpha) evaluated from scratch.
inline double dual_objective(std::span<const SparseVector> xs, std::span<const int> ys,
                             std::span<const double> alpha, double gamma) {
  double linear = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    linear += alpha[i];
    if (alpha[i] == 0.0) continue;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (alpha[j] == 0.0) continue;
      quad += alpha[i] * alpha[j] * ys[i] * ys[j] * rbf_kernel(xs[i], xs[j], gamma);
    }
  }
  return linear - 0.5 * quad;
}

namespace detail {

class SmoSolver {
 public:
  SmoSolver(std::span<const SparseVector> xs, std::span<const int> ys, const SmoParams& params)
      : xs_(xs), ys_(ys), p_(params), n_(xs.size()), gram_(n_ * n_), alpha_(n_, 0.0), f_(n_),
        rng_(params.seed) {
    for (std::size_t i = 0; i < n_; ++i) {
      gram_[i * n_ + i] = 1.0;
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double k = rbf_kernel(xs[i], xs[j], p_.gamma);
        gram_[i * n_ + j] = k;
        gram_[j * n_ + i] = k;
      }
      f_[i] = -ys_[i];
    }
  }

  SmoResult run(bool record_objective) {
    SmoTrace trace;
    double objective = 0.0;
    int idle = 0;
    while (idle < p_.max_passes && trace.sweeps < p_.max_sweeps) {
      long changed = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto step = improve(i);
        if (!step) continue;
        ++changed;
        ++trace.steps;
        objective += *step;
        if (record_objective) trace.objective.push_back(objective);
      }
      ++trace.sweeps;
      idle = changed == 0 ? idle + 1 : 0;
    }
    trace.final_gap = gap();
    trace.converged = trace.final_gap <= p_.tol;

    SmoResult result;
    result.alpha = alpha_;
    result.trace = std::move(trace);
    result.model.gamma = p_.gamma;
    result.model.bias = -rho();
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha_[i] > kSupportVectorFloor) {
        result.model.support_vectors.push_back(xs_[i]);
        result.model.coeffs.push_back(alpha_[i] * ys_[i]);
      }
    }
    return result;
  }

 private:
  double k(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  double v(std::size_t i) const { return -f_[i]; }

  bool in_up(std::size_t i) const {
    return (ys_[i] > 0 && alpha_[i] < p_.c) || (ys_[i] < 0 && alpha_[i] > 0.0);
  }
  bool in_low(std::size_t i) const {
    return (ys_[i] < 0 && alpha_[i] < p_.c) || (ys_[i] > 0 && alpha_[i] > 0.0);
  }

  double gap() const {
    double m = -std::numeric_limits<double>::infinity();
    double big_m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
      if (in_up(i)) m = std::max(m, v(i));
      if (in_low(i)) big_m = std::min(big_m, v(i));
    }
    if (!std::isfinite(m) || !std::isfinite(big_m)) return 0.0;
    return m - big_m;
  }

  // If i takes part in a pair violating the KKT conditions by more than tol,
  // pairs it with a randomly drawn violating partner, falling back to the
  // most violating one. Returns the objective increase of the accepted step.
  std::optional<double> improve(std::size_t i) {
    candidates_.clear();
    std::optional<std::size_t> extreme;
    if (in_up(i)) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != i && in_low(j) && v(i) - v(j) > p_.tol) {
          candidates_.push_back(j);
          if (!extreme || v(j) < v(*extreme)) extreme = j;
        }
      }
    }
    if (candidates_.empty() && in_low(i)) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != i && in_up(j) && v(j) - v(i) > p_.tol) {
          candidates_.push_back(j);
          if (!extreme || v(j) > v(*extreme)) extreme = j;
        }
      }
    }
    if (candidates_.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, candidates_.size() - 1);
    const std::size_t j = candidates_[pick(rng_)];
    if (auto gain = take_step(i, j)) return gain;
    if (*extreme != j) return take_step(i, *extreme);
    return std::nullopt;
  }

  std::optional<double> take_step(std::size_t i, std::size_t j) {
    const double c = p_.c;
    const double yi = ys_[i];
    const double yj = ys_[j];
    const double s = yi * yj;
    const double ai = alpha_[i];
    const double aj = alpha_[j];
    double lo = 0.0;
    double hi = 0.0;
    if (s < 0) {
      lo = std::max(0.0, aj - ai);
      hi = std::min(c, c + aj - ai);
    } else {
      lo = std::max(0.0, ai + aj - c);
      hi = std::min(c, ai + aj);
    }
    if (hi - lo <= 0.0) return std::nullopt;

    const double eta = k(i, i) + k(j, j) - 2.0 * k(i, j);
    const double slope = yj * (f_[i] - f_[j]);
    auto gain_at = [&](double t) { return slope * t - 0.5 * eta * t * t; };

    double aj_new = aj;
    if (eta > 1e-12) {
      aj_new = std::clamp(aj + slope / eta, lo, hi);
    } else {
      const double g_lo = gain_at(lo - aj);
      const double g_hi = gain_at(hi - aj);
      aj_new = g_hi >= g_lo ? hi : lo;
    }
    const double t = aj_new - aj;
    if (std::abs(t) <= 1e-12 * std::max(1.0, c)) return std::nullopt;
    const double gain = gain_at(t);
    if (!(gain > 0.0)) return std::nullopt;

    double ai_new = ai - s * t;
    ai_new = snap(ai_new);
    aj_new = snap(aj_new);
    const double dai = (ai_new - ai) * yi;
    const double daj = (aj_new - aj) * yj;
    alpha_[i] = ai_new;
    alpha_[j] = aj_new;
    for (std::size_t q = 0; q < n_; ++q) f_[q] += dai * k(i, q) + daj * k(j, q);
    return gain;
  }

  double snap(double a) const {
    const double eps = 1e-12 * std::max(1.0, p_.c);
    if (a < eps) return 0.0;
    if (a > p_.c - eps) return p_.c;
    return a;
  }

  // Threshold rho (bias = -rho): mean of F over free multipliers, else the
  // midpoint of the feasible interval.
  double rho() const {
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    long n_free = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double fi = f_[i];
      if (alpha_[i] >= p_.c) {
        if (ys_[i] < 0) ub = std::min(ub, fi); else lb = std::max(lb, fi);
      } else if (alpha_[i] <= 0.0) {
        if (ys_[i] > 0) ub = std::min(ub, fi); else lb = std::max(lb, fi);
      } else {
        sum += fi;
        ++n_free;
      }
    }
    if (n_free > 0) return sum / static_cast<double>(n_free);
    if (std::isfinite(ub) && std::isfinite(lb)) return 0.5 * (ub + lb);
    if (std::isfinite(ub)) return ub;
    if (std::isfinite(lb)) return lb;
    return 0.0;
  }

  std::span<const SparseVector> xs_;
  std::span<const int> ys_;
  SmoParams p_;
  std::size_t n_;
  std::vector<double> gram_;
  std::vector<double> alpha_;
  std::vector<double> f_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> candidates_;
};

}  // namespace detail

/// Labels must be +1/-1 with both present.
inline SmoResult train_smo(std::span<const SparseVector> xs, std::span<const int> ys, const SmoParams& params,
                           bool record_objective = false) {
  if (xs.empty()) throw Error(ErrorKind::Precondition, "train_smo: empty training set");
  if (xs.size() != ys.size()) throw Error(ErrorKind::Precondition, "train_smo: feature/label count mismatch");
  if (!(params.c > 0.0) || !(params.gamma > 0.0) || !(params.tol > 0.0) || params.max_passes < 1) {
    throw Error(ErrorKind::Precondition, "train_smo: c, gamma, tol and max_passes must be positive");
  }
  bool pos = false;
  bool neg = false;
  for (int y : ys) {
    if (y == 1) pos = true;
    else if (y == -1) neg = true;
    else throw Error(ErrorKind::Precondition, "train_smo: labels must be +1 or -1");
  }
  if (!pos || !neg) throw Error(ErrorKind::Precondition, "train_smo: both classes must be present");
  return detail::SmoSolver(xs, ys, params).run(record_objective);
}

struct KktViolation {
  std::size_t index;
  double alpha;
  double margin;  // y_i * f(x_i)
};

/// Checks every training point against the KKT conditions of the trained
/// model: y f(x) >= 1 - tol at alpha = 0, <= 1 + tol at alpha = C, and
/// within tol of 1 in between.
inline std::vector<KktViolation> kkt_audit(std::span<const SparseVector> xs, std::span<const int> ys,
                                           std::span<const double> alpha, const SvmBinaryModel& model, double c,
                                           double tol) {
  std::vector<KktViolation> bad;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double margin = ys[i] * decision_value(model, xs[i]);
    const double a = alpha[i];
    bool ok = true;
    if (a <= kSupportVectorFloor) {
      ok = margin >= 1.0 - tol;
    } else if (a >= c - kSupportVectorFloor) {
      ok = margin <= 1.0 + tol;
    } else {
      ok = std::abs(margin - 1.0) <= tol;
    }
    if (!ok) bad.push_back({i, a, margin});
  }
  return bad;
}

}  // namespace triage
