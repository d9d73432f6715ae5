#include "gnssro/preprocess/cycle_slips.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gnssro/core/constants.hpp"
#include "gnssro/core/error.hpp"

namespace gnssro::preprocess {

using constants::lambda_l1;

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    m = 0.5 * (m + v[mid - 1]);
  }
  return m;
}

struct TrendFit {
  // y(t) = a + b*exp(c*tau), or the quadratic a + b*tau + c*tau^2 fallback
  double a = 0.0, b = 0.0, c = 0.0;
  bool quadratic = false;

  double eval(double tau) const {
    return quadratic ? a + b * tau + c * tau * tau : a + b * std::exp(c * tau);
  }
};

TrendFit fit_quadratic(const std::vector<double>& tau, const std::vector<double>& y) {
  const long n = static_cast<long>(tau.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (long i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = tau[i];
    design(i, 2) = tau[i] * tau[i];
    rhs(i) = y[i];
  }
  const Eigen::Vector3d sol = design.colPivHouseholderQr().solve(rhs);
  TrendFit f;
  f.quadratic = true;
  f.a = sol(0);
  f.b = sol(1);
  f.c = sol(2);
  return f;
}

// Damped Gauss-Newton on (A, B, C). Initialization per the arc shape:
// A = first sample, C from the log-slope of the tail, B from the range.
TrendFit fit_exponential(const std::vector<double>& tau, const std::vector<double>& y) {
  const long n = static_cast<long>(tau.size());
  const double span = tau.back() - tau.front();
  TrendFit f;
  f.a = y.front();
  const double range = y.back() - y.front();

  double c0 = 1.0 / std::max(span, 1.0);
  {
    const long k_mid = n - 1 - n / 4;
    const double num = y.back() - f.a;
    const double den = y[k_mid] - f.a;
    if (num * den > 0.0 && std::abs(num) > std::abs(den) && tau.back() > tau[k_mid]) {
      c0 = std::log(num / den) / (tau.back() - tau[k_mid]);
    }
  }
  f.c = c0;
  f.b = (std::abs(range) > 0.0 && std::isfinite(std::exp(c0 * span)))
            ? range / std::max(std::exp(c0 * span) - 1.0, 1e-12)
            : 0.0;

  auto cost = [&](const TrendFit& g) {
    double s = 0.0;
    for (long i = 0; i < n; ++i) {
      const double r = y[i] - g.eval(tau[i]);
      s += r * r;
    }
    return s;
  };

  double lambda = 1e-3;
  double prev_cost = cost(f);
  for (int it = 0; it < 60; ++it) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (long i = 0; i < n; ++i) {
      const double ex = std::exp(f.c * tau[i]);
      const double r = y[i] - (f.a + f.b * ex);
      const Eigen::Vector3d grad(1.0, ex, f.b * tau[i] * ex);
      jtj += grad * grad.transpose();
      jtr += grad * r;
    }
    Eigen::Matrix3d damped = jtj;
    damped.diagonal() += lambda * jtj.diagonal();
    const Eigen::Vector3d step = damped.ldlt().solve(jtr);
    TrendFit trial = f;
    trial.a += step(0);
    trial.b += step(1);
    trial.c += step(2);
    if (!std::isfinite(trial.c) || std::abs(trial.c * span) > 700.0) {
      throw Error("exponential fit diverged");
    }
    const double trial_cost = cost(trial);
    if (std::isfinite(trial_cost) && trial_cost <= prev_cost) {
      const double improvement = prev_cost - trial_cost;
      f = trial;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (improvement <= 1e-14 * std::max(prev_cost, 1.0)) break;
      prev_cost = trial_cost;
    } else {
      lambda *= 10.0;
      if (lambda > 1e10) throw Error("exponential fit diverged");
    }
  }
  return f;
}

}  // namespace

std::pair<ExcessPhaseSeries, SlipReport> correct_cycle_slips(const ExcessPhaseSeries& s,
                                                             const CycleSlipConfig& cfg) {
  require_stage(s, Stage::Calibrated, "correct_cycle_slips");
  ExcessPhaseSeries out = s;
  out.stage = Stage::SlipCorrected;
  SlipReport report;

  std::vector<size_t> valid;
  for (size_t i = 0; i < out.epochs.size(); ++i) {
    if (out.epochs[i].valid) valid.push_back(i);
  }
  if (valid.size() < cfg.min_samples) {
    throw Error("correct_cycle_slips: fewer than the required samples");
  }

  const double t0 = total_seconds(out.epochs[valid.front()].t);
  std::vector<double> tau(valid.size());
  for (size_t k = 0; k < valid.size(); ++k) {
    tau[k] = total_seconds(out.epochs[valid[k]].t) - t0;
  }

  for (int pass = 0; pass < cfg.max_passes; ++pass) {
    report.passes = pass + 1;
    std::vector<double> y(valid.size());
    for (size_t k = 0; k < valid.size(); ++k) y[k] = out.epochs[valid[k]].excess_phase;

    TrendFit fit;
    try {
      fit = fit_exponential(tau, y);
    } catch (const Error&) {
      fit = fit_quadratic(tau, y);
      report.quadratic_fallback = true;
    }

    std::vector<double> diffs(valid.size() - 1);
    for (size_t k = 0; k + 1 < valid.size(); ++k) {
      const double r1 = y[k + 1] - fit.eval(tau[k + 1]);
      const double r0 = y[k] - fit.eval(tau[k]);
      diffs[k] = r1 - r0;
    }
    std::vector<double> dev(diffs.size());
    const double med = median(diffs);
    for (size_t k = 0; k < diffs.size(); ++k) dev[k] = std::abs(diffs[k] - med);
    const double mad = median(dev);
    const double threshold =
        std::max(cfg.mad_factor * mad, cfg.floor_wavelengths * lambda_l1);

    // Correct every slip found this pass. A correction shifts all later
    // samples by the same constant, so the remaining first-differences stay
    // valid within the pass; the next pass re-fits and refines.
    bool found = false;
    for (size_t k = 0; k + 1 < valid.size(); ++k) {
      if (std::abs(diffs[k]) <= threshold) continue;
      const int cycles = static_cast<int>(std::lround(diffs[k] / lambda_l1));
      if (cycles == 0) continue;
      SlipEvent ev;
      ev.t = out.epochs[valid[k + 1]].t;
      ev.jump_m = diffs[k];
      ev.corrected_cycles = -cycles;
      report.entries.push_back(ev);
      for (size_t m = k + 1; m < valid.size(); ++m) {
        out.epochs[valid[m]].excess_phase -= cycles * lambda_l1;
      }
      out.epochs[valid[k + 1]].flag = EpochFlag::SlipCorrected;
      found = true;
    }
    if (!found) break;
  }

  // Later passes may refine a boundary already corrected; report the net
  // integer correction per epoch, dropping boundaries that net to zero.
  std::vector<SlipEvent> merged;
  for (const auto& ev : report.entries) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const SlipEvent& m) {
      return total_seconds(m.t) == total_seconds(ev.t);
    });
    if (it == merged.end()) {
      merged.push_back(ev);
    } else {
      it->corrected_cycles += ev.corrected_cycles;
    }
  }
  std::erase_if(merged, [](const SlipEvent& m) { return m.corrected_cycles == 0; });
  report.entries = std::move(merged);
  return {std::move(out), std::move(report)};
}

}  // namespace gnssro::preprocess
