#include "gnssro/preprocess/gpr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gnssro/core/error.hpp"

namespace gnssro::preprocess {

namespace {

struct ChunkPosterior {
  Eigen::VectorXd mean;
  Eigen::VectorXd derivative;
  Eigen::VectorXd sigma;
};

// Exact GP posterior (mean, analytic mean derivative, sd) at the training
// points for a squared-exponential kernel plus white noise.
ChunkPosterior solve_chunk(const Eigen::VectorXd& t, const Eigen::VectorXd& y, double ell,
                           double sigma_f, double sigma_n) {
  const long n = t.size();
  const double sf2 = sigma_f * sigma_f;

  Eigen::MatrixXd kf(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j <= i; ++j) {
      const double d = (t(i) - t(j)) / ell;
      const double v = sf2 * std::exp(-0.5 * d * d);
      kf(i, j) = v;
      kf(j, i) = v;
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt;
  double jitter = 0.0;
  for (double scale = 1e-10; scale <= 1e-6 * 1.001; scale *= 10.0) {
    Eigen::MatrixXd ky = kf;
    ky.diagonal().array() += sigma_n * sigma_n + jitter;
    llt.compute(ky);
    if (llt.info() == Eigen::Success) break;
    jitter = scale * sf2;
  }
  if (llt.info() != Eigen::Success) {
    throw Error("gpr_smooth: kernel matrix not positive definite after jitter escalation");
  }

  const Eigen::VectorXd alpha = llt.solve(y);
  ChunkPosterior post;
  post.mean = kf * alpha;
  post.derivative.resize(n);
  for (long i = 0; i < n; ++i) {
    double d = 0.0;
    for (long j = 0; j < n; ++j) {
      d += -(t(i) - t(j)) / (ell * ell) * kf(i, j) * alpha(j);
    }
    post.derivative(i) = d;
  }
  const Eigen::MatrixXd m = llt.solve(kf);
  post.sigma.resize(n);
  for (long i = 0; i < n; ++i) {
    const double var = kf(i, i) - kf.row(i).dot(m.col(i));
    post.sigma(i) = std::sqrt(std::max(var, 0.0));
  }
  return post;
}

}  // namespace

ExcessPhaseSeries gpr_smooth(const ExcessPhaseSeries& s, const GprConfig& cfg) {
  require_stage(s, Stage::SlipCorrected, "gpr_smooth");
  if (cfg.length_scale <= 0.0) throw Error("gpr_smooth: length_scale must be positive");
  if (cfg.chunk <= 2 * cfg.overlap) throw Error("gpr_smooth: chunk must exceed 2*overlap");

  ExcessPhaseSeries out = s;
  out.stage = Stage::Smoothed;

  std::vector<size_t> valid;
  for (size_t i = 0; i < out.epochs.size(); ++i) {
    if (out.epochs[i].valid) valid.push_back(i);
  }
  const long n = static_cast<long>(valid.size());
  if (n < 3) throw Error("gpr_smooth: too few valid samples");

  const double t0 = total_seconds(out.epochs[valid.front()].t);
  Eigen::VectorXd t(n), y(n);
  for (long k = 0; k < n; ++k) {
    t(k) = total_seconds(out.epochs[valid[k]].t) - t0;
    y(k) = out.epochs[valid[k]].excess_phase;
  }

  // Global quadratic detrend; the GP models the residual. Scaled time keeps
  // the normal equations well conditioned.
  const double t_mid = 0.5 * (t(0) + t(n - 1));
  const double t_half = std::max(0.5 * (t(n - 1) - t(0)), 1.0);
  Eigen::MatrixXd design(n, 3);
  for (long k = 0; k < n; ++k) {
    const double u = (t(k) - t_mid) / t_half;
    design(k, 0) = 1.0;
    design(k, 1) = u;
    design(k, 2) = u * u;
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(y);
  Eigen::VectorXd trend(n), trend_dot(n);
  for (long k = 0; k < n; ++k) {
    const double u = (t(k) - t_mid) / t_half;
    trend(k) = coef(0) + coef(1) * u + coef(2) * u * u;
    trend_dot(k) = (coef(1) + 2.0 * coef(2) * u) / t_half;
  }
  Eigen::VectorXd resid = y - trend;

  double sigma_f = cfg.signal_sigma;
  if (sigma_f <= 0.0) {
    sigma_f = std::sqrt(resid.squaredNorm() / static_cast<double>(std::max<long>(n - 1, 1)));
    if (sigma_f < cfg.noise_sigma) sigma_f = cfg.noise_sigma;  // degenerate constant input
  }

  Eigen::VectorXd mean(n), deriv(n), sigma(n);
  Eigen::VectorXd weight = Eigen::VectorXd::Zero(n);
  mean.setZero();
  deriv.setZero();
  sigma.setZero();

  const long chunk = std::min<long>(cfg.chunk, n);
  const long step = std::max<long>(chunk - cfg.overlap, 1);
  for (long start = 0;; start += step) {
    long lo = start;
    long hi = std::min(lo + chunk, n);
    if (hi - lo < chunk && n >= chunk) lo = n - chunk;  // full-width tail chunk
    const long m = hi - lo;

    const ChunkPosterior post = solve_chunk(t.segment(lo, m), resid.segment(lo, m),
                                            cfg.length_scale, sigma_f, cfg.noise_sigma);
    for (long k = 0; k < m; ++k) {
      const long idx = lo + k;
      double w = 1.0;
      if (start > 0 && k < cfg.overlap) {
        w = static_cast<double>(k + 1) / static_cast<double>(cfg.overlap + 1);
      }
      // Cross-fade against whatever previous chunks wrote.
      const double w_old = weight(idx);
      const double blend_new = w_old > 0.0 ? w : 1.0;
      mean(idx) = (1.0 - blend_new) * mean(idx) + blend_new * post.mean(k);
      deriv(idx) = (1.0 - blend_new) * deriv(idx) + blend_new * post.derivative(k);
      sigma(idx) = (1.0 - blend_new) * sigma(idx) + blend_new * post.sigma(k);
      weight(idx) = 1.0;
    }
    if (hi >= n) break;
  }

  for (long k = 0; k < n; ++k) {
    auto& ep = out.epochs[valid[k]];
    ep.excess_phase = trend(k) + mean(k);
    ep.excess_doppler = trend_dot(k) + deriv(k);
    ep.posterior_sigma = sigma(k);
  }
  return out;
}

}  // namespace gnssro::preprocess
