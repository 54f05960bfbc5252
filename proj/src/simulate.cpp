#include "doflab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "doflab/parallel.hpp"
#include "doflab/rng.hpp"

namespace doflab {

ChannelDraw sample_channels(const AntennaConfig& cfg, std::uint64_t seed,
                            std::uint64_t trial) {
  validate(cfg);
  Rng rng = Rng::substream(seed, trial);
  ChannelDraw draw;
  draw.h11_slots.reserve(cfg.n1);
  for (int t = 0; t < cfg.n1; ++t)
    draw.h11_slots.push_back(rng.complex_gaussian(cfg.n1, cfg.m1));
  draw.h12 = rng.complex_gaussian(cfg.n1, cfg.m2_active());
  draw.h22 = rng.complex_gaussian(cfg.n2, cfg.m2_active());
  return draw;
}

double rate_user1(const BiaScheme& scheme, const ChannelDraw& draw,
                  double power) {
  const int m1 = scheme.cfg.m1, n1 = scheme.cfg.n1;
  const ComplexMatrix u = build_u(scheme.q, draw.h11_slots);
  const ComplexMatrix noise_cov = scheme.q_tilde * scheme.q_tilde.adjoint();
  const double rho = power / (double(m1) * n1);
  return shannon_logdet(u, noise_cov, rho) / n1;
}

double rate_user2(const BiaScheme& scheme, const ChannelDraw& draw,
                  double power) {
  const int n1 = scheme.cfg.n1;
  const int streams = scheme.m2_active * (n1 - scheme.cfg.m1);
  const ComplexMatrix g = kron(scheme.p, draw.h22);
  const ComplexMatrix noise_cov =
      ComplexMatrix::Identity(g.rows(), g.rows());
  return shannon_logdet(g, noise_cov, power / streams) / n1;
}

DofEstimate estimate_dof(const std::vector<RatePoint>& points) {
  if (points.size() < 2)
    throw std::domain_error("estimate_dof: need at least two rate points");
  std::set<double> powers;
  for (const RatePoint& p : points) {
    if (!(p.power > 0.0))
      throw std::domain_error("estimate_dof: powers must be positive");
    powers.insert(p.power);
  }
  if (powers.size() < 2)
    throw std::domain_error("estimate_dof: powers must be distinct");

  const double n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_r1 = 0.0, mean_r2 = 0.0;
  for (const RatePoint& p : points) {
    mean_x += std::log2(p.power);
    mean_r1 += p.r1;
    mean_r2 += p.r2;
  }
  mean_x /= n;
  mean_r1 /= n;
  mean_r2 /= n;

  double sxx = 0.0, sx1 = 0.0, sx2 = 0.0;
  for (const RatePoint& p : points) {
    const double dx = std::log2(p.power) - mean_x;
    sxx += dx * dx;
    sx1 += dx * (p.r1 - mean_r1);
    sx2 += dx * (p.r2 - mean_r2);
  }
  return {sx1 / sxx, sx2 / sxx};
}

double monte_carlo_rank(const AntennaConfig& cfg, int trials,
                        std::uint64_t seed, double rel_tol) {
  validate_scheme_config(cfg);
  if (trials < 1)
    throw std::domain_error("monte_carlo_rank: trials must be >= 1");
  const ComplexMatrix q = build_q(cfg.m1, cfg.n1);
  const ComplexMatrix p = build_p(cfg.m1, cfg.n1);

  std::vector<char> passed(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    const ChannelDraw draw = sample_channels(cfg, seed, t);
    passed[t] =
        verify(cfg, q, p, draw.h11_slots, draw.h12, rel_tol).pass ? 1 : 0;
  });
  const long hits = std::count(passed.begin(), passed.end(), 1);
  return static_cast<double>(hits) / trials;
}

bool zf_feasibility(const AntennaConfig& cfg, int d1, int d2,
                    std::uint64_t seed) {
  validate(cfg);
  if (cfg.n1 < cfg.n2)
    throw std::domain_error("zf_feasibility: requires N1 >= N2");
  if (d1 < 0 || d1 > std::min(cfg.m1, cfg.n1))
    throw std::domain_error("zf_feasibility: d1 outside 0..min(M1,N1)");
  if (d2 < 0 || d2 > std::min(cfg.m2, cfg.n2))
    throw std::domain_error("zf_feasibility: d2 outside 0..min(M2,N2)");
  if (d1 + d2 == 0) return true;  // empty stream set

  Rng rng = Rng::substream(seed, 0);
  const ComplexMatrix h11 = rng.complex_gaussian(cfg.n1, cfg.m1);
  const ComplexMatrix h12 = rng.complex_gaussian(cfg.n1, cfg.m2);
  ComplexMatrix combined(cfg.n1, d1 + d2);
  if (d1 > 0)
    combined.leftCols(d1) = h11 * rng.complex_gaussian(cfg.m1, d1);
  if (d2 > 0)
    combined.rightCols(d2) = h12 * rng.complex_gaussian(cfg.m2, d2);
  return numerical_rank(combined) == d1 + d2;
}

RateSweepResult rate_sweep(const AntennaConfig& cfg,
                           const std::vector<double>& powers_db, int trials,
                           std::uint64_t seed) {
  validate_scheme_config(cfg);
  if (trials < 1)
    throw std::domain_error("rate_sweep: trials must be >= 1");
  if (powers_db.size() < 2)
    throw std::domain_error("rate_sweep: need at least two powers");
  std::vector<double> db = powers_db;
  std::sort(db.begin(), db.end());
  if (std::adjacent_find(db.begin(), db.end()) != db.end())
    throw std::domain_error("rate_sweep: powers must be distinct");

  const BiaScheme scheme = make_scheme(cfg);
  const std::size_t n_powers = db.size();
  std::vector<SweepRow> rows(n_powers * trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    const ChannelDraw draw = sample_channels(cfg, seed, t);
    for (std::size_t k = 0; k < n_powers; ++k) {
      const double power = std::pow(10.0, db[k] / 10.0);
      rows[k * trials + t] = {db[k], rate_user1(scheme, draw, power),
                              rate_user2(scheme, draw, power),
                              static_cast<int>(t)};
    }
  });

  RateSweepResult result;
  result.rows = std::move(rows);
  result.mean_points.reserve(n_powers);
  for (std::size_t k = 0; k < n_powers; ++k) {
    RatePoint mean{std::pow(10.0, db[k] / 10.0), 0.0, 0.0};
    for (int t = 0; t < trials; ++t) {
      mean.r1 += result.rows[k * trials + t].r1_bits;
      mean.r2 += result.rows[k * trials + t].r2_bits;
    }
    mean.r1 /= trials;
    mean.r2 /= trials;
    result.mean_points.push_back(mean);
  }
  result.estimate = estimate_dof(result.mean_points);
  return result;
}

}  // namespace doflab
