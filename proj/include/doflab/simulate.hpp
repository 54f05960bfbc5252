#pragma once

#include <cstdint>
#include <vector>

#include "doflab/antenna_config.hpp"
#include "doflab/biascheme.hpp"
#include "doflab/matkernel.hpp"

namespace doflab {

// One Monte Carlo channel realization: per-slot H11 (transmitter 1 switches
// antenna modes every slot), H12 and H22 constant over the N1-slot block.
// User 2 is restricted to its min(M2,N2) active antennas.
struct ChannelDraw {
  std::vector<ComplexMatrix> h11_slots;  // N1 matrices, each N1 x M1
  ComplexMatrix h12;                     // N1 x M2'
  ComplexMatrix h22;                     // N2 x M2'
};

// Achievable rates (bits per channel use per slot) at one transmit power.
struct RatePoint {
  double power = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
};

// High-SNR slopes of the two rates versus log2(power).
struct DofEstimate {
  double d1_hat = 0.0;
  double d2_hat = 0.0;
};

// i.i.d. CN(0,1) entries, bit-reproducible from (seed, trial).
ChannelDraw sample_channels(const AntennaConfig& cfg, std::uint64_t seed,
                            std::uint64_t trial);

// Rate of user 1 after nulling: (1/N1) log2 det(I + rho K^-1 U U^H) with
// rho = power/(M1*N1) and K = Q~ Q~^H, the colored post-nulling noise.
double rate_user1(const BiaScheme& scheme, const ChannelDraw& draw,
                  double power);

// Rate of the interference-free user 2: (1/N1) log2 det(I + rho G G^H)
// with G = kron(p, h22) and rho = power/(M2'*(N1-M1)).
double rate_user2(const BiaScheme& scheme, const ChannelDraw& draw,
                  double power);

// Least-squares slope of each rate against log2(power). Needs at least two
// points at distinct powers; throws std::domain_error otherwise.
DofEstimate estimate_dof(const std::vector<RatePoint>& points);

// Fraction of trials on which the DFT scheme passes verification with
// i.i.d. Gaussian h11 slots. Requires a valid scheme config and trials >= 1.
double monte_carlo_rank(const AntennaConfig& cfg, int trials,
                        std::uint64_t seed, double rel_tol = kDefaultRankTol);

// Zero-forcing feasibility at receiver 1 for integer stream counts
// (d1, d2): draws random beamformers W1, W2 and one channel realization and
// checks that [H11 W1 | H12 W2] has numerical rank d1 + d2.
// Requires N1 >= N2, 0 <= d1 <= min(M1,N1), 0 <= d2 <= min(M2,N2).
bool zf_feasibility(const AntennaConfig& cfg, int d1, int d2,
                    std::uint64_t seed);

// One CSV row of a rate sweep.
struct SweepRow {
  double power_db = 0.0;
  double r1_bits = 0.0;
  double r2_bits = 0.0;
  int trial = 0;
};

struct RateSweepResult {
  std::vector<SweepRow> rows;          // sorted by power, then trial
  std::vector<RatePoint> mean_points;  // per-power trial averages
  DofEstimate estimate;
};

// Runs `trials` draws of the DFT scheme at each power (dB values over a
// per-transmitter total power), reusing the same draw across powers so the
// slope estimate is paired. Deterministic given (cfg, powers, trials, seed).
RateSweepResult rate_sweep(const AntennaConfig& cfg,
                           const std::vector<double>& powers_db, int trials,
                           std::uint64_t seed);

}  // namespace doflab
