#pragma once

#include <vector>

#include "doflab/antenna_config.hpp"
#include "doflab/matkernel.hpp"

namespace doflab {

// Blind interference-alignment artifacts over a T = N1 slot expansion.
// Q nulls user 2's interference at receiver 1, P confines user 2's signal
// to the annihilated subspace; the tilde versions act on stacked slots.
struct BiaScheme {
  AntennaConfig cfg;
  int expansion = 0;      // T = N1 slots
  int m2_active = 0;      // min(M2, N2)
  ComplexMatrix q;        // M1 x N1
  ComplexMatrix p;        // N1 x (N1 - M1)
  ComplexMatrix q_tilde;  // (M1*N1) x N1^2   = kron(q, I_N1)
  ComplexMatrix p_tilde;  // (M2'*N1) x (M2'*(N1-M1)) = kron(p, I_M2')
};

// Per-slot direct channels plus their stacked forms.
struct TimeExpandedChannels {
  std::vector<ComplexMatrix> h11_slots;  // N1 matrices, each N1 x M1
  ComplexMatrix h12;                     // N1 x M2'
  ComplexMatrix h22;                     // N2 x M2'
  ComplexMatrix h11_tilde;               // N1^2 x (N1*M1), block diagonal
  ComplexMatrix h12_tilde;               // N1^2 x (N1*M2') = kron(I_N1, h12)
};

// Ranks and residuals for the three sufficiency conditions.
struct VerificationReport {
  int rank_u = 0;
  int rank_u_required = 0;
  int rank_p_tilde = 0;
  int rank_p_required = 0;
  double v_frobenius = 0.0;
  double min_singular_u = 0.0;
  double rank_tol = kDefaultRankTol;
  double null_threshold = 0.0;  // scale-aware bound applied to v_frobenius
  bool pass = false;
};

// Nulling matrix: entry (m, n) = exp(-j*2*pi*m*n/N1), the first M1 rows of
// the N1-point DFT. Requires m1 < n1.
ComplexMatrix build_q(int m1, int n1);

// Beamforming matrix: the last N1-M1 columns of the conjugate DFT matrix,
// chosen so that Q*P = 0. Requires m1 < n1.
ComplexMatrix build_p(int m1, int n1);

// Deterministic channel realization for slot t (1-indexed): entry (r, c) is
// W^{r*(c*N1 + t - 1)} with W = exp(-j*2*pi/N1^2), indices 0-based.
// These make U a Vandermonde matrix with distinct columns.
ComplexMatrix special_h11(int t, int m1, int n1);

// All N1 special realizations in slot order.
std::vector<ComplexMatrix> special_h11_slots(int m1, int n1);

// Stacks per-slot channels: h11 block-diagonal, h12 repeated (user 2
// creates no channel variation).
TimeExpandedChannels time_expand(const AntennaConfig& cfg,
                                 std::vector<ComplexMatrix> h11_slots,
                                 ComplexMatrix h12, ComplexMatrix h22);

// Post-nulling signal matrix U = kron(q, I_N1) * h11_tilde, assembled
// directly from its N1 x M1 blocks q(m,t) * h11_slots[t].
ComplexMatrix build_u(const ComplexMatrix& q,
                      const std::vector<ComplexMatrix>& h11_slots);

// Residual interference V = kron(q*p, h12). Also evaluates the direct
// product kron(q,I)*kron(I,h12)*kron(p,I) and throws std::logic_error if
// the two routes disagree beyond 1e-9 (they are equal by the mixed-product
// identity).
ComplexMatrix build_v(const ComplexMatrix& q, const ComplexMatrix& p,
                      const ComplexMatrix& h12);

// DFT-based Q/P plus the Kronecker expansions for a valid scheme config.
BiaScheme make_scheme(const AntennaConfig& cfg);

// Checks the three sufficiency conditions: rank(U) = M1*N1,
// rank(P~) = M2'*(N1-M1), and ||V||_F below the scale-aware nulling
// threshold null_tol * (||h12||_F + 1). rank(P~) is cross-checked against
// rank(P) * M2'.
VerificationReport verify(const AntennaConfig& cfg, const ComplexMatrix& q,
                          const ComplexMatrix& p,
                          const std::vector<ComplexMatrix>& h11_slots,
                          const ComplexMatrix& h12,
                          double rel_tol = kDefaultRankTol,
                          double null_tol = kDefaultNullTol);

// Structural reference for U under special realizations: the leading
// principal minor of side M1*N1 of the N1^2-point DFT matrix after
// permuting columns into the order (0, N1, ..., (M1-1)N1), (1, N1+1, ...).
ComplexMatrix permuted_fft_minor(int m1, int n1);

}  // namespace doflab
