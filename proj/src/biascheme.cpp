#include "doflab/biascheme.hpp"

#include <stdexcept>
#include <string>

namespace doflab {

namespace {

void require_m1_less_n1(int m1, int n1) {
  if (m1 < 1 || n1 < 1)
    throw std::domain_error("antenna counts must be positive");
  if (!(m1 < n1)) throw std::domain_error("M1 < N1 violated");
}

}  // namespace

ComplexMatrix build_q(int m1, int n1) {
  require_m1_less_n1(m1, n1);
  ComplexMatrix q(m1, n1);
  for (int m = 0; m < m1; ++m)
    for (int n = 0; n < n1; ++n)
      q(m, n) = unit_root(std::int64_t(m) * n, n1);
  return q;
}

ComplexMatrix build_p(int m1, int n1) {
  require_m1_less_n1(m1, n1);
  ComplexMatrix p(n1, n1 - m1);
  for (int n = 0; n < n1; ++n)
    for (int m = m1; m < n1; ++m)
      p(n, m - m1) = unit_root(-std::int64_t(m) * n, n1);  // conjugate root
  return p;
}

ComplexMatrix special_h11(int t, int m1, int n1) {
  require_m1_less_n1(m1, n1);
  if (t < 1 || t > n1)
    throw std::domain_error("slot index " + std::to_string(t) +
                            " outside 1.." + std::to_string(n1));
  const std::int64_t n_sq = std::int64_t(n1) * n1;
  ComplexMatrix h(n1, m1);
  for (int r = 0; r < n1; ++r)
    for (int c = 0; c < m1; ++c)
      h(r, c) = unit_root(std::int64_t(r) * (std::int64_t(c) * n1 + t - 1), n_sq);
  return h;
}

std::vector<ComplexMatrix> special_h11_slots(int m1, int n1) {
  std::vector<ComplexMatrix> slots;
  slots.reserve(n1);
  for (int t = 1; t <= n1; ++t) slots.push_back(special_h11(t, m1, n1));
  return slots;
}

TimeExpandedChannels time_expand(const AntennaConfig& cfg,
                                 std::vector<ComplexMatrix> h11_slots,
                                 ComplexMatrix h12, ComplexMatrix h22) {
  validate(cfg);
  const int n1 = cfg.n1, m1 = cfg.m1, m2p = cfg.m2_active();
  if (static_cast<int>(h11_slots.size()) != n1)
    throw std::invalid_argument("time_expand: expected " + std::to_string(n1) +
                                " slots, got " + std::to_string(h11_slots.size()));
  for (int t = 0; t < n1; ++t) {
    const ComplexMatrix& h = h11_slots[t];
    if (h.rows() != n1 || h.cols() != m1)
      throw std::invalid_argument(
          "time_expand: slot " + std::to_string(t + 1) + " is " +
          std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
          ", expected " + std::to_string(n1) + "x" + std::to_string(m1));
    require_finite(h, "time_expand: h11 slot");
  }
  if (h12.rows() != n1 || h12.cols() != m2p)
    throw std::invalid_argument("time_expand: h12 must be N1 x min(M2,N2)");
  if (h22.rows() != cfg.n2 || h22.cols() != m2p)
    throw std::invalid_argument("time_expand: h22 must be N2 x min(M2,N2)");
  require_finite(h12, "time_expand: h12");
  require_finite(h22, "time_expand: h22");

  TimeExpandedChannels out;
  out.h11_tilde = ComplexMatrix::Zero(std::int64_t(n1) * n1, std::int64_t(n1) * m1);
  for (int t = 0; t < n1; ++t)
    out.h11_tilde.block(std::int64_t(t) * n1, std::int64_t(t) * m1, n1, m1) =
        h11_slots[t];
  out.h12_tilde = kron(ComplexMatrix::Identity(n1, n1), h12);
  out.h11_slots = std::move(h11_slots);
  out.h12 = std::move(h12);
  out.h22 = std::move(h22);
  return out;
}

ComplexMatrix build_u(const ComplexMatrix& q,
                      const std::vector<ComplexMatrix>& h11_slots) {
  const int m1 = static_cast<int>(q.rows());
  const int n1 = static_cast<int>(q.cols());
  if (static_cast<int>(h11_slots.size()) != n1)
    throw std::invalid_argument("build_u: expected " + std::to_string(n1) +
                                " slots, got " + std::to_string(h11_slots.size()));
  for (const ComplexMatrix& h : h11_slots)
    if (h.rows() != n1 || h.cols() != m1)
      throw std::invalid_argument("build_u: slot shape must be N1 x M1");

  // Block (m, t) is q(m, t) * h11_slots[t]; equal to kron(q, I_N1) * h11_tilde.
  ComplexMatrix u(std::int64_t(m1) * n1, std::int64_t(n1) * m1);
  for (int m = 0; m < m1; ++m)
    for (int t = 0; t < n1; ++t)
      u.block(std::int64_t(m) * n1, std::int64_t(t) * m1, n1, m1) =
          q(m, t) * h11_slots[t];
  return u;
}

ComplexMatrix build_v(const ComplexMatrix& q, const ComplexMatrix& p,
                      const ComplexMatrix& h12) {
  if (q.cols() != p.rows())
    throw std::invalid_argument("build_v: q*p dimensions do not match");
  const int n1 = static_cast<int>(q.cols());
  const int m2p = static_cast<int>(h12.cols());
  if (h12.rows() != n1)
    throw std::invalid_argument("build_v: h12 must have N1 rows");

  const ComplexMatrix via_kron = kron(q * p, h12);
  const ComplexMatrix identity_n1 = ComplexMatrix::Identity(n1, n1);
  const ComplexMatrix identity_m2 = ComplexMatrix::Identity(m2p, m2p);
  const ComplexMatrix direct =
      kron(q, identity_n1) * kron(identity_n1, h12) * kron(p, identity_m2);

  const double scale = 1.0 + q.norm() * p.norm() * h12.norm();
  if ((via_kron - direct).norm() > 1e-9 * scale)
    throw std::logic_error(
        "build_v: mixed-product identity violated beyond 1e-9");
  return via_kron;
}

BiaScheme make_scheme(const AntennaConfig& cfg) {
  validate_scheme_config(cfg);
  BiaScheme s;
  s.cfg = cfg;
  s.expansion = cfg.n1;
  s.m2_active = cfg.m2_active();
  s.q = build_q(cfg.m1, cfg.n1);
  s.p = build_p(cfg.m1, cfg.n1);
  s.q_tilde = kron(s.q, ComplexMatrix::Identity(cfg.n1, cfg.n1));
  s.p_tilde = kron(s.p, ComplexMatrix::Identity(s.m2_active, s.m2_active));
  return s;
}

VerificationReport verify(const AntennaConfig& cfg, const ComplexMatrix& q,
                          const ComplexMatrix& p,
                          const std::vector<ComplexMatrix>& h11_slots,
                          const ComplexMatrix& h12, double rel_tol,
                          double null_tol) {
  validate_scheme_config(cfg);
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::domain_error("verify: rel_tol must lie in (0, 1)");
  const int m1 = cfg.m1, n1 = cfg.n1, m2p = cfg.m2_active();
  if (q.rows() != m1 || q.cols() != n1)
    throw std::invalid_argument("verify: q must be M1 x N1");
  if (p.rows() != n1 || p.cols() != n1 - m1)
    throw std::invalid_argument("verify: p must be N1 x (N1-M1)");
  if (h12.rows() != n1 || h12.cols() != m2p)
    throw std::invalid_argument("verify: h12 must be N1 x min(M2,N2)");

  VerificationReport report;
  report.rank_u_required = m1 * n1;
  report.rank_p_required = m2p * (n1 - m1);
  report.rank_tol = rel_tol;

  const ComplexMatrix u = build_u(q, h11_slots);
  const std::vector<double> sv = singular_values(u);
  report.min_singular_u = sv.back();
  report.rank_u = 0;
  if (sv.front() > 0.0)
    for (double s : sv)
      if (s > rel_tol * sv.front()) ++report.rank_u;

  const ComplexMatrix p_tilde =
      kron(p, ComplexMatrix::Identity(m2p, m2p));
  report.rank_p_tilde = numerical_rank(p_tilde, rel_tol);
  if (report.rank_p_tilde != numerical_rank(p, rel_tol) * m2p)
    throw std::runtime_error(
        "verify: rank(p_tilde) disagrees with rank(p)*min(M2,N2)");

  const ComplexMatrix v = build_v(q, p, h12);
  report.v_frobenius = v.norm();
  report.null_threshold = null_tol * (h12.norm() + 1.0);

  report.pass = report.rank_u == report.rank_u_required &&
                report.rank_p_tilde == report.rank_p_required &&
                report.v_frobenius <= report.null_threshold;
  return report;
}

ComplexMatrix permuted_fft_minor(int m1, int n1) {
  require_m1_less_n1(m1, n1);
  const int side = m1 * n1;
  const ComplexMatrix f = dft_matrix(n1 * n1);
  ComplexMatrix minor(side, side);
  int out_col = 0;
  for (int g = 0; g < n1 && out_col < side; ++g)
    for (int c = 0; c < m1; ++c, ++out_col)
      minor.col(out_col) = f.block(0, g + c * n1, side, 1);
  return minor;
}

}  // namespace doflab
