#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

namespace doflab {

// The (M1, N1, M2, N2) tuple naming a two-user MIMO system instance:
// Mi transmit and Ni receive antennas for user i.
struct AntennaConfig {
  int m1 = 1;
  int n1 = 1;
  int m2 = 1;
  int n2 = 1;

  // Active transmit antennas at user 2; extra ones add no degrees of freedom.
  int m2_active() const { return std::min(m2, n2); }

  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

inline constexpr int kMaxAntennas = 64;

inline void validate(const AntennaConfig& cfg) {
  for (int v : {cfg.m1, cfg.n1, cfg.m2, cfg.n2}) {
    if (v < 1 || v > kMaxAntennas)
      throw std::domain_error("antenna counts must lie in 1.." +
                              std::to_string(kMaxAntennas));
  }
}

// Requires M1 < N1 < min(M2, N2); throws naming the failed inequality.
inline void validate_scheme_config(const AntennaConfig& cfg) {
  validate(cfg);
  if (!(cfg.m1 < cfg.n1)) throw std::domain_error("M1 < N1 violated");
  if (!(cfg.n1 < std::min(cfg.m2, cfg.n2)))
    throw std::domain_error("N1 < min(M2, N2) violated");
}

inline std::string to_string(const AntennaConfig& cfg) {
  return "(" + std::to_string(cfg.m1) + "," + std::to_string(cfg.n1) + "," +
         std::to_string(cfg.m2) + "," + std::to_string(cfg.n2) + ")";
}

}  // namespace doflab
