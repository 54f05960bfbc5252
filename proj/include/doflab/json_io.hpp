#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doflab/biascheme.hpp"
#include "doflab/dofregion.hpp"
#include "doflab/simulate.hpp"

namespace doflab {

// Regions serialize with rationals as canonical "p/q" strings ("p" for
// integers) so exactness stays visible:
//   { "halfplanes": [{"a1":"1","a2":"2/3","b":"2"}, ...],
//     "vertices": [["0","0"], ...] }
std::string region_to_json(const DofRegion& region);
DofRegion region_from_json(const std::string& text);

// Vertex list as CSV with a "d1,d2" header.
std::string region_to_csv(const DofRegion& region);

std::string report_to_json(const VerificationReport& report);

// CSV rate sweep with header "power_db,r1_bits,r2_bits,trial".
std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows);

// { "d1_hat": ..., "d2_hat": ..., "points": [...], "seed": ... }
std::string estimate_to_json(const RateSweepResult& result,
                             std::uint64_t seed);

// Deterministic shortest-ish decimal form used in CSV output.
std::string format_double(double value);

}  // namespace doflab
