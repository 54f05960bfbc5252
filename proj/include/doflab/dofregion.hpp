#pragma once

#include <utility>
#include <vector>

#include "doflab/antenna_config.hpp"
#include "doflab/rational.hpp"

namespace doflab {

// The constraint a1*d1 + a2*d2 <= b with exact rational coefficients.
struct HalfPlane {
  Rational a1;
  Rational a2;
  Rational b;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// A bounded 2D DoF region. `halfplanes` always contains d1 >= 0 and
// d2 >= 0; `vertices` lists the extreme points counter-clockwise starting
// at (0, 0). Every vertex satisfies every half-plane exactly.
struct DofRegion {
  std::vector<HalfPlane> halfplanes;
  std::vector<RatPoint> vertices;
};

// All pairwise boundary intersections that satisfy every constraint,
// deduplicated and sorted counter-clockwise starting from (0, 0).
// The system must be bounded and contain the origin; throws
// std::domain_error otherwise.
std::vector<RatPoint> vertices(const std::vector<HalfPlane>& halfplanes);

// DoF region of the full interference channel with CSIT:
//   di <= min(Mi, Ni)
//   d1 + d2 <= min(max(N1,M2), max(M1,N2), N1+N2, M1+M2)
DofRegion fic_csit_region(const AntennaConfig& cfg);

// DoF region of the Z interference channel with CSIT; the max(M1,N2) term
// drops because receiver 2 sees no cross link.
DofRegion zic_csit_region(const AntennaConfig& cfg);

// DoF region of the full interference channel without CSIT:
//   di <= min(Mi, Ni)
//   d1 + [min(N1,N2,M2)/min(N2,M2)]*d2 <= min(M1+M2, N1)
//   [min(N1,N2,M1)/min(N1,M1)]*d1 + d2 <= min(M1+M2, N2)
DofRegion fic_nocsit_region(const AntennaConfig& cfg);

// DoF region of the Z interference channel without CSIT: the FIC region
// minus its second weighted constraint.
DofRegion zic_nocsit_region(const AntennaConfig& cfg);

// The corner point (M1, min(M2,N2)*(N1-M1)/N1) that requires the blind
// alignment scheme. Requires M1 < N1 < min(M2, N2); throws
// std::domain_error naming the failed inequality.
RatPoint unknown_corner_point(const AntennaConfig& cfg);

// Exact membership test (boundary counts as inside).
bool contains(const DofRegion& region, const RatPoint& point);

// True iff the vertex sets are identical; for convex polytopes this is
// mutual containment.
bool regions_equal(const DofRegion& a, const DofRegion& b);

// True iff every vertex of `inner` satisfies every half-plane of `outer`.
bool region_contains_region(const DofRegion& outer, const DofRegion& inner);

// All integer (d1, d2) points inside the region.
std::vector<std::pair<int, int>> integer_points(const DofRegion& region);

}  // namespace doflab
