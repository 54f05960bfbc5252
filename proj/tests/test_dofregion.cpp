#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doflab/dofregion.hpp"
#include "doflab/json_io.hpp"

using namespace doflab;

namespace {

RatPoint pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

bool same_vertex_set(const std::vector<RatPoint>& got,
                     std::vector<RatPoint> expected) {
  std::vector<RatPoint> g = got;
  std::sort(g.begin(), g.end());
  std::sort(expected.begin(), expected.end());
  return g == expected;
}

// ---- independent oracle: Sutherland-Hodgman clipping in doubles ----------

struct DPoint {
  double x, y;
};

std::vector<DPoint> clip_polygon_oracle(const std::vector<HalfPlane>& hps) {
  const double big = 1e3;
  std::vector<DPoint> poly = {
      {-big, -big}, {big, -big}, {big, big}, {-big, big}};
  for (const HalfPlane& h : hps) {
    const double a1 = h.a1.to_double(), a2 = h.a2.to_double(),
                 b = h.b.to_double();
    const auto eval = [&](const DPoint& p) { return a1 * p.x + a2 * p.y - b; };
    std::vector<DPoint> next;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const DPoint cur = poly[i];
      const DPoint nxt = poly[(i + 1) % n];
      const bool cur_in = eval(cur) <= 1e-9;
      const bool nxt_in = eval(nxt) <= 1e-9;
      if (cur_in) next.push_back(cur);
      if (cur_in != nxt_in) {
        const double t = eval(cur) / (eval(cur) - eval(nxt));
        next.push_back({cur.x + t * (nxt.x - cur.x),
                        cur.y + t * (nxt.y - cur.y)});
      }
    }
    poly = std::move(next);
    if (poly.empty()) break;
  }
  // drop near-duplicates
  std::vector<DPoint> unique;
  for (const DPoint& p : poly) {
    bool seen = false;
    for (const DPoint& q : unique)
      if (std::abs(p.x - q.x) < 1e-6 && std::abs(p.y - q.y) < 1e-6) seen = true;
    if (!seen) unique.push_back(p);
  }
  return unique;
}

void check_against_clipping_oracle(const DofRegion& region) {
  const std::vector<DPoint> oracle = clip_polygon_oracle(region.halfplanes);
  REQUIRE(oracle.size() == region.vertices.size());
  for (const RatPoint& v : region.vertices) {
    const double x = v.x.to_double(), y = v.y.to_double();
    const bool matched =
        std::any_of(oracle.begin(), oracle.end(), [&](const DPoint& p) {
          return std::abs(p.x - x) < 1e-6 && std::abs(p.y - y) < 1e-6;
        });
    CHECK(matched);
  }
}

std::vector<AntennaConfig> all_configs(int max_count) {
  std::vector<AntennaConfig> configs;
  for (int m1 = 1; m1 <= max_count; ++m1)
    for (int n1 = 1; n1 <= max_count; ++n1)
      for (int m2 = 1; m2 <= max_count; ++m2)
        for (int n2 = 1; n2 <= max_count; ++n2)
          configs.push_back({m1, n1, m2, n2});
  return configs;
}

}  // namespace

TEST_CASE("vertex enumeration on the unit square and simplex") {
  const std::vector<HalfPlane> square = {
      {Rational(-1), Rational(0), Rational(0)},
      {Rational(0), Rational(-1), Rational(0)},
      {Rational(1), Rational(0), Rational(1)},
      {Rational(0), Rational(1), Rational(1)},
  };
  CHECK(same_vertex_set(vertices(square),
                        {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}));
  // counter-clockwise from (0,0)
  CHECK(vertices(square) ==
        std::vector<RatPoint>{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});

  const std::vector<HalfPlane> simplex = {
      {Rational(-1), Rational(0), Rational(0)},
      {Rational(0), Rational(-1), Rational(0)},
      {Rational(1), Rational(1), Rational(1)},
  };
  CHECK(vertices(simplex) ==
        std::vector<RatPoint>{pt(0, 0), pt(1, 0), pt(0, 1)});
}

TEST_CASE("vertex enumeration rejects unbounded or origin-free systems") {
  const std::vector<HalfPlane> unbounded = {
      {Rational(-1), Rational(0), Rational(0)},
      {Rational(0), Rational(-1), Rational(0)},
      {Rational(1), Rational(0), Rational(1)},  // d2 free above
  };
  CHECK_THROWS_AS(vertices(unbounded), std::domain_error);

  const std::vector<HalfPlane> shifted = {
      {Rational(-1), Rational(0), Rational(-1)},  // d1 >= 1 excludes origin
      {Rational(0), Rational(-1), Rational(0)},
      {Rational(1), Rational(0), Rational(2)},
      {Rational(0), Rational(1), Rational(1)},
  };
  CHECK_THROWS_AS(vertices(shifted), std::domain_error);
}

TEST_CASE("FIC CSIT region on the named configurations") {
  const DofRegion r = fic_csit_region({1, 2, 3, 3});
  CHECK(same_vertex_set(r.vertices, {pt(0, 0), pt(1, 0), pt(1, 2), pt(0, 3)}));
  // d1 <= 1, d2 <= 3, d1 + d2 <= 3 all present
  CHECK(std::count(r.halfplanes.begin(), r.halfplanes.end(),
                   HalfPlane{Rational(1), Rational(1), Rational(3)}) == 1);

  CHECK(same_vertex_set(fic_csit_region({1, 1, 1, 1}).vertices,
                        {pt(0, 0), pt(1, 0), pt(0, 1)}));

  // sum bound min(max(2,2), max(1,1), 3, 3) = 1
  const DofRegion narrow = fic_csit_region({1, 2, 2, 1});
  CHECK(contains(narrow, pt(1, 0)));
  CHECK_FALSE(contains(narrow, pt(1, 1)));
  CHECK(same_vertex_set(narrow.vertices, {pt(0, 0), pt(1, 0), pt(0, 1)}));
}

TEST_CASE("ZIC CSIT region drops the max(M1,N2) bound") {
  CHECK(regions_equal(zic_csit_region({1, 2, 3, 3}),
                      fic_csit_region({1, 2, 3, 3})));

  // sum bound becomes min(2, 3, 3) = 2, strictly larger than FIC's 1
  const DofRegion zic = zic_csit_region({1, 2, 2, 1});
  const DofRegion fic = fic_csit_region({1, 2, 2, 1});
  CHECK(region_contains_region(zic, fic));
  CHECK_FALSE(regions_equal(zic, fic));
  CHECK(contains(zic, pt(1, 1)));

  CHECK(same_vertex_set(zic_csit_region({2, 2, 2, 2}).vertices,
                        {pt(0, 0), pt(2, 0), pt(0, 2)}));
}

TEST_CASE("FIC no-CSIT region matches the worked corner case") {
  const DofRegion r = fic_nocsit_region({1, 2, 3, 3});
  CHECK(same_vertex_set(
      r.vertices, {pt(0, 0), pt(1, 0), {Rational(1), Rational(3, 2)}, pt(0, 3)}));
  // receiver-1 bound d1 + (2/3) d2 <= 2
  CHECK(std::count(r.halfplanes.begin(), r.halfplanes.end(),
                   HalfPlane{Rational(1), Rational(2, 3), Rational(2)}) == 1);
  check_against_clipping_oracle(r);

  CHECK(same_vertex_set(fic_nocsit_region({2, 2, 2, 2}).vertices,
                        {pt(0, 0), pt(2, 0), pt(0, 2)}));

  // weight on d2 is min(4,2,1)/min(2,1) = 1
  const DofRegion r2 = fic_nocsit_region({3, 4, 1, 2});
  CHECK(std::count(r2.halfplanes.begin(), r2.halfplanes.end(),
                   HalfPlane{Rational(1), Rational(1), Rational(4)}) == 1);
  check_against_clipping_oracle(r2);
}

TEST_CASE("ZIC no-CSIT region equals FIC when N1 <= N2, exceeds it otherwise") {
  CHECK(regions_equal(zic_nocsit_region({1, 2, 3, 3}),
                      fic_nocsit_region({1, 2, 3, 3})));

  const DofRegion zic = zic_nocsit_region({3, 3, 3, 1});
  const DofRegion fic = fic_nocsit_region({3, 3, 3, 1});
  CHECK(region_contains_region(zic, fic));
  CHECK_FALSE(regions_equal(zic, fic));
  CHECK(contains(zic, pt(2, 1)));
  CHECK_FALSE(contains(fic, pt(2, 1)));

  CHECK(same_vertex_set(zic_nocsit_region({1, 1, 1, 1}).vertices,
                        {pt(0, 0), pt(1, 0), pt(0, 1)}));
}

TEST_CASE("unknown corner point formula and preconditions") {
  const RatPoint corner = unknown_corner_point({1, 2, 3, 3});
  CHECK(corner.x == Rational(1));
  CHECK(corner.y == Rational(3, 2));

  CHECK(unknown_corner_point({1, 2, 4, 3}).y == Rational(3, 2));
  CHECK(unknown_corner_point({2, 3, 4, 4}).y == Rational(4, 3));

  CHECK_THROWS_WITH_AS(unknown_corner_point({2, 2, 3, 3}),
                       "M1 < N1 violated", std::domain_error);
  CHECK_THROWS_WITH_AS(unknown_corner_point({1, 3, 3, 4}),
                       "N1 < min(M2, N2) violated", std::domain_error);
}

TEST_CASE("containment on boundary and outside points") {
  const DofRegion r = fic_nocsit_region({1, 2, 3, 3});
  CHECK(contains(r, {Rational(1), Rational(3, 2)}));  // boundary corner
  CHECK_FALSE(contains(r, pt(1, 2)));                 // violates d1+(2/3)d2<=2
  CHECK(contains(r, pt(0, 0)));
}

TEST_CASE("region equality is set equality of vertices") {
  const DofRegion r = zic_nocsit_region({1, 2, 3, 3});
  CHECK(regions_equal(r, r));
  CHECK_FALSE(regions_equal(zic_nocsit_region({3, 3, 3, 1}),
                            fic_nocsit_region({3, 3, 3, 1})));
}

TEST_CASE("region builders agree with the clipping oracle on all configs <= 4") {
  for (const AntennaConfig& cfg : all_configs(4)) {
    check_against_clipping_oracle(fic_csit_region(cfg));
    check_against_clipping_oracle(zic_csit_region(cfg));
    check_against_clipping_oracle(fic_nocsit_region(cfg));
    check_against_clipping_oracle(zic_nocsit_region(cfg));
  }
}

TEST_CASE("Lemma 3 equivalence for all configs <= 4 with N1 <= N2") {
  for (const AntennaConfig& cfg : all_configs(4)) {
    if (cfg.n1 > cfg.n2) continue;
    CHECK(regions_equal(zic_nocsit_region(cfg), fic_nocsit_region(cfg)));
  }
}

TEST_CASE("CSIT and ZIC dominance for all configs <= 4") {
  for (const AntennaConfig& cfg : all_configs(4)) {
    const DofRegion zc = zic_csit_region(cfg);
    const DofRegion zn = zic_nocsit_region(cfg);
    const DofRegion fc = fic_csit_region(cfg);
    const DofRegion fn = fic_nocsit_region(cfg);
    CHECK(region_contains_region(zc, zn));
    CHECK(region_contains_region(fc, fn));
    CHECK(region_contains_region(zc, fc));
    CHECK(region_contains_region(zn, fn));
  }
}

TEST_CASE("corner point is tight on the receiver-1 bound for configs <= 5") {
  for (const AntennaConfig& cfg : all_configs(5)) {
    if (!(cfg.m1 < cfg.n1 && cfg.n1 < std::min(cfg.m2, cfg.n2))) continue;
    const RatPoint corner = unknown_corner_point(cfg);
    const DofRegion region = zic_nocsit_region(cfg);
    CHECK(contains(region, corner));
    // d1 + [min(N1,N2,M2)/min(N2,M2)] d2 == min(M1+M2, N1) with equality
    const Rational weight(std::min({cfg.n1, cfg.n2, cfg.m2}),
                          std::min(cfg.n2, cfg.m2));
    const Rational bound(std::min(cfg.m1 + cfg.m2, cfg.n1));
    CHECK(corner.x + weight * corner.y == bound);
  }
}

TEST_CASE("vertex denominators divide lcm(1..max(N1,N2)) for configs <= 4") {
  for (const AntennaConfig& cfg : all_configs(4)) {
    std::int64_t lcm = 1;
    for (int k = 2; k <= std::max(cfg.n1, cfg.n2); ++k)
      lcm = std::lcm(lcm, std::int64_t(k));
    for (const DofRegion& r :
         {fic_csit_region(cfg), zic_csit_region(cfg), fic_nocsit_region(cfg),
          zic_nocsit_region(cfg)}) {
      for (const RatPoint& v : r.vertices) {
        CHECK(lcm % v.x.den() == 0);
        CHECK(lcm % v.y.den() == 0);
      }
    }
  }
}

TEST_CASE("region JSON serialization round-trips exactly") {
  const DofRegion region = fic_nocsit_region({1, 2, 3, 3});
  const std::string text = region_to_json(region);
  CHECK(text.find("\"3/2\"") != std::string::npos);  // rationals as strings
  const DofRegion parsed = region_from_json(text);
  CHECK(parsed.halfplanes == region.halfplanes);
  CHECK(parsed.vertices == region.vertices);
  CHECK(region_to_json(parsed) == text);
}

TEST_CASE("integer point enumeration") {
  const auto pts = integer_points(zic_nocsit_region({1, 2, 3, 3}));
  // d1 + (2/3) d2 <= 2, d1 <= 1, d2 <= 3
  const std::vector<std::pair<int, int>> expected = {
      {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}};
  CHECK(pts == expected);
}
