#include "doflab/dofregion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace doflab {

namespace {

void require_valid_normals(const std::vector<HalfPlane>& hps) {
  if (hps.empty())
    throw std::domain_error("half-plane system is empty");
  for (const HalfPlane& h : hps)
    if (h.a1.is_zero() && h.a2.is_zero())
      throw std::domain_error("half-plane with zero normal");
}

bool satisfies(const HalfPlane& h, const RatPoint& p) {
  return h.a1 * p.x + h.a2 * p.y <= h.b;
}

// A nonzero recession direction, if one exists, lies on the boundary line
// of some constraint, so checking the two perpendiculars of every normal
// decides boundedness exactly.
bool is_bounded(const std::vector<HalfPlane>& hps) {
  for (const HalfPlane& h : hps) {
    const RatPoint dirs[2] = {{h.a2, -h.a1}, {-h.a2, h.a1}};
    for (const RatPoint& u : dirs) {
      bool recession = true;
      for (const HalfPlane& g : hps) {
        if ((g.a1 * u.x + g.a2 * u.y).sign() > 0) {
          recession = false;
          break;
        }
      }
      if (recession) return false;
    }
  }
  return true;
}

// Counter-clockwise comparator around `center`, angle zero at +x.
struct CcwLess {
  RatPoint center;

  static int half(const Rational& x, const Rational& y) {
    if (y.sign() > 0 || (y.sign() == 0 && x.sign() > 0)) return 0;
    return 1;
  }

  bool operator()(const RatPoint& p, const RatPoint& q) const {
    const Rational px = p.x - center.x, py = p.y - center.y;
    const Rational qx = q.x - center.x, qy = q.y - center.y;
    const int hp = half(px, py), hq = half(qx, qy);
    if (hp != hq) return hp < hq;
    const Rational cross = px * qy - py * qx;
    if (!cross.is_zero()) return cross.sign() > 0;
    return p < q;  // collinear: deterministic tiebreak
  }
};

}  // namespace

std::vector<RatPoint> vertices(const std::vector<HalfPlane>& halfplanes) {
  require_valid_normals(halfplanes);
  for (const HalfPlane& h : halfplanes)
    if (h.b.sign() < 0)
      throw std::domain_error("half-plane system does not contain the origin");
  if (!is_bounded(halfplanes))
    throw std::domain_error("unbounded half-plane system");

  std::set<RatPoint> found;
  const std::size_t n = halfplanes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const HalfPlane& f = halfplanes[i];
      const HalfPlane& g = halfplanes[j];
      const Rational det = f.a1 * g.a2 - f.a2 * g.a1;
      if (det.is_zero()) continue;  // parallel boundary lines
      const RatPoint p{(f.b * g.a2 - g.b * f.a2) / det,
                       (f.a1 * g.b - g.a1 * f.b) / det};
      bool inside = true;
      for (const HalfPlane& h : halfplanes) {
        if (!satisfies(h, p)) {
          inside = false;
          break;
        }
      }
      if (inside) found.insert(p);
    }
  }

  std::vector<RatPoint> verts(found.begin(), found.end());
  if (verts.size() > 1) {
    RatPoint center{Rational(0), Rational(0)};
    for (const RatPoint& v : verts) {
      center.x += v.x;
      center.y += v.y;
    }
    const Rational count(static_cast<std::int64_t>(verts.size()));
    center.x /= count;
    center.y /= count;
    std::sort(verts.begin(), verts.end(), CcwLess{center});
  }

  // start at (0,0) when present, else at the lexicographic minimum
  auto start = std::find(verts.begin(), verts.end(),
                         RatPoint{Rational(0), Rational(0)});
  if (start == verts.end())
    start = std::min_element(verts.begin(), verts.end());
  if (start != verts.end())
    std::rotate(verts.begin(), start, verts.end());
  return verts;
}

namespace {

DofRegion make_region(std::vector<HalfPlane> hps) {
  DofRegion region{std::move(hps), {}};
  region.vertices = vertices(region.halfplanes);
  return region;
}

std::vector<HalfPlane> box_constraints(const AntennaConfig& cfg) {
  return {
      {Rational(-1), Rational(0), Rational(0)},  // d1 >= 0
      {Rational(0), Rational(-1), Rational(0)},  // d2 >= 0
      {Rational(1), Rational(0), Rational(std::min(cfg.m1, cfg.n1))},
      {Rational(0), Rational(1), Rational(std::min(cfg.m2, cfg.n2))},
  };
}

}  // namespace

DofRegion fic_csit_region(const AntennaConfig& cfg) {
  validate(cfg);
  auto hps = box_constraints(cfg);
  const int sum = std::min({std::max(cfg.n1, cfg.m2), std::max(cfg.m1, cfg.n2),
                            cfg.n1 + cfg.n2, cfg.m1 + cfg.m2});
  hps.push_back({Rational(1), Rational(1), Rational(sum)});
  return make_region(std::move(hps));
}

DofRegion zic_csit_region(const AntennaConfig& cfg) {
  validate(cfg);
  auto hps = box_constraints(cfg);
  const int sum =
      std::min({std::max(cfg.n1, cfg.m2), cfg.n1 + cfg.n2, cfg.m1 + cfg.m2});
  hps.push_back({Rational(1), Rational(1), Rational(sum)});
  return make_region(std::move(hps));
}

namespace {

// d1 + [min(N1,N2,M2)/min(N2,M2)]*d2 <= min(M1+M2, N1)
HalfPlane nocsit_rx1_bound(const AntennaConfig& cfg) {
  return {Rational(1),
          Rational(std::min({cfg.n1, cfg.n2, cfg.m2}), std::min(cfg.n2, cfg.m2)),
          Rational(std::min(cfg.m1 + cfg.m2, cfg.n1))};
}

// [min(N1,N2,M1)/min(N1,M1)]*d1 + d2 <= min(M1+M2, N2)
HalfPlane nocsit_rx2_bound(const AntennaConfig& cfg) {
  return {Rational(std::min({cfg.n1, cfg.n2, cfg.m1}), std::min(cfg.n1, cfg.m1)),
          Rational(1), Rational(std::min(cfg.m1 + cfg.m2, cfg.n2))};
}

}  // namespace

DofRegion fic_nocsit_region(const AntennaConfig& cfg) {
  validate(cfg);
  auto hps = box_constraints(cfg);
  hps.push_back(nocsit_rx1_bound(cfg));
  hps.push_back(nocsit_rx2_bound(cfg));
  return make_region(std::move(hps));
}

DofRegion zic_nocsit_region(const AntennaConfig& cfg) {
  validate(cfg);
  auto hps = box_constraints(cfg);
  hps.push_back(nocsit_rx1_bound(cfg));
  return make_region(std::move(hps));
}

RatPoint unknown_corner_point(const AntennaConfig& cfg) {
  validate_scheme_config(cfg);
  const int m2p = cfg.m2_active();
  return {Rational(cfg.m1), Rational(m2p) * Rational(cfg.n1 - cfg.m1, cfg.n1)};
}

bool contains(const DofRegion& region, const RatPoint& point) {
  for (const HalfPlane& h : region.halfplanes)
    if (!satisfies(h, point)) return false;
  return true;
}

bool regions_equal(const DofRegion& a, const DofRegion& b) {
  std::vector<RatPoint> va = a.vertices, vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

bool region_contains_region(const DofRegion& outer, const DofRegion& inner) {
  for (const RatPoint& v : inner.vertices)
    if (!contains(outer, v)) return false;
  return true;
}

std::vector<std::pair<int, int>> integer_points(const DofRegion& region) {
  std::int64_t max_x = 0, max_y = 0;
  for (const RatPoint& v : region.vertices) {
    max_x = std::max(max_x, v.x.floor());
    max_y = std::max(max_y, v.y.floor());
  }
  std::vector<std::pair<int, int>> pts;
  for (std::int64_t x = 0; x <= max_x; ++x)
    for (std::int64_t y = 0; y <= max_y; ++y)
      if (contains(region, {Rational(x), Rational(y)}))
        pts.emplace_back(static_cast<int>(x), static_cast<int>(y));
  return pts;
}

}  // namespace doflab
