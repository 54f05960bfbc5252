#include "doflab/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace doflab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string region_to_json(const DofRegion& region) {
  ordered_json j;
  j["halfplanes"] = ordered_json::array();
  for (const HalfPlane& h : region.halfplanes)
    j["halfplanes"].push_back(
        {{"a1", h.a1.str()}, {"a2", h.a2.str()}, {"b", h.b.str()}});
  j["vertices"] = ordered_json::array();
  for (const RatPoint& v : region.vertices)
    j["vertices"].push_back({v.x.str(), v.y.str()});
  return j.dump();
}

DofRegion region_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  DofRegion region;
  for (const auto& h : j.at("halfplanes"))
    region.halfplanes.push_back(
        {Rational::parse(h.at("a1").get<std::string>()),
         Rational::parse(h.at("a2").get<std::string>()),
         Rational::parse(h.at("b").get<std::string>())});
  for (const auto& v : j.at("vertices"))
    region.vertices.push_back({Rational::parse(v.at(0).get<std::string>()),
                               Rational::parse(v.at(1).get<std::string>())});
  return region;
}

std::string region_to_csv(const DofRegion& region) {
  std::string out = "d1,d2\n";
  for (const RatPoint& v : region.vertices)
    out += v.x.str() + "," + v.y.str() + "\n";
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["rank_u"] = report.rank_u;
  j["rank_u_required"] = report.rank_u_required;
  j["rank_p_tilde"] = report.rank_p_tilde;
  j["rank_p_required"] = report.rank_p_required;
  j["v_frobenius"] = report.v_frobenius;
  j["min_singular_u"] = report.min_singular_u;
  j["rank_tol"] = report.rank_tol;
  j["null_threshold"] = report.null_threshold;
  j["pass"] = report.pass;
  return j.dump();
}

std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "power_db,r1_bits,r2_bits,trial\n";
  for (const SweepRow& r : rows) {
    out += format_double(r.power_db) + "," + format_double(r.r1_bits) + "," +
           format_double(r.r2_bits) + "," + std::to_string(r.trial) + "\n";
  }
  return out;
}

std::string estimate_to_json(const RateSweepResult& result,
                             std::uint64_t seed) {
  ordered_json j;
  j["d1_hat"] = result.estimate.d1_hat;
  j["d2_hat"] = result.estimate.d2_hat;
  j["points"] = ordered_json::array();
  for (const RatePoint& p : result.mean_points)
    j["points"].push_back({{"power", p.power},
                           {"r1_bits", p.r1},
                           {"r2_bits", p.r2}});
  j["seed"] = seed;
  return j.dump();
}

}  // namespace doflab
