#include "eugb/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace eugb {
namespace {

std::string verdict(const std::optional<bool>& v) {
  if (!v) return "skipped";
  return *v ? "yes" : "no";
}

nlohmann::ordered_json jsonVerdict(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string renderHuman(const RunReport& r) {
  std::ostringstream os;
  for (const std::string& p : r.basis) os << p << '\n';
  os << '\n';
  os << "engine: " << r.engine << '\n';
  os << "ring: " << r.ring << '\n';
  os << "order: " << r.order << '\n';
  if (r.engine == "f4") {
    os << "strategy: " << r.strategy << '\n';
    os << "pair_update: " << r.pairUpdate << '\n';
    os << "h_polys: " << r.hPolys << '\n';
    os << "criteria: " << (r.criteria ? "on" : "off") << '\n';
  }
  os << "basis_size: " << r.basis.size() << '\n';
  os << "additions: " << r.stats.polynomialAdditions << '\n';
  os << "pairs: " << r.stats.pairsProcessed << '\n';
  os << "rounds: " << r.stats.rounds << '\n';
  os << "reductions_to_zero: " << r.stats.reductionsToZero << '\n';
  os << "max_basis_size: " << r.stats.maxBasisSize << '\n';
  os << "verified_spoly: " << verdict(r.verifiedSpoly) << '\n';
  os << "verified_gpoly: " << verdict(r.verifiedGpoly) << '\n';
  std::ostringstream ms;
  ms.setf(std::ios::fixed);
  ms.precision(3);
  ms << r.wallMs;
  os << "wall_ms: " << ms.str() << '\n';
  return os.str();
}

std::string renderJson(const RunReport& r) {
  nlohmann::ordered_json j;
  j["basis"] = r.basis;
  j["additions"] = r.stats.polynomialAdditions;
  j["pairs"] = r.stats.pairsProcessed;
  j["rounds"] = r.stats.rounds;
  j["engine"] = r.engine;
  j["order"] = r.order;
  j["verified_spoly"] = jsonVerdict(r.verifiedSpoly);
  j["verified_gpoly"] = jsonVerdict(r.verifiedGpoly);
  j["wall_ms"] = std::round(r.wallMs * 1000.0) / 1000.0;
  j["ring"] = r.ring;
  if (r.engine == "f4") {
    j["strategy"] = r.strategy;
    j["pair_update"] = r.pairUpdate;
    j["h_polys"] = r.hPolys;
    j["criteria"] = r.criteria;
  }
  j["normalized"] = r.normalized;
  j["tail_reduced"] = r.tailReduced;
  j["reductions_to_zero"] = r.stats.reductionsToZero;
  j["max_basis_size"] = r.stats.maxBasisSize;
  return j.dump(2) + "\n";
}

}  // namespace

std::string renderReport(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? renderJson(report) : renderHuman(report);
}

}  // namespace eugb
