#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eugb/f4.hpp"

namespace eugb {

enum class ReportFormat { Human, Json };

/// Outcome of one CLI computation, as printed.
struct RunReport {
  std::vector<std::string> basis;
  ComputationStats stats;

  std::string engine;
  std::string ring;
  std::string order;
  std::string strategy;
  std::string pairUpdate;
  std::string hPolys;
  bool criteria = false;
  bool normalized = false;
  bool tailReduced = false;

  // Unset when the level was not checked.
  std::optional<bool> verifiedSpoly;
  std::optional<bool> verifiedGpoly;

  double wallMs = 0.0;
};

/// Human: one polynomial per line, a blank line, then `key: value` lines.
/// Json: a single object whose first fields are basis, additions, pairs,
/// rounds, engine, order, verified_spoly, verified_gpoly and wall_ms.
std::string renderReport(const RunReport& report, ReportFormat format);

}  // namespace eugb
