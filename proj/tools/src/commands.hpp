#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace mckay::cli {

struct RunConfig {
  std::string weights;
  std::optional<std::string> rays_file;
  std::optional<std::string> q;
  std::optional<std::string> map_file;
  std::optional<std::string> presentation_file;
  std::optional<std::string> candidates;
  int dim = 0;
  bool isometry = false;
};

/// Result of one subcommand: a JSON report plus the verification verdict.
struct Outcome {
  nlohmann::json report;
  bool verified = true;
};

Outcome gorenstein_check(const RunConfig& c);
Outcome gorenstein_enumerate(const RunConfig& c);
Outcome sectors(const RunConfig& c);
Outcome resolve(const RunConfig& c);
Outcome cohomology(const RunConfig& c);
Outcome chenruan(const RunConfig& c);
Outcome quantum(const RunConfig& c);
Outcome mrho(const RunConfig& c);
Outcome verify_iso(const RunConfig& c);
Outcome scan(const RunConfig& c);

/// Indented key/value rendering of a report.
std::string render_text(const nlohmann::json& j);

}  // namespace mckay::cli
