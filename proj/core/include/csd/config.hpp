#pragma once

#include <stdexcept>
#include <string>

#include "csd/campaign.hpp"
#include "csd/scenario.hpp"

namespace csd {

/// Configuration problem with enough context for a one-line diagnostic.
/// line == 0 means the problem is not tied to a specific line (e.g. a
/// missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, int line, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

struct ResolvedConfig {
  SimConfig scenario;
  CampaignSpec campaign;

  bool operator==(const ResolvedConfig&) const = default;
};

/// Parses the key-value config format:
///   - '#' starts a comment, full-line or trailing
///   - section headers [scenario] and [campaign]
///   - every [scenario] key is required except p_max_dbm (default 23 dBm)
///   - [campaign] keys are optional; defaults sweep 5..75 pairs step 5,
///     pt 10/15/20 dBm, tau -30..0 dB step 2, both schemes
///   - lists accept "a, b, c" or "start:stop:step"
/// Unknown keys, duplicates and malformed values throw ConfigError with the
/// offending line. The scenario block is validated before returning.
ResolvedConfig load_config_file(const std::string& path);

/// Same contract, parsing from an in-memory string (used by tests).
ResolvedConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

}  // namespace csd
