#include "csd/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace csd {

namespace {

struct RawEntry {
  std::string value;
  int line = 0;
};

using SectionMap = std::map<std::string, std::map<std::string, RawEntry>>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

SectionMap tokenize(const std::string& text, const std::string& origin) {
  SectionMap sections;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("", line_no, origin + ":" + std::to_string(line_no) +
                                           ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "campaign")
        throw ConfigError(section, line_no,
                          origin + ":" + std::to_string(line_no) + ": unknown section [" +
                              section + "] (expected [scenario] or [campaign])");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", line_no,
                        origin + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError(key, line_no, origin + ":" + std::to_string(line_no) + ": key '" + key +
                                          "' appears before any [section] header");
    if (key.empty() || value.empty())
      throw ConfigError(key, line_no,
                        origin + ":" + std::to_string(line_no) + ": empty key or value");
    auto [it, inserted] = sections[section].emplace(key, RawEntry{value, line_no});
    if (!inserted)
      throw ConfigError(key, line_no, origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                                          key + "' (first at line " +
                                          std::to_string(it->second.line) + ")");
  }
  return sections;
}

class SectionReader {
 public:
  SectionReader(SectionMap& sections, std::string name, std::string origin)
      : name_(std::move(name)), origin_(std::move(origin)) {
    if (auto it = sections.find(name_); it != sections.end()) entries_ = &it->second;
  }

  bool has(const std::string& key) const { return entries_ && entries_->count(key); }

  const RawEntry& require(const std::string& key) const {
    if (!has(key))
      throw ConfigError(key, 0, origin_ + ": missing required key '" + key + "' in section [" +
                                    name_ + "]");
    return entries_->at(key);
  }

  double number(const std::string& key) const { return parse_number(key, require(key)); }

  double number_or(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    return parse_number(key, entries_->at(key));
  }

  long long integer(const std::string& key) const {
    const RawEntry& e = require(key);
    const double v = parse_number(key, e);
    if (v != std::floor(v)) fail(key, e, "expected an integer");
    return static_cast<long long>(v);
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? entries_->at(key).value : fallback;
  }

  const RawEntry* get(const std::string& key) const {
    return has(key) ? &entries_->at(key) : nullptr;
  }

  void check_unknown(const std::vector<std::string>& known) const {
    if (!entries_) return;
    for (const auto& [key, entry] : *entries_) {
      bool ok = false;
      for (const auto& k : known)
        if (k == key) ok = true;
      if (!ok)
        throw ConfigError(key, entry.line, origin_ + ":" + std::to_string(entry.line) +
                                               ": unknown key '" + key + "' in section [" + name_ +
                                               "]");
    }
  }

  double parse_number(const std::string& key, const RawEntry& e) const {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(e.value.c_str(), &end);
    if (errno != 0 || end == e.value.c_str() || *end != '\0')
      fail(key, e, "cannot parse '" + e.value + "' as a number");
    return v;
  }

  [[noreturn]] void fail(const std::string& key, const RawEntry& e, const std::string& why) const {
    throw ConfigError(key, e.line,
                      origin_ + ":" + std::to_string(e.line) + ": " + key + ": " + why);
  }

 private:
  std::map<std::string, RawEntry>* entries_ = nullptr;
  std::string name_;
  std::string origin_;
};

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : value) {
    if (ch == ',') {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  items.push_back(trim(cur));
  return items;
}

// Accepts "a, b, c" or "start:stop:step" (inclusive stop).
std::vector<double> parse_number_list(const SectionReader& reader, const std::string& key,
                                      const RawEntry& e) {
  std::vector<double> values;
  if (e.value.find(':') != std::string::npos) {
    const auto parts = split_list(e.value);
    if (parts.size() != 1) reader.fail(key, e, "mixing ranges and commas is not supported");
    std::vector<std::string> bounds;
    std::string cur;
    for (char ch : e.value) {
      if (ch == ':') {
        bounds.push_back(trim(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    bounds.push_back(trim(cur));
    if (bounds.size() != 3) reader.fail(key, e, "range must be start:stop:step");
    const double start = reader.parse_number(key, {bounds[0], e.line});
    const double stop = reader.parse_number(key, {bounds[1], e.line});
    const double step = reader.parse_number(key, {bounds[2], e.line});
    if (step <= 0) reader.fail(key, e, "range step must be > 0");
    for (double v = start; v <= stop + 1e-9; v += step) values.push_back(v);
  } else {
    for (const auto& item : split_list(e.value))
      values.push_back(reader.parse_number(key, {item, e.line}));
  }
  if (values.empty()) reader.fail(key, e, "list must not be empty");
  return values;
}

}  // namespace

ResolvedConfig parse_config_text(const std::string& text, const std::string& origin) {
  SectionMap sections = tokenize(text, origin);

  SectionReader scenario(sections, "scenario", origin);
  scenario.check_unknown({"area_side_m", "num_cues", "num_pairs", "max_pair_dist_m", "carrier_ghz",
                          "bandwidth_mhz", "rb_total", "overhead_fraction", "n_s", "n_d",
                          "pt_cue_dbm", "pt_due_dedicated_dbm", "p_max_dbm", "tau_due", "tau_n_db",
                          "gamma_min_db", "noise_psd_dbm_hz", "drops", "rng_seed"});

  ResolvedConfig resolved;
  SimConfig& cfg = resolved.scenario;
  cfg.area_side_m = scenario.number("area_side_m");
  cfg.num_cues = static_cast<int>(scenario.integer("num_cues"));
  cfg.num_pairs = static_cast<int>(scenario.integer("num_pairs"));
  cfg.max_pair_dist_m = scenario.number("max_pair_dist_m");
  cfg.carrier_ghz = scenario.number("carrier_ghz");
  cfg.bandwidth_mhz = scenario.number("bandwidth_mhz");
  cfg.rb_total = static_cast<int>(scenario.integer("rb_total"));
  cfg.overhead_fraction = scenario.number("overhead_fraction");
  cfg.n_s = static_cast<int>(scenario.integer("n_s"));
  cfg.n_d = static_cast<int>(scenario.integer("n_d"));
  cfg.pt_cue_dbm = scenario.number("pt_cue_dbm");
  cfg.pt_due_dedicated_dbm = scenario.number("pt_due_dedicated_dbm");
  cfg.p_max_dbm = scenario.number_or("p_max_dbm", 23.0);
  cfg.tau_due = scenario.number("tau_due");
  cfg.tau_n_db = scenario.number("tau_n_db");
  cfg.gamma_min_db = scenario.number("gamma_min_db");
  cfg.noise_psd_dbm_hz = scenario.number("noise_psd_dbm_hz");
  cfg.drops = static_cast<int>(scenario.integer("drops"));
  cfg.rng_seed = static_cast<std::uint64_t>(scenario.integer("rng_seed"));

  if (const auto problems = validate(cfg); !problems.empty()) {
    const auto& first = problems.front();
    const auto colon = first.find(':');
    throw ConfigError(first.substr(0, colon), 0, origin + ": " + first);
  }

  SectionReader campaign(sections, "campaign", origin);
  campaign.check_unknown({"pair_counts", "pt_dbm_values", "tau_n_values_db", "schemes", "drops"});

  CampaignSpec& spec = resolved.campaign;
  spec.base = cfg;
  if (const RawEntry* e = campaign.get("pair_counts")) {
    for (double v : parse_number_list(campaign, "pair_counts", *e))
      spec.pair_counts.push_back(static_cast<int>(std::llround(v)));
  } else {
    for (int n = 5; n <= 75; n += 5) spec.pair_counts.push_back(n);
  }
  if (const RawEntry* e = campaign.get("pt_dbm_values"))
    spec.pt_dbm_values = parse_number_list(campaign, "pt_dbm_values", *e);
  else
    spec.pt_dbm_values = {10.0, 15.0, 20.0};
  if (const RawEntry* e = campaign.get("tau_n_values_db"))
    spec.tau_n_values_db = parse_number_list(campaign, "tau_n_values_db", *e);
  else
    for (double tau = -30.0; tau <= 0.0; tau += 2.0) spec.tau_n_values_db.push_back(tau);
  if (const RawEntry* e = campaign.get("schemes")) {
    for (const auto& item : split_list(e->value)) {
      const auto scheme = scheme_from_string(item);
      if (!scheme)
        campaign.fail("schemes", *e, "unknown scheme '" + item + "' (expected csd or maxsd)");
      spec.schemes.push_back(*scheme);
    }
  } else {
    spec.schemes = {Scheme::csd, Scheme::max_sd};
  }
  spec.drops = campaign.has("drops") ? static_cast<int>(campaign.integer("drops")) : cfg.drops;

  if (const auto problems = validate(spec); !problems.empty()) {
    const auto& first = problems.front();
    const auto colon = first.find(':');
    throw ConfigError(first.substr(0, colon), 0, origin + ": " + first);
  }
  return resolved;
}

ResolvedConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, path + ": cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

}  // namespace csd
