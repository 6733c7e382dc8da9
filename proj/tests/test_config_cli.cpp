#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "csd/cli.hpp"
#include "csd/config.hpp"
#include "csd/report.hpp"
#include "support.hpp"

using namespace csd;
namespace fs = std::filesystem;

namespace {

const char* kTinyConfig = R"(# test config
[scenario]
area_side_m          = 500
num_cues             = 4
num_pairs            = 3
max_pair_dist_m      = 200
carrier_ghz          = 2
bandwidth_mhz        = 20
rb_total             = 40
overhead_fraction    = 0     # no signalling share
n_s                  = 20
n_d                  = 20
pt_cue_dbm           = 10
pt_due_dedicated_dbm = 10
tau_due              = 10
tau_n_db             = 0
gamma_min_db         = -9.478
noise_psd_dbm_hz     = -174
drops                = 2
rng_seed             = 9

[campaign]
pair_counts          = 2, 3
pt_dbm_values        = 10, 20
tau_n_values_db      = -8, 0
schemes              = csd, maxsd
drops                = 2
)";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path fresh_dir(const std::string& tag) {
  static int counter = 0;
  const fs::path dir =
      fs::temp_directory_path() / ("csd_test_" + tag + "_" + std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path path = dir / "config.ini";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("config_cli");

TEST_CASE("a full config parses to the expected values") {
  const ResolvedConfig resolved = parse_config_text(kTinyConfig);
  CHECK(resolved.scenario.num_cues == 4);
  CHECK(resolved.scenario.num_pairs == 3);
  CHECK(resolved.scenario.n_s == 20);
  CHECK(resolved.scenario.overhead_fraction == 0.0);
  CHECK(resolved.scenario.p_max_dbm == 23.0);  // default
  CHECK(resolved.scenario.gamma_min_db == -9.478);
  CHECK(resolved.scenario.rng_seed == 9);
  CHECK(resolved.campaign.pair_counts == std::vector<int>{2, 3});
  CHECK(resolved.campaign.pt_dbm_values == std::vector<double>{10.0, 20.0});
  CHECK(resolved.campaign.schemes == std::vector<Scheme>{Scheme::csd, Scheme::max_sd});
  CHECK(resolved.campaign.drops == 2);
  CHECK(resolved.campaign.base == resolved.scenario);
}

TEST_CASE("missing required key names the key") {
  std::string text = kTinyConfig;
  const auto pos = text.find("n_s ");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, text.find('\n', pos) - pos + 1);
  try {
    parse_config_text(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "n_s");
    CHECK(std::string(e.what()).find("n_s") != std::string::npos);
  }
}

TEST_CASE("unknown and duplicate keys are diagnosed with their line") {
  std::string text = kTinyConfig;
  text += "\nsurprise_key = 1\n";
  try {
    parse_config_text(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "surprise_key");
    CHECK(e.line() > 0);
  }

  text = kTinyConfig;
  text += "\n[scenario]\nn_s = 20\n";  // reopened section, duplicate key
  CHECK_THROWS_AS(parse_config_text(text), ConfigError);
}

TEST_CASE("malformed values are diagnosed") {
  std::string text = kTinyConfig;
  const auto pos = text.find("drops                = 2\n");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, std::string("drops                = 2").size(), "drops                = two");
  CHECK_THROWS_AS(parse_config_text(broken), ConfigError);

  CHECK_THROWS_AS(parse_config_text("n_s = 5\n"), ConfigError);      // key before section
  CHECK_THROWS_AS(parse_config_text("[mystery]\n"), ConfigError);    // unknown section
  CHECK_THROWS_AS(parse_config_text("[scenario\n"), ConfigError);    // unterminated header
}

TEST_CASE("validation failures surface as config errors naming the field") {
  std::string text = kTinyConfig;
  const auto pos = text.find("n_d                  = 20");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("n_d                  = 20").size(), "n_d                  = 19");
  try {
    parse_config_text(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "n_s");  // the RB-budget rule is reported on n_s
  }
}

TEST_CASE("list and range syntaxes") {
  std::string text = kTinyConfig;
  const auto pos = text.find("pair_counts          = 2, 3");
  text.replace(pos, std::string("pair_counts          = 2, 3").size(),
               "pair_counts          = 5:75:5");
  const ResolvedConfig resolved = parse_config_text(text);
  REQUIRE(resolved.campaign.pair_counts.size() == 15);
  CHECK(resolved.campaign.pair_counts.front() == 5);
  CHECK(resolved.campaign.pair_counts.back() == 75);
}

TEST_CASE("campaign defaults cover the full sweep") {
  std::string text = kTinyConfig;
  text.erase(text.find("[campaign]"));
  const ResolvedConfig resolved = parse_config_text(text);
  CHECK(resolved.campaign.pair_counts.size() == 15);
  CHECK(resolved.campaign.pt_dbm_values == std::vector<double>{10.0, 15.0, 20.0});
  CHECK(resolved.campaign.tau_n_values_db.size() == 16);
  CHECK(resolved.campaign.schemes.size() == 2);
  CHECK(resolved.campaign.drops == resolved.scenario.drops);
}

TEST_CASE("cmd_campaign writes the CSV set and a reproducible manifest") {
  const fs::path dir = fresh_dir("campaign");
  const fs::path config = write_config(dir, kTinyConfig);

  cli::CampaignOptions options;
  options.config_path = config.string();
  options.out_dir = (dir / "out").string();
  std::ostringstream diag;
  REQUIRE(cli::cmd_campaign(options, diag) == cli::kExitOk);

  const std::string fig3 = read_file(dir / "out" / "fig3.csv");
  CHECK(fig3.rfind("scheme,num_pairs,pt_dbm,tau_n_db,mean_csum_bits,stderr,drops\n", 0) == 0);
  // 2 schemes x 2 pair counts x 2 pt values at the scenario tau_n.
  CHECK(std::count(fig3.begin(), fig3.end(), '\n') == 1 + 2 * 2 * 2);
  CHECK(fig3.find("csd,2,10.00,0.00,") != std::string::npos);
  CHECK(fig3.find("maxsd,3,20.00,0.00,") != std::string::npos);
  CHECK(fig3.find("\r") == std::string::npos);  // LF only

  const std::string fig4 = read_file(dir / "out" / "fig4.csv");
  // csd only, largest pair count (no 25/50/75 in the grid), 2 pt, 2 taus.
  CHECK(std::count(fig4.begin(), fig4.end(), '\n') == 1 + 1 * 2 * 2);
  CHECK(fig4.find("maxsd") == std::string::npos);

  // Second run: byte-identical outputs.
  cli::CampaignOptions rerun = options;
  rerun.out_dir = (dir / "out2").string();
  REQUIRE(cli::cmd_campaign(rerun, diag) == cli::kExitOk);
  CHECK(read_file(dir / "out2" / "fig3.csv") == fig3);
  CHECK(read_file(dir / "out2" / "fig4.csv") == fig4);

  // The manifest reparses to the same resolved spec and reruns identically.
  const ResolvedConfig direct = load_config_file(config.string());
  const ResolvedConfig via_manifest = load_manifest((dir / "out" / "manifest.json").string());
  CHECK(via_manifest == direct);

  cli::CampaignOptions from_manifest;
  from_manifest.config_path = (dir / "out" / "manifest.json").string();
  from_manifest.out_dir = (dir / "out3").string();
  REQUIRE(cli::cmd_campaign(from_manifest, diag) == cli::kExitOk);
  CHECK(read_file(dir / "out3" / "fig3.csv") == fig3);
  CHECK(read_file(dir / "out3" / "fig4.csv") == fig4);
}

TEST_CASE("cmd_campaign override flags") {
  const fs::path dir = fresh_dir("override");
  const fs::path config = write_config(dir, kTinyConfig);

  cli::CampaignOptions options;
  options.config_path = config.string();
  options.out_dir = (dir / "out").string();
  options.drops = 1;
  options.seed = 1234;
  std::ostringstream diag;
  REQUIRE(cli::cmd_campaign(options, diag) == cli::kExitOk);
  const ResolvedConfig manifest = load_manifest((dir / "out" / "manifest.json").string());
  CHECK(manifest.campaign.drops == 1);
  CHECK(manifest.scenario.rng_seed == 1234);
  CHECK(read_file(dir / "out" / "fig3.csv").find(",1\n") != std::string::npos);
}

TEST_CASE("cmd_campaign exit codes") {
  const fs::path dir = fresh_dir("exitcodes");

  std::ostringstream diag;
  cli::CampaignOptions options;
  options.config_path = (dir / "missing.ini").string();
  options.out_dir = (dir / "out").string();
  CHECK(cli::cmd_campaign(options, diag) == cli::kExitConfigError);

  std::string text = kTinyConfig;
  const auto pos = text.find("n_s ");
  text.erase(pos, text.find('\n', pos) - pos + 1);
  options.config_path = write_config(dir, text).string();
  diag.str("");
  CHECK(cli::cmd_campaign(options, diag) == cli::kExitConfigError);
  CHECK(diag.str().find("n_s") != std::string::npos);
}

TEST_CASE("cmd_inspect prints the fixture's cliques and plan") {
  cli::InspectOptions options;
  options.fixture = csd_test::fixture_path("fig1");
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_inspect(options, out, diag) == cli::kExitOk);
  const std::string text = out.str();
  CHECK(text.find("CUE 0: members={0,3} cliques={0}{3}") != std::string::npos);
  CHECK(text.find("pair 1: members={1,2,3} cliques={1}{2,3}") != std::string::npos);
  CHECK(text.find("quota=2") != std::string::npos);
  CHECK(text.find("c_sum=") != std::string::npos);
}

TEST_CASE("cmd_inspect on a generated drop and its error paths") {
  const fs::path dir = fresh_dir("inspect");
  const fs::path config = write_config(dir, kTinyConfig);

  cli::InspectOptions options;
  options.config_path = config.string();
  options.drop_index = 1;
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_inspect(options, out, diag) == cli::kExitOk);
  CHECK(out.str().find("allocation plan:") != std::string::npos);

  options.drop_index = -1;
  CHECK(cli::cmd_inspect(options, out, diag) == cli::kExitConfigError);

  options.drop_index = 0;
  options.config_path = (dir / "nope.ini").string();
  CHECK(cli::cmd_inspect(options, out, diag) == cli::kExitConfigError);
}

TEST_CASE("cmd_inspect with zero pairs prints ownership only") {
  const fs::path dir = fresh_dir("inspect0");
  std::string text = kTinyConfig;
  const auto pos = text.find("num_pairs            = 3");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("num_pairs            = 3").size(), "num_pairs            = 0");
  const fs::path config = write_config(dir, text);

  cli::InspectOptions options;
  options.config_path = config.string();
  std::ostringstream out, diag;
  REQUIRE(cli::cmd_inspect(options, out, diag) == cli::kExitOk);
  CHECK(out.str().find("CUE 0") != std::string::npos);
  CHECK(out.str().find("due_adjacency") == std::string::npos);
}

TEST_CASE("cmd_campaign reports io failures") {
  const fs::path dir = fresh_dir("iofail");
  const fs::path config = write_config(dir, kTinyConfig);

  cli::CampaignOptions options;
  options.config_path = config.string();
  options.out_dir = (config / "sub").string();  // parent is a file
  options.drops = 1;
  std::ostringstream diag;
  CHECK(cli::cmd_campaign(options, diag) == cli::kExitIoError);
  CHECK_FALSE(diag.str().empty());
}

TEST_SUITE_END();
