#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hglens/io.hpp"
#include "hglens_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace hglens;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hglens");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hglens_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

const std::string kScenario = HGLENS_SOURCE_DIR "/configs/gallatin_gould.json";

}  // namespace

TEST_CASE("coeffs writes a triangular table deterministically") {
  const auto dir = scratch("coeffs");
  auto r = run({"coeffs", "--max-order", "5", "--out", dir.string()});
  REQUIRE(r.code == cli::kExitOk);
  const std::string first = slurp(dir / "coefficient_ratios.csv");
  CHECK(first.find("\n5,1,0.62099739957883") != std::string::npos);
  CHECK(first.find("\n1,1,,\n") != std::string::npos);
  r = run({"coeffs", "--max-order", "5", "--out", dir.string()});
  CHECK(slurp(dir / "coefficient_ratios.csv") == first);

  REQUIRE(run({"coeffs", "--max-order", "33", "--out", dir.string(), "--format", "json"}).code == 0);
  const auto t = table_from_json(slurp(dir / "coefficients.json"));
  REQUIRE(t.columns.size() == 18);
  REQUIRE(t.columns[0].values.size() == 17);
  for (std::size_t row = 0; row < 17; ++row) {
    int filled = 0;
    for (std::size_t c = 1; c < t.columns.size(); ++c) filled += !std::isnan(t.columns[c].values[row]);
    CHECK(filled == static_cast<int>(row + 1));
  }
  fs::remove_all(dir);
}

TEST_CASE("profile annotations and json round trip") {
  const auto dir = scratch("profile");
  REQUIRE(run({"profile", "--order", "23", "--out", dir.string(), "--format", "json", "--grid-points", "201"}).code == 0);
  const auto p = profile_from_json(slurp(dir / "profile_23_intensity.json"));
  CHECK(std::stod(p.metadata.at("deviation_mark_ratio_matched")) == doctest::Approx(8.70).epsilon(0.002));
  CHECK(p.metadata.at("units") == std::string(kReducedUnits));
  CHECK(p.axes[0].coordinates.size() == 201);
  const auto f = profile_from_json(slurp(dir / "profile_23_field.json"));
  CHECK(f.channels.size() == 3);
  CHECK(write_artifact(p, dir, "again", OutputFormat::json) == dir / "again.json");
  CHECK(profile_from_json(slurp(dir / "again.json")) == p);

  REQUIRE(run({"profile", "--order", "3", "--z", "0", "--z", "5", "--z", "10", "--out", dir.string(),
               "--grid-points", "11"}).code == 0);
  const std::string grid = slurp(dir / "profile_3_intensity.csv");
  CHECK(grid.find("z[w0x],x[w0x],I_bar[P/w0x]") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("table1 carries published columns") {
  const auto dir = scratch("table1");
  REQUIRE(run({"table1", "--out", dir.string(), "--format", "json"}).code == 0);
  const auto t = table_from_json(slurp(dir / "table1.json"));
  for (const auto& c : t.columns) {
    if (c.name == "rel_diff_d_ratio" || c.name == "rel_diff_power_gain") {
      for (double v : c.values) CHECK(std::abs(v) <= 0.01);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("phase and raycheck read the scenario config") {
  const auto dir = scratch("phase");
  auto r = run({"phase", "--config", kScenario, "--order", "9", "--out", dir.string(), "--grid-points", "51"});
  REQUIRE(r.code == 0);
  const std::string text = slurp(dir / "phase_9.csv");
  CHECK(text.find("# units: SI") != std::string::npos);
  CHECK(text.find("# raman_nath_ratio: ") != std::string::npos);
  CHECK(text.find("x[m],I_bar[W/m],delta_phi[rad]") != std::string::npos);
  r = run({"raycheck", "--config", kScenario, "--order", "5", "--out", dir.string(), "--rays", "9"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "raycheck_5.csv"));
  fs::remove_all(dir);
}

TEST_CASE("output directory falls back to the environment") {
  const auto dir = scratch("env");
  setenv("HGLENS_OUTPUT_DIR", dir.string().c_str(), 1);
  const auto r = run({"coeffs", "--max-order", "3"});
  unsetenv("HGLENS_OUTPUT_DIR");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "coefficients.csv"));
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  CHECK(run({}).code == cli::kExitConfig);
  CHECK(run({"coeffs", "--bogus"}).code == cli::kExitConfig);
  CHECK(run({"profile", "--order", "4", "--out", dir.string()}).code == cli::kExitConfig);
  CHECK(run({"coeffs", "--format", "xml", "--out", dir.string()}).code == cli::kExitConfig);
  CHECK(run({"phase", "--config", "/nonexistent.json"}).code == cli::kExitConfig);
  CHECK(run({"--help"}).code == cli::kExitOk);

  fs::create_directories(dir);
  { std::ofstream(dir / "file") << "x"; }
  const auto io = run({"coeffs", "--max-order", "3", "--out", (dir / "file").string()});
  CHECK(io.code == cli::kExitIo);
  CHECK(io.err.find((dir / "file").string()) != std::string::npos);

  // Atoms far too slow for the potential: Raman-Nath fails.
  const auto slow = dir / "slow.json";
  { std::ofstream(slow) << R"({"atom_beam": {"velocity_m_s": 5}})"; }
  const auto phys = run({"phase", "--config", slow.string(), "--out", dir.string()});
  CHECK(phys.code == cli::kExitPhysics);
  CHECK(phys.err.find("Raman-Nath") != std::string::npos);

  const auto num = run({"zmin", "--order", "3", "--max-rayleigh", "2", "--out", dir.string()});
  CHECK(num.code == cli::kExitNumeric);
  CHECK(num.err.find("scan trace") != std::string::npos);
  fs::remove_all(dir);
}
