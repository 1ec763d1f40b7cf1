#pragma once

// Plot-ready artifacts and run configuration.
//
// CSV dialect: '#'-prefixed metadata lines, then one header row of
// `name[unit]` columns, comma separated, '.' decimal point, LF endings,
// shortest round-trip number formatting. Missing table cells are empty
// (null in JSON).

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hglens/atom_phase.hpp"
#include "hglens/modes.hpp"

namespace hglens {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

[[nodiscard]] OutputFormat parse_format(std::string_view text);
[[nodiscard]] std::string_view extension(OutputFormat f);

using Metadata = std::map<std::string, std::string>;

inline constexpr std::string_view kReducedUnits =
    "reduced: lengths in units of w0x, unit total beam power, eps0*omega_L^2/2 = 1";
inline constexpr std::string_view kSiUnits = "SI";

struct Axis {
  std::string label;
  std::string unit;
  std::vector<double> coordinates;

  bool operator==(const Axis&) const = default;
};

struct Channel {
  std::string name;
  std::string unit;
  std::vector<double> values;

  bool operator==(const Channel&) const = default;
};

/// Values on a 1-D or 2-D grid. Channels are row-major over the axes
/// (the first axis varies slowest).
struct SampledProfile {
  std::vector<Axis> axes;
  std::vector<Channel> channels;
  Metadata metadata;

  /// Throws ArgumentError unless coordinates are strictly monotone, every
  /// channel matches the grid size, and units metadata is present.
  void validate() const;
  [[nodiscard]] std::size_t grid_size() const;

  bool operator==(const SampledProfile&) const = default;
};

/// Column-oriented table; NaN marks a missing cell.
struct Table {
  std::vector<Channel> columns;
  Metadata metadata;

  void validate() const;
  bool operator==(const Table&) const = default;
};

/// Shortest decimal text that round-trips to the same double.
[[nodiscard]] std::string format_number(double v);

void write_csv(const SampledProfile& p, std::ostream& os);
void write_csv(const Table& t, std::ostream& os);
[[nodiscard]] std::string to_json(const SampledProfile& p);
[[nodiscard]] std::string to_json(const Table& t);
[[nodiscard]] SampledProfile profile_from_json(std::string_view text);
[[nodiscard]] Table table_from_json(std::string_view text);

/// Writes `<dir>/<stem>.<ext>` and returns the path. Throws IoError naming
/// the path when it cannot be written.
std::filesystem::path write_artifact(const SampledProfile& p, const std::filesystem::path& dir,
                                     const std::string& stem, OutputFormat format);
std::filesystem::path write_artifact(const Table& t, const std::filesystem::path& dir,
                                     const std::string& stem, OutputFormat format);

/// Run configuration read from a JSON key-value tree. Every field is
/// optional; unset values fall back to the defaults listed in the README.
struct RunConfig {
  // species
  std::string species_name = "sodium-D2";
  std::optional<double> mass_kg, mass_amu;
  std::optional<double> linewidth_rad_s, linewidth_hz;
  std::optional<double> transition_wavelength_m, transition_frequency_rad_s;
  // laser
  double power_w = 0.1;
  std::optional<double> laser_wavelength_m;
  std::optional<double> detuning_linewidths, detuning_rad_s;
  // geometry
  std::optional<double> rayleigh_x_m, rayleigh_y_m, waist_x_m, waist_y_m;
  // atom beam
  std::optional<double> kinetic_energy_j, velocity_m_s;
  // orders and output
  std::vector<int> orders;
  std::optional<std::string> output_dir;
  OutputFormat format = OutputFormat::csv;
  int grid_points = 2001;
  std::optional<double> half_width;

  /// Throws ArgumentError on inconsistent or out-of-range settings.
  void validate() const;

  [[nodiscard]] AtomSpecies species() const;
  /// delta_omega in rad/s; defaults to +40000 linewidths.
  [[nodiscard]] double detuning() const;
  /// Laser wavelength; defaults to 2 pi c / (omega + delta).
  [[nodiscard]] double laser_wavelength() const;
  [[nodiscard]] BeamGeometry geometry() const;
  [[nodiscard]] AtomBeam atom_beam() const;
};

[[nodiscard]] RunConfig parse_config(std::string_view json_text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

}  // namespace hglens
