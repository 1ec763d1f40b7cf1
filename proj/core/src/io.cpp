#include "hglens/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hglens/error.hpp"

namespace hglens {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ArgumentError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string_view extension(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

void SampledProfile::validate() const {
  if (axes.empty() || axes.size() > 2) throw ArgumentError("SampledProfile: need 1 or 2 axes");
  for (const auto& a : axes) {
    if (a.coordinates.empty()) throw ArgumentError("SampledProfile: empty axis " + a.label);
    for (std::size_t i = 1; i < a.coordinates.size(); ++i) {
      if (!(a.coordinates[i] > a.coordinates[i - 1])) {
        throw ArgumentError("SampledProfile: axis " + a.label + " is not strictly increasing");
      }
    }
  }
  const std::size_t n = grid_size();
  for (const auto& c : channels) {
    if (c.values.size() != n) {
      throw ArgumentError("SampledProfile: channel " + c.name + " has " +
                          std::to_string(c.values.size()) + " values for a grid of " +
                          std::to_string(n));
    }
  }
  if (!metadata.contains("units")) throw ArgumentError("SampledProfile: missing units metadata");
}

std::size_t SampledProfile::grid_size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.coordinates.size();
  return n;
}

void Table::validate() const {
  if (columns.empty()) throw ArgumentError("Table: no columns");
  for (const auto& c : columns) {
    if (c.values.size() != columns.front().values.size()) {
      throw ArgumentError("Table: column " + c.name + " has a different length");
    }
  }
  if (!metadata.contains("units")) throw ArgumentError("Table: missing units metadata");
}

namespace {

void write_metadata(const Metadata& m, std::ostream& os) {
  for (const auto& [k, v] : m) os << "# " << k << ": " << v << '\n';
}

std::string header_cell(const std::string& name, const std::string& unit) {
  return name + "[" + unit + "]";
}

json metadata_json(const Metadata& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

Metadata metadata_from(const json& j) {
  Metadata m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<std::string>();
  return m;
}

json numbers_json(const std::vector<double>& v) {
  json arr = json::array();
  for (double x : v) {
    if (std::isfinite(x)) {
      arr.push_back(x);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

std::vector<double> numbers_from(const json& arr) {
  std::vector<double> v;
  v.reserve(arr.size());
  for (const auto& x : arr) v.push_back(x.is_null() ? std::nan("") : x.get<double>());
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_csv(const SampledProfile& p, std::ostream& os) {
  p.validate();
  write_metadata(p.metadata, os);
  bool first = true;
  auto sep = [&]() -> std::ostream& {
    if (!first) os << ',';
    first = false;
    return os;
  };
  for (const auto& a : p.axes) sep() << header_cell(a.label, a.unit);
  for (const auto& c : p.channels) sep() << header_cell(c.name, c.unit);
  os << '\n';

  const std::size_t inner = p.axes.size() == 2 ? p.axes[1].coordinates.size() : 1;
  for (std::size_t i = 0; i < p.grid_size(); ++i) {
    os << format_number(p.axes[0].coordinates[i / inner]);
    if (p.axes.size() == 2) os << ',' << format_number(p.axes[1].coordinates[i % inner]);
    for (const auto& c : p.channels) os << ',' << format_number(c.values[i]);
    os << '\n';
  }
}

void write_csv(const Table& t, std::ostream& os) {
  t.validate();
  write_metadata(t.metadata, os);
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << header_cell(t.columns[c].name, t.columns[c].unit);
  }
  os << '\n';
  for (std::size_t r = 0; r < t.columns.front().values.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) os << ',';
      os << format_number(t.columns[c].values[r]);
    }
    os << '\n';
  }
}

std::string to_json(const SampledProfile& p) {
  p.validate();
  json j;
  j["metadata"] = metadata_json(p.metadata);
  j["axes"] = json::array();
  for (const auto& a : p.axes) {
    j["axes"].push_back({{"label", a.label}, {"unit", a.unit}, {"coordinates", numbers_json(a.coordinates)}});
  }
  j["channels"] = json::array();
  for (const auto& c : p.channels) {
    j["channels"].push_back({{"name", c.name}, {"unit", c.unit}, {"values", numbers_json(c.values)}});
  }
  return j.dump(1) + "\n";
}

std::string to_json(const Table& t) {
  t.validate();
  json j;
  j["metadata"] = metadata_json(t.metadata);
  j["columns"] = json::array();
  for (const auto& c : t.columns) {
    j["columns"].push_back({{"name", c.name}, {"unit", c.unit}, {"values", numbers_json(c.values)}});
  }
  return j.dump(1) + "\n";
}

SampledProfile profile_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    SampledProfile p;
    p.metadata = metadata_from(j.at("metadata"));
    for (const auto& a : j.at("axes")) {
      p.axes.push_back({a.at("label").get<std::string>(), a.at("unit").get<std::string>(),
                        numbers_from(a.at("coordinates"))});
    }
    for (const auto& c : j.at("channels")) {
      p.channels.push_back({c.at("name").get<std::string>(), c.at("unit").get<std::string>(),
                            numbers_from(c.at("values"))});
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("profile_from_json: ") + e.what());
  }
}

Table table_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    Table t;
    t.metadata = metadata_from(j.at("metadata"));
    for (const auto& c : j.at("columns")) {
      t.columns.push_back({c.at("name").get<std::string>(), c.at("unit").get<std::string>(),
                           numbers_from(c.at("values"))});
    }
    t.validate();
    return t;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("table_from_json: ") + e.what());
  }
}

std::filesystem::path write_artifact(const SampledProfile& p, const std::filesystem::path& dir,
                                     const std::string& stem, OutputFormat format) {
  const auto path = dir / (stem + "." + std::string(extension(format)));
  if (format == OutputFormat::json) {
    write_file(path, to_json(p));
  } else {
    std::ostringstream os;
    write_csv(p, os);
    write_file(path, os.str());
  }
  return path;
}

std::filesystem::path write_artifact(const Table& t, const std::filesystem::path& dir,
                                     const std::string& stem, OutputFormat format) {
  const auto path = dir / (stem + "." + std::string(extension(format)));
  if (format == OutputFormat::json) {
    write_file(path, to_json(t));
  } else {
    std::ostringstream os;
    write_csv(t, os);
    write_file(path, os.str());
  }
  return path;
}

// ---------------------------------------------------------------------------
// RunConfig

namespace {

constexpr double kDefaultDetuningLinewidths = 40000.0;
constexpr double kDefaultWaist = 1e-6;
constexpr double kDefaultVelocity = 800.0;

void exclusive(const std::optional<double>& a, const std::optional<double>& b, const char* na,
               const char* nb) {
  if (a && b) throw ArgumentError(std::string(na) + " and " + std::string(nb) + " are mutually exclusive");
}

void positive(const std::optional<double>& v, const char* name) {
  if (v && !(*v > 0.0)) throw ArgumentError(std::string(name) + " must be positive");
}

std::optional<double> number(const json& obj, const char* key, std::set<std::string>& seen) {
  seen.insert(key);
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  if (!obj.at(key).is_number()) throw ArgumentError(std::string(key) + " must be a number");
  return obj.at(key).get<double>();
}

void reject_unknown(const json& obj, const std::set<std::string>& seen, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    if (!seen.contains(k)) throw ArgumentError("unknown key '" + k + "' in " + where);
  }
}

}  // namespace

void RunConfig::validate() const {
  exclusive(mass_kg, mass_amu, "mass_kg", "mass_amu");
  exclusive(linewidth_rad_s, linewidth_hz, "linewidth_rad_s", "linewidth_hz");
  exclusive(transition_wavelength_m, transition_frequency_rad_s, "wavelength_m",
            "transition_frequency_rad_s");
  exclusive(detuning_linewidths, detuning_rad_s, "detuning_linewidths", "detuning_rad_s");
  exclusive(rayleigh_x_m, waist_x_m, "rayleigh_x_m", "waist_x_m");
  exclusive(rayleigh_y_m, waist_y_m, "rayleigh_y_m", "waist_y_m");
  exclusive(kinetic_energy_j, velocity_m_s, "kinetic_energy_j", "velocity_m_s");
  for (const auto* v : {&mass_kg, &mass_amu, &linewidth_rad_s, &linewidth_hz,
                        &transition_wavelength_m, &transition_frequency_rad_s, &laser_wavelength_m,
                        &rayleigh_x_m, &rayleigh_y_m, &waist_x_m, &waist_y_m, &kinetic_energy_j,
                        &velocity_m_s, &half_width}) {
    positive(*v, "configuration values");
  }
  if (!(power_w > 0.0)) throw ArgumentError("power_w must be positive");
  if ((detuning_linewidths && *detuning_linewidths == 0.0) ||
      (detuning_rad_s && *detuning_rad_s == 0.0)) {
    throw ArgumentError("detuning must be nonzero");
  }
  for (int o : orders) {
    if (o < 1 || o % 2 == 0) throw ArgumentError("orders must be odd and >= 1, got " + std::to_string(o));
  }
  if (grid_points < 2) throw ArgumentError("grid_points must be at least 2");
}

AtomSpecies RunConfig::species() const {
  const AtomSpecies na = AtomSpecies::sodium_d2();
  const double mass = mass_kg ? *mass_kg : mass_amu ? *mass_amu * constants::atomic_mass_unit : na.mass();
  const double gamma = linewidth_rad_s ? *linewidth_rad_s
                        : linewidth_hz  ? 2.0 * kPi * *linewidth_hz
                                        : na.linewidth();
  if (transition_frequency_rad_s) return {mass, gamma, *transition_frequency_rad_s};
  return AtomSpecies::from_wavelength(mass, gamma, transition_wavelength_m ? *transition_wavelength_m
                                                                           : na.wavelength());
}

double RunConfig::detuning() const {
  if (detuning_rad_s) return *detuning_rad_s;
  return (detuning_linewidths ? *detuning_linewidths : kDefaultDetuningLinewidths) *
         species().linewidth();
}

double RunConfig::laser_wavelength() const {
  if (laser_wavelength_m) return *laser_wavelength_m;
  return 2.0 * kPi * constants::speed_of_light / (species().transition_frequency() + detuning());
}

BeamGeometry RunConfig::geometry() const {
  const double lambda = laser_wavelength();
  auto rayleigh = [lambda](const std::optional<double>& zr, const std::optional<double>& w) {
    if (zr) return *zr;
    const double waist = w ? *w : kDefaultWaist;
    return kPi * waist * waist / lambda;
  };
  return {lambda, rayleigh(rayleigh_x_m, waist_x_m), rayleigh(rayleigh_y_m, waist_y_m)};
}

AtomBeam RunConfig::atom_beam() const {
  const double mass = species().mass();
  if (kinetic_energy_j) return {*kinetic_energy_j, mass};
  return AtomBeam::from_velocity(velocity_m_s ? *velocity_m_s : kDefaultVelocity, mass);
}

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ArgumentError("config root must be an object");

  RunConfig c;
  const auto section = [&](const char* name) -> json {
    if (!root.contains(name)) return json::object();
    if (!root.at(name).is_object()) throw ArgumentError(std::string(name) + " must be an object");
    return root.at(name);
  };

  try {
    reject_unknown(root, {"species", "laser", "geometry", "atom_beam", "orders", "output"}, "config");

    {
      const auto s = section("species");
      std::set<std::string> seen{"name"};
      if (s.contains("name")) c.species_name = s.at("name").get<std::string>();
      c.mass_kg = number(s, "mass_kg", seen);
      c.mass_amu = number(s, "mass_amu", seen);
      c.linewidth_rad_s = number(s, "linewidth_rad_s", seen);
      c.linewidth_hz = number(s, "linewidth_hz", seen);
      c.transition_wavelength_m = number(s, "wavelength_m", seen);
      c.transition_frequency_rad_s = number(s, "transition_frequency_rad_s", seen);
      reject_unknown(s, seen, "species");
    }
    {
      const auto l = section("laser");
      std::set<std::string> seen;
      if (auto p = number(l, "power_w", seen)) c.power_w = *p;
      c.laser_wavelength_m = number(l, "wavelength_m", seen);
      c.detuning_linewidths = number(l, "detuning_linewidths", seen);
      c.detuning_rad_s = number(l, "detuning_rad_s", seen);
      reject_unknown(l, seen, "laser");
    }
    {
      const auto g = section("geometry");
      std::set<std::string> seen;
      c.rayleigh_x_m = number(g, "rayleigh_x_m", seen);
      c.rayleigh_y_m = number(g, "rayleigh_y_m", seen);
      c.waist_x_m = number(g, "waist_x_m", seen);
      c.waist_y_m = number(g, "waist_y_m", seen);
      reject_unknown(g, seen, "geometry");
    }
    {
      const auto b = section("atom_beam");
      std::set<std::string> seen;
      c.kinetic_energy_j = number(b, "kinetic_energy_j", seen);
      c.velocity_m_s = number(b, "velocity_m_s", seen);
      reject_unknown(b, seen, "atom_beam");
    }
    if (root.contains("orders")) {
      for (const auto& o : root.at("orders")) c.orders.push_back(o.get<int>());
    }
    {
      const auto o = section("output");
      std::set<std::string> seen{"directory", "format"};
      if (o.contains("directory")) c.output_dir = o.at("directory").get<std::string>();
      if (o.contains("format")) c.format = parse_format(o.at("format").get<std::string>());
      if (auto n = number(o, "grid_points", seen)) c.grid_points = static_cast<int>(*n);
      c.half_width = number(o, "half_width", seen);
      reject_unknown(o, seen, "output");
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace hglens
