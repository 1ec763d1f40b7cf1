#include "hglens_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hglens/atom_phase.hpp"
#include "hglens/dephasing.hpp"
#include "hglens/error.hpp"
#include "hglens/io.hpp"
#include "hglens/lens_metrics.hpp"
#include "hglens/numerics.hpp"
#include "hglens/superposition.hpp"
#include "hglens/version.hpp"

namespace hglens::cli {

namespace {

constexpr const char* kOutputEnv = "HGLENS_OUTPUT_DIR";

struct Options {
  std::optional<int> order;
  std::optional<int> max_order;
  std::vector<int> orders;
  std::string config_path;
  std::string out_dir;
  std::string format;
  std::optional<int> grid_points;
  std::optional<double> half_width;
  std::vector<double> z{0.0};
  double rayleigh = 100.0;
  double tolerance = kDeviationTolerance;
  std::string dephasing_model = "full";
  int angles = 720;
  double max_rayleigh = 1e6;
  int rays = 41;
};

struct Context {
  Options opt;
  RunConfig config;
  std::filesystem::path out_dir;
  OutputFormat format = OutputFormat::csv;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

std::string num(double v) { return format_number(v); }

void check_order(int n) {
  if (n < 1 || n % 2 == 0) throw ArgumentError("order must be odd and >= 1, got " + std::to_string(n));
}

int cutoff_of(int order) {
  check_order(order);
  return (order - 1) / 2;
}

std::vector<int> odd_range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; n += 2) v.push_back(n);
  return v;
}

// --order, then --orders, then --max-order, then the config file, then the fallback.
std::vector<int> resolve_orders(const Context& c, std::vector<int> fallback) {
  std::vector<int> orders;
  if (c.opt.order) {
    orders = {*c.opt.order};
  } else if (!c.opt.orders.empty()) {
    orders = c.opt.orders;
  } else if (c.opt.max_order) {
    check_order(*c.opt.max_order);
    orders = odd_range(1, *c.opt.max_order);
  } else if (!c.config.orders.empty()) {
    orders = c.config.orders;
  } else {
    orders = std::move(fallback);
  }
  for (int n : orders) check_order(n);
  return orders;
}

int grid_points(const Context& c) {
  const int n = c.opt.grid_points ? *c.opt.grid_points : c.config.grid_points;
  if (n < 2) throw ArgumentError("--grid-points must be at least 2");
  return n;
}

std::optional<double> half_width(const Context& c) {
  auto h = c.opt.half_width ? c.opt.half_width : c.config.half_width;
  if (h && !(*h > 0.0)) throw ArgumentError("--half-width must be positive");
  return h;
}

DephasingModel dephasing_model(const Context& c) {
  if (c.opt.dephasing_model == "full") return DephasingModel::full;
  if (c.opt.dephasing_model == "gouy") return DephasingModel::gouy_phase_only;
  throw ArgumentError("--dephasing-model must be full or gouy");
}

Metadata base_metadata(const std::string& command, std::string_view units) {
  return {{"generator", std::string("hglens ") + kVersion},
          {"command", command},
          {"units", std::string(units)}};
}

void emit(Context& c, const auto& artifact, const std::string& stem) {
  const auto path = write_artifact(artifact, c.out_dir, stem, c.format);
  *c.out << path.string() << '\n';
}

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

// ---------------------------------------------------------------------------

void cmd_coeffs(Context& c) {
  const auto orders = resolve_orders(c, odd_range(1, 33));
  int top = 1;
  for (int n : orders) top = std::max(top, n);
  const std::vector<int> rows = odd_range(1, top);

  std::vector<int> cutoffs;
  for (int n : rows) cutoffs.push_back(cutoff_of(n));
  const auto sols = parallel_map(cutoffs, [](int j) { return solve_coefficients(j); });

  Table coeffs;
  Table ratios;
  coeffs.columns.push_back({"order", "1", {}});
  ratios.columns.push_back({"order", "1", {}});
  for (int m : rows) {
    coeffs.columns.push_back({"c" + std::to_string(m), "1", {}});
    ratios.columns.push_back({"c" + std::to_string(m) + "/c1", "1", {}});
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& s = sols[r];
    coeffs.columns[0].values.push_back(rows[r]);
    ratios.columns[0].values.push_back(rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const bool have = k < s.coefficients().size();
      coeffs.columns[k + 1].values.push_back(have ? s.coefficients()[k] : nan());
      ratios.columns[k + 1].values.push_back(have ? s.coefficients()[k] / s.coefficients()[0] : nan());
    }
  }
  coeffs.metadata = base_metadata("coeffs", "dimensionless");
  coeffs.metadata["normalization"] = "sum of squared coefficients is 1, c1 > 0";
  coeffs.metadata["max_order"] = std::to_string(top);
  ratios.metadata = base_metadata("coeffs", "dimensionless");
  ratios.metadata["normalization"] = "coefficients divided by c1";
  ratios.metadata["max_order"] = std::to_string(top);
  emit(c, coeffs, "coefficients");
  emit(c, ratios, "coefficient_ratios");
}

void cmd_profile(Context& c) {
  const auto orders = resolve_orders(c, {1});
  const int points = grid_points(c);
  const auto geom = BeamGeometry::reduced(c.opt.rayleigh);
  std::vector<double> zs = c.opt.z;
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  const double d1 = deviation_mark(ModeSuperposition::single_mode(), geom, c.opt.tolerance);
  for (int order : orders) {
    const int j = cutoff_of(order);
    const auto s = solve_coefficients(j);
    const double half = half_width(c).value_or(default_half_width(s));
    const auto x = uniform_grid(half, points);

    Metadata meta = base_metadata("profile", kReducedUnits);
    meta["order"] = std::to_string(order);
    meta["rayleigh_x"] = num(geom.rayleigh_x());
    meta["deviation_tolerance"] = num(c.opt.tolerance);
    const double d = deviation_mark(s, geom, c.opt.tolerance);
    meta["deviation_mark"] = num(d);
    meta["deviation_mark_ratio_matched"] = num(d * rayleigh_match(j) / d1);
    meta["focal_curvature"] = num(focal_curvature(s, geom));
    meta["outermost_turning_point"] = num(outermost_turning_point(s, geom));

    SampledProfile fieldp;
    fieldp.axes.push_back({"x", "w0x", x});
    Channel re{"re_E", "sqrt(P/w0x^2)", {}};
    Channel im{"im_E", "sqrt(P/w0x^2)", {}};
    Channel ab{"abs_E_sq", "P/w0x^2", {}};
    for (const auto& e : field_profile(s, x, 0.0, geom)) {
      re.values.push_back(e.real());
      im.values.push_back(e.imag());
      ab.values.push_back(std::norm(e));
    }
    fieldp.channels = {re, im, ab};
    fieldp.metadata = meta;
    fieldp.metadata["plane"] = "y = 0, z = 0";
    emit(c, fieldp, "profile_" + std::to_string(order) + "_field");

    SampledProfile ip;
    ip.metadata = meta;
    const double a = focal_curvature(s, geom);
    if (zs.size() == 1) {
      ip.axes.push_back({"x", "w0x", x});
      ip.metadata["z"] = num(zs.front());
      ip.channels.push_back({"I_bar", "P/w0x", intensity_profile(s, x, zs.front(), geom)});
      Channel par{"parabola", "P/w0x", {}};
      for (double xi : x) par.values.push_back(a * xi * xi);
      ip.channels.push_back(std::move(par));
    } else {
      ip.axes.push_back({"z", "w0x", zs});
      ip.axes.push_back({"x", "w0x", x});
      Channel ib{"I_bar", "P/w0x", {}};
      for (double z : zs) {
        const auto row = intensity_profile(s, x, z, geom);
        ib.values.insert(ib.values.end(), row.begin(), row.end());
      }
      ip.channels.push_back(std::move(ib));
    }
    emit(c, ip, "profile_" + std::to_string(order) + "_intensity");
  }
}

void cmd_metrics(Context& c) {
  const auto orders = resolve_orders(c, odd_range(1, 33));
  std::vector<int> cutoffs;
  for (int n : orders) cutoffs.push_back(cutoff_of(n));
  const double tol = c.opt.tolerance;
  const auto rows = parallel_map(cutoffs, [tol](int j) { return lens_metrics(j, tol); });

  Table t;
  t.columns = {{"order", "1", {}},           {"curvature", "P/w0x^3", {}},
               {"deviation_mark", "w0x", {}}, {"power_fraction", "1", {}},
               {"power_ratio", "1", {}},      {"rayleigh_scale", "1", {}},
               {"turning_point", "w0x", {}},  {"turning_point_over_0.57sqrtN", "1", {}}};
  std::vector<double> fit_n;
  std::vector<double> fit_p;
  for (const auto& m : rows) {
    const double vals[] = {double(m.order),    m.curvature,      m.deviation_mark,
                           m.power_fraction,   m.power_ratio,    m.rayleigh_scale,
                           m.turning_point,    m.turning_point / (0.57 * std::sqrt(m.order))};
    for (std::size_t k = 0; k < t.columns.size(); ++k) t.columns[k].values.push_back(vals[k]);
    if (m.order >= 9 && m.order <= 33) {
      fit_n.push_back(m.order);
      fit_p.push_back(m.power_ratio);
    }
  }
  t.metadata = base_metadata("metrics", kReducedUnits);
  t.metadata["deviation_tolerance"] = num(tol);
  t.metadata["power_ratio_definition"] = "P_N / P_1 at equal waist and equal focal curvature";
  if (fit_n.size() >= 2) {
    const auto fit = fit_power_law(fit_n, fit_p);
    t.metadata["power_ratio_fit_range"] = "9 <= N <= 33";
    t.metadata["power_ratio_fit_exponent"] = num(fit.exponent);
    t.metadata["power_ratio_fit_prefactor"] = num(fit.prefactor);
    t.metadata["power_ratio_prefactor_at_exponent_1.5"] = num(fit_prefactor(fit_n, fit_p, 1.5));
  }
  emit(c, t, "metrics");
}

void cmd_table1(Context& c) {
  int top = 33;
  if (c.opt.max_order) {
    check_order(*c.opt.max_order);
    top = *c.opt.max_order;
  }
  const auto rows = table1(top, c.opt.tolerance);
  const auto published = published_table1();

  Table t;
  t.columns = {{"order", "1", {}},
               {"d_ratio", "1", {}},
               {"power_percent", "%", {}},
               {"power_gain", "1", {}},
               {"published_d_ratio", "1", {}},
               {"published_power_percent", "%", {}},
               {"published_power_gain", "1", {}},
               {"rel_diff_d_ratio", "1", {}},
               {"rel_diff_power_gain", "1", {}},
               {"deviation_mark", "w0x", {}},
               {"rayleigh_scale", "1", {}},
               {"curvature", "P/w0x^3", {}},
               {"power_fraction", "1", {}}};
  for (const auto& r : rows) {
    const PublishedRow* p = nullptr;
    for (const auto& q : published) {
      if (q.order == r.order) p = &q;
    }
    const double pd = p ? p->d_ratio : nan();
    const double pe = p ? p->power_percent : nan();
    const double pg = p ? p->power_gain : nan();
    const double vals[] = {double(r.order),
                           r.d_ratio,
                           r.power_percent,
                           r.power_gain,
                           pd,
                           pe,
                           pg,
                           p ? (r.d_ratio - pd) / pd : nan(),
                           p ? (r.power_gain - pg) / pg : nan(),
                           r.metrics.deviation_mark,
                           r.metrics.rayleigh_scale,
                           r.metrics.curvature,
                           r.metrics.power_fraction};
    for (std::size_t k = 0; k < t.columns.size(); ++k) t.columns[k].values.push_back(vals[k]);
  }
  t.metadata = base_metadata("table1", kReducedUnits);
  t.metadata["deviation_tolerance"] = num(c.opt.tolerance);
  t.metadata["geometry"] =
      "equal power; x waist of each order scaled so its focal curvature matches order 1";
  t.metadata["published_precision"] =
      "published values are rounded to the printed digits; compare power_percent to the last printed digit";
  emit(c, t, "table1");
}

void cmd_zmin(Context& c) {
  const auto orders = resolve_orders(c, odd_range(3, 55));
  std::vector<int> cutoffs;
  for (int n : orders) cutoffs.push_back(cutoff_of(n));
  ZminOptions zo;
  zo.tolerance = c.opt.tolerance;
  zo.angles = c.opt.angles;
  zo.model = dephasing_model(c);
  zo.max_rayleigh_in_waists = c.opt.max_rayleigh;
  const auto scans = scan_zmin(cutoffs, zo);

  Table t;
  t.columns = {{"order", "1", {}},
               {"zmin", "lambda_L", {}},
               {"zmin_over_waist", "1", {}},
               {"waist", "lambda_L", {}},
               {"radius", "w0x", {}},
               {"max_relative_deviation", "1", {}},
               {"opening_angle", "deg", {}}};
  for (const auto& s : scans) {
    const double vals[] = {double(s.order),  s.zmin_in_wavelengths,   s.rayleigh_in_waists,
                           s.waist_in_wavelengths, s.radius_in_waists, s.max_relative_deviation,
                           s.opening_angle_deg};
    for (std::size_t k = 0; k < t.columns.size(); ++k) t.columns[k].values.push_back(vals[k]);
  }
  t.metadata = base_metadata("zmin", "lengths in units of lambda_L unless marked w0x");
  t.metadata["deviation_tolerance"] = num(zo.tolerance);
  t.metadata["angles"] = std::to_string(zo.angles);
  t.metadata["dephasing_model"] = c.opt.dephasing_model;
  t.metadata["criterion"] =
      "max over the circle x^2 + z^2 = d^2 of |I(x,z) + I(z,x) - I(x,0) - I(z,0)| / (I(x,0) + I(z,0))";

  auto fit_range = [&](const std::string& tag, int lo, int hi, bool inclusive, double ref_exp) {
    std::vector<double> n;
    std::vector<double> z;
    for (const auto& s : scans) {
      const bool in = inclusive ? (s.order >= lo && s.order <= hi) : (s.order > lo && s.order < hi);
      if (in) {
        n.push_back(s.order);
        z.push_back(s.zmin_in_wavelengths);
      }
    }
    if (n.size() < 2) return;
    const auto f = fit_power_law(n, z);
    t.metadata["fit_" + tag + "_range"] = std::to_string(lo) + (inclusive ? " <= N <= " : " < N < ") +
                                          std::to_string(hi);
    t.metadata["fit_" + tag + "_exponent"] = num(f.exponent);
    t.metadata["fit_" + tag + "_prefactor"] = num(f.prefactor);
    t.metadata["fit_" + tag + "_prefactor_at_exponent_" + num(ref_exp)] =
        num(fit_prefactor(n, z, ref_exp));
  };
  fit_range("small", 3, 13, true, 0.5);
  fit_range("large", 15, 55, false, 1.5);
  emit(c, t, "zmin");
}

struct SiSetup {
  AtomSpecies species;
  AtomBeam beam;
  BeamGeometry geometry;
  double detuning;
  double power;
};

SiSetup si_setup(const Context& c) {
  const auto& cfg = c.config;
  return {cfg.species(), cfg.atom_beam(), cfg.geometry(), cfg.detuning(), cfg.power_w};
}

Metadata si_metadata(const std::string& command, const Context& c, const SiSetup& si) {
  Metadata m = base_metadata(command, kSiUnits);
  m["species"] = c.config.species_name;
  m["power"] = num(si.power);
  m["detuning"] = num(si.detuning);
  m["detuning_linewidths"] = num(si.detuning / si.species.linewidth());
  m["laser_wavelength"] = num(si.geometry.wavelength());
  m["waist_x"] = num(si.geometry.waist_x());
  m["waist_y"] = num(si.geometry.waist_y());
  m["kinetic_energy"] = num(si.beam.kinetic_energy());
  m["saturation_intensity"] = num(saturation_intensity(si.species));
  return m;
}

void cmd_phase(Context& c) {
  const auto orders = resolve_orders(c, {1});
  const auto si = si_setup(c);
  const int points = grid_points(c);
  for (int order : orders) {
    const auto s = solve_coefficients(cutoff_of(order));
    const LaserDrive drive{si.power, si.detuning, si.geometry, s};
    const double half = half_width(c).value_or(default_half_width(s)) * si.geometry.waist_x();
    const auto x = uniform_grid(half, points);
    const double z = c.opt.z.front() * si.geometry.waist_x();
    const auto mask = phase_mask(drive, si.beam, si.species, x, z);
    const auto f = focal_length(drive, si.beam, si.species);
    const double peak = peak_intensity(drive);

    SampledProfile p;
    p.axes.push_back({"x", "m", mask.x});
    p.channels.push_back({"I_bar", "W/m", mask.integrated_intensity});
    p.channels.push_back({"delta_phi", "rad", mask.phase});
    p.metadata = si_metadata("phase", c, si);
    p.metadata["order"] = std::to_string(order);
    p.metadata["z"] = num(z);
    p.metadata["raman_nath_ratio"] = num(mask.raman_nath_ratio);
    p.metadata["peak_intensity"] = num(peak);
    p.metadata["peak_intensity_over_saturation"] = num(peak / saturation_intensity(si.species));
    p.metadata["peak_saturation_parameter"] =
        num(saturation_parameter(peak, si.species, si.detuning));
    const bool weak = weak_field(peak, si.species, si.detuning);
    p.metadata["weak_field"] = weak ? "true" : "false";
    if (!weak) {
      *c.err << "warning: order " << order
             << " peak saturation parameter exceeds the first-order bound " << kWeakFieldRatio << '\n';
    }
    p.metadata["focal_length"] = num(f.closed_form);
    p.metadata["focal_length_fitted"] = num(f.fitted);
    p.metadata["focusing"] = f.focusing ? "true" : "false";
    p.metadata["deviation_mark"] = num(deviation_mark(s, si.geometry, c.opt.tolerance));
    emit(c, p, "phase_" + std::to_string(order));
  }
}

void cmd_raycheck(Context& c) {
  const auto orders = resolve_orders(c, {1});
  const auto si = si_setup(c);
  for (int order : orders) {
    const auto s = solve_coefficients(cutoff_of(order));
    const LaserDrive drive{si.power, si.detuning, si.geometry, s};
    const double h = half_width(c).value_or(0.0) * si.geometry.waist_x();
    const auto rc = ray_check(drive, si.beam, si.species, c.opt.rays, h);

    Table t;
    t.columns = {{"launch", "m", {}}, {"angle", "rad", {}}, {"crossing", "m", {}}};
    for (const auto& r : rc.rays) {
      t.columns[0].values.push_back(r.launch);
      t.columns[1].values.push_back(r.angle);
      t.columns[2].values.push_back(r.crossing);
    }
    t.metadata = si_metadata("raycheck", c, si);
    t.metadata["order"] = std::to_string(order);
    t.metadata["focal_length"] = num(rc.focal_length);
    t.metadata["half_width"] = num(rc.half_width);
    t.metadata["best_focus"] = num(rc.best_focus);
    t.metadata["best_focus_over_focal_length"] = num(rc.best_focus / rc.focal_length);
    t.metadata["rms_at_focal_plane"] = num(rc.rms_at_focal_plane);
    t.metadata["rms_at_best_focus"] = num(rc.rms_at_best_focus);
    emit(c, t, "raycheck_" + std::to_string(order));
  }
}

void add_order_flags(CLI::App* sub, Options& o, bool single, bool list) {
  if (single) sub->add_option("--order", o.order, "Odd order 2J+1");
  sub->add_option("--max-order", o.max_order, "Largest odd order; runs 1, 3, ..., max");
  if (list) sub->add_option("--orders", o.orders, "Explicit list of odd orders");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config_path, "JSON run configuration");
  sub->add_option("--out", o.out_dir,
                  std::string("Output directory (default: config, then $") + kOutputEnv + ", then .)");
  sub->add_option("--format", o.format, "csv or json (default csv)");
  sub->add_option("--tolerance", o.tolerance, "Deviation budget (default 0.0074)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context c;
  c.out = &out;
  c.err = &err;
  Options& o = c.opt;

  CLI::App app{"Hermite-Gaussian superposition lenses for atom optics"};
  app.set_version_flag("--version", std::string("hglens ") + kVersion);
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table for orders 1..max-order");
  add_order_flags(coeffs, o, false, true);
  add_output_flags(coeffs, o);

  auto* profile = app.add_subcommand("profile", "Focal field and integrated intensity profiles");
  add_order_flags(profile, o, true, true);
  add_output_flags(profile, o);
  profile->add_option("--grid-points", o.grid_points, "Samples along x (default 2001)");
  profile->add_option("--half-width", o.half_width,
                      "Half-width in w0x (default 1.2 * 0.57 * sqrt(2J+1))");
  profile->add_option("--z", o.z, "Axial position(s) in w0x; several give a 2-D grid");
  profile->add_option("--rayleigh", o.rayleigh, "z_R in units of w0x (default 100)");

  auto* metrics = app.add_subcommand("metrics", "Curvature, deviation mark and power figures");
  add_order_flags(metrics, o, true, true);
  add_output_flags(metrics, o);

  auto* t1 = app.add_subcommand("table1", "Lens parameter table with published values");
  t1->add_option("--max-order", o.max_order, "Largest odd order (default 33)");
  add_output_flags(t1, o);

  auto* zmin = app.add_subcommand("zmin", "Smallest Rayleigh length of the crossed spherical lens");
  add_order_flags(zmin, o, true, true);
  add_output_flags(zmin, o);
  zmin->add_option("--angles", o.angles, "Perimeter samples (>= 720)");
  zmin->add_option("--dephasing-model", o.dephasing_model, "full or gouy (default full)");
  zmin->add_option("--max-rayleigh", o.max_rayleigh, "Scan ceiling for z_R in w0x (default 1e6)");

  auto* phase = app.add_subcommand("phase", "Atomic phase mask, focal length, Raman-Nath ratio (SI)");
  add_order_flags(phase, o, true, true);
  add_output_flags(phase, o);
  phase->add_option("--grid-points", o.grid_points, "Samples along x (default 2001)");
  phase->add_option("--half-width", o.half_width, "Half-width in w0x");
  phase->add_option("--z", o.z, "Axial position in w0x (default 0)");

  auto* ray = app.add_subcommand("raycheck", "Ballistic ray check of the thin-lens focal length (SI)");
  add_order_flags(ray, o, true, true);
  add_output_flags(ray, o);
  ray->add_option("--rays", o.rays, "Number of rays (default 41)");
  ray->add_option("--half-width", o.half_width, "Launch half-width in w0x (default: deviation mark)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!o.config_path.empty()) c.config = load_config(o.config_path);
    if (!o.out_dir.empty()) {
      c.out_dir = o.out_dir;
    } else if (c.config.output_dir) {
      c.out_dir = *c.config.output_dir;
    } else if (const char* env = std::getenv(kOutputEnv); env && *env) {
      c.out_dir = env;
    } else {
      c.out_dir = ".";
    }
    c.format = o.format.empty() ? c.config.format : parse_format(o.format);
    if (!(o.tolerance > 0.0 && o.tolerance < 0.1)) {
      throw ArgumentError("--tolerance must lie in (0, 0.1)");
    }

    if (coeffs->parsed()) cmd_coeffs(c);
    if (profile->parsed()) cmd_profile(c);
    if (metrics->parsed()) cmd_metrics(c);
    if (t1->parsed()) cmd_table1(c);
    if (zmin->parsed()) cmd_zmin(c);
    if (phase->parsed()) cmd_phase(c);
    if (ray->parsed()) cmd_raycheck(c);
  } catch (const PhysicsValidityError& e) {
    err << "physics validity: " << e.what() << '\n';
    return kExitPhysics;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ArgumentError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace hglens::cli
