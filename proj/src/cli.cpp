#include "landau/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "landau/classical_dynamics.hpp"
#include "landau/counting.hpp"
#include "landau/errors.hpp"
#include "landau/io.hpp"
#include "landau/spectrum.hpp"
#include "landau/wavefunctions.hpp"

namespace landau::cli {

namespace {

using nlohmann::json;
constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Config {
  // energies
  double emax = kUnset;
  double e = kUnset;
  std::string range;
  // geometry
  double L = kUnset;
  double ell = defaults::kEll;
  double log_ratio = defaults::kLogRatio;
  // model options
  std::string parity = "even";
  double gamma = 100.0;
  double z = 0.0;
  long long n = -1;
  std::uint64_t seed = defaults::kSeed;
  double tol = kUnset;
  std::string mode;
  std::string method = "quadrature";
  std::string norm = "unit";
  double half_width = defaults::kWindowHalfWidth;
  // classical
  double B = 1.0, lambda = 0.0, mu = 1.0, charge = 1.0, c_light = 1.0;
  double x0 = 1.0, y0 = 0.0, px0 = 0.0, py0 = 0.0;
  double t_final = kUnset;
  double cap = kUnset;
  double qmin = 1.0, qmax = kUnset;
  // output
  std::string format = "csv";
  std::string out;
  std::string meta;
};

bool is_set(double v) { return !std::isnan(v); }

ModelGeometry geometry(const Config& c) {
  if (is_set(c.L)) {
    ModelGeometry g{c.L, c.ell};
    g.validate();
    return g;
  }
  return ModelGeometry::from_log_ratio(c.log_ratio, c.ell);
}

AccuracySpec accuracy(const Config& c) {
  AccuracySpec acc;
  if (is_set(c.tol)) acc.rel_tol = c.tol;
  acc.validate();
  return acc;
}

// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("--range: cannot parse '" + item + "' as a number");
    }
  }
  if (parts.size() != 3) throw DomainError("--range expects a:b:step");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0.0) || !(b >= a) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("--range needs finite a <= b and step > 0");
  const auto count = static_cast<long long>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw DomainError("--range produces too many points");
  std::vector<double> grid(count);
  for (long long i = 0; i < count; ++i) grid[i] = a + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> energies(const Config& c) {
  if (!c.range.empty() && is_set(c.e)) throw DomainError("give either --e or --range, not both");
  if (!c.range.empty()) return parse_range(c.range);
  if (is_set(c.e)) return {c.e};
  throw DomainError("an energy is required (--e or --range)");
}

bool want_json(const Config& c) {
  if (c.format == "json") return true;
  if (c.format == "csv") return false;
  throw DomainError("--format must be csv or json");
}

json header(const char* subcommand) { return {{"schema_version", defaults::kSchemaVersion}, {"subcommand", subcommand}}; }

void add_geometry(json& j, const ModelGeometry& g) {
  j["L"] = g.L;
  j["ell"] = g.ell;
  j["log_ratio"] = g.log_ratio();
}

void cmd_zeros(const Config& c, std::ostream& out) {
  if (!is_set(c.emax)) throw DomainError("zeros: --emax is required");
  if (!(c.emax >= 0.0)) throw DomainError("zeros: --emax must be >= 0");
  const auto zeros = c.emax > 0.0 ? locate_zeros(c.emax, accuracy(c)) : std::vector<double>{};
  if (want_json(c)) {
    json j = header("zeros");
    j["emax"] = c.emax;
    j["zeros"] = zeros;
    out << j.dump() << '\n';
    return;
  }
  io::CsvWriter csv(out, {"index", "E_zero"});
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    csv.field(static_cast<long long>(i + 1)).field(zeros[i]);
    csv.end_row();
  }
}

void cmd_count(const Config& c, std::ostream& out) {
  const auto geom = geometry(c);
  const auto rows = counting_table(energies(c), geom, accuracy(c));
  if (want_json(c)) {
    json j = header("count");
    add_geometry(j, geom);
    json e = json::array(), theta = json::array(), smooth = json::array(), fluct = json::array(),
         exact = json::array(), sc = json::array();
    for (const auto& r : rows) {
      e.push_back(r.E);
      theta.push_back(r.theta);
      smooth.push_back(r.n_smooth);
      fluct.push_back(r.s_fluct ? json(*r.s_fluct) : json(nullptr));
      exact.push_back(r.n_exact);
      sc.push_back(r.n_sc);
    }
    j["E"] = e;
    j["theta"] = theta;
    j["n_smooth"] = smooth;
    j["s_fluct"] = fluct;
    j["n_exact"] = exact;
    j["n_sc"] = sc;
    out << j.dump() << '\n';
    return;
  }
  io::CsvWriter csv(out, {"E", "theta", "n_smooth", "s_fluct", "n_exact", "n_sc"});
  for (const auto& r : rows) {
    csv.field(r.E).field(r.theta).field(r.n_smooth);
    if (r.s_fluct)
      csv.field(*r.s_fluct);
    else
      csv.field(std::string_view("NA"));
    csv.field(static_cast<long long>(r.n_exact)).field(r.n_sc);
    csv.end_row();
  }
}

void cmd_spectrum(const Config& c, std::ostream& out) {
  const auto geom = geometry(c);
  const Parity parity = parse_parity(c.parity);
  const std::string mode = c.mode.empty() ? "levels" : c.mode;
  const bool as_json = want_json(c);
  if (mode == "levels") {
    if (!is_set(c.emax)) throw DomainError("spectrum: --emax is required");
    const auto levels = solve_spectrum(c.emax, geom, parity, is_set(c.tol) ? c.tol : defaults::kPhaseTol);
    if (as_json) {
      json j = header("spectrum");
      add_geometry(j, geom);
      j["parity"] = to_string(parity);
      json k = json::array(), e = json::array(), res = json::array();
      for (const auto& r : levels) {
        k.push_back(r.k);
        e.push_back(r.E);
        res.push_back(r.residual);
      }
      j["k"] = k;
      j["E"] = e;
      j["residual"] = res;
      out << j.dump() << '\n';
      return;
    }
    io::CsvWriter csv(out, {"parity", "k", "E", "residual"});
    for (const auto& r : levels) {
      csv.field(std::string_view(to_string(parity))).field(static_cast<long long>(r.k)).field(r.E).field(r.residual);
      csv.end_row();
    }
  } else if (mode == "staircase") {
    const auto rows = spectral_staircase(energies(c), geom, parity);
    if (as_json) {
      json j = header("spectrum");
      add_geometry(j, geom);
      j["parity"] = to_string(parity);
      json e = json::array(), count = json::array(), cont = json::array(), miss = json::array(),
           diff = json::array();
      for (const auto& r : rows) {
        e.push_back(r.E);
        count.push_back(r.count);
        cont.push_back(r.continuum_term);
        miss.push_back(r.n_missing);
        diff.push_back(r.continuum_term - static_cast<double>(r.count));
      }
      j["E"] = e;
      j["count"] = count;
      j["continuum_term"] = cont;
      j["n_missing"] = miss;
      j["difference"] = diff;
      out << j.dump() << '\n';
      return;
    }
    io::CsvWriter csv(out, {"E", "count", "continuum_term", "n_missing", "difference"});
    for (const auto& r : rows) {
      csv.field(r.E).field(static_cast<long long>(r.count)).field(r.continuum_term).field(r.n_missing);
      csv.field(r.continuum_term - static_cast<double>(r.count));
      csv.end_row();
    }
  } else {
    throw DomainError("spectrum: --mode must be levels or staircase");
  }
}

void cmd_wavefunction(const Config& c, std::ostream& out) {
  const auto geom = geometry(c);
  const Parity parity = parse_parity(c.parity);
  const double energy = is_set(c.e) ? c.e : 10.0;
  const long long n = c.n < 0 ? defaults::kGridPoints : c.n;
  if (n < 16 || n > 5000) throw DomainError("wavefunction: --n must lie in [16, 5000]");
  NormalizationMode mode;
  if (c.norm == "unit")
    mode = NormalizationMode::unit_constant;
  else if (c.norm == "sup")
    mode = NormalizationMode::sup_one;
  else
    throw DomainError("wavefunction: --norm must be unit or sup");
  const bool as_json = want_json(c);
  const auto grid = grid_field(energy, geom, parity, static_cast<std::size_t>(n), mode, c.half_width);

  json meta = header("wavefunction");
  add_geometry(meta, geom);
  meta["E"] = energy;
  meta["parity"] = to_string(parity);
  meta["normalization"] = c.norm;
  meta["constant"] = {grid.constant.real(), grid.constant.imag()};
  meta["n_x"] = grid.n_x;
  meta["n_y"] = grid.n_y;
  meta["x_min"] = grid.x_min;
  meta["x_max"] = grid.x_max;
  meta["y_min"] = grid.y_min;
  meta["y_max"] = grid.y_max;
  if (energy > 0.0) {
    const auto ridge = ridge_report(grid, energy * geom.ell * geom.ell);
    meta["ridge"] = {{"hyperbola_c", energy * geom.ell * geom.ell},
                     {"checked", ridge.checked},
                     {"on_hyperbola", ridge.on_hyperbola},
                     {"max_distance_cells", ridge.max_distance_cells},
                     {"within_one_cell", ridge.within_one_cell()}};
  }
  if (!c.meta.empty()) {
    std::ofstream m(c.meta, std::ios::binary);
    if (!m) throw DomainError("cannot open --meta file '" + c.meta + "'");
    m << meta.dump() << '\n';
  }
  if (as_json) {
    meta["columns"] = {"x", "y", "re", "im", "abs"};
    meta["layout"] = "column-major float64 little-endian, one column after another, rows in storage order";
    meta["rows"] = grid.n_x * grid.n_y;
    io::write_field_binary(grid, meta.dump(), out);
  } else {
    io::write_field_csv(grid, out);
  }
}

PhysicalParams physical(const Config& c) {
  PhysicalParams p{c.B, c.lambda, c.mu, c.charge, c.c_light};
  p.validate();
  return p;
}

void cmd_classical(const Config& c, std::ostream& out, std::ostream& err) {
  const std::string mode = c.mode.empty() ? "trajectory" : c.mode;
  const bool as_json = want_json(c);
  if (mode == "trajectory") {
    const auto p = physical(c);
    const auto modes = normal_mode_frequencies(p);
    const double t_final = is_set(c.t_final) ? c.t_final : 10.0 * 2.0 * std::numbers::pi / modes.omega_c;
    const double cap = is_set(c.cap) ? c.cap : 10.0 * geometry(c).L;
    const int samples = c.n < 0 ? defaults::kTrajectorySamples : static_cast<int>(c.n);
    const auto traj = integrate_trajectory({c.x0, c.y0, c.px0, c.py0, 0.0}, p, t_final,
                                           is_set(c.tol) ? c.tol : defaults::kIntegratorTol, samples, cap);
    if (traj.position_cap_reached)
      err << "landau_xp: warning: trajectory left |x|, |y| <= " << io::format_number(cap) << " at t = "
          << io::format_number(traj.samples.back().t) << "; output truncated\n";
    if (as_json) {
      json j = header("classical");
      j["mode"] = mode;
      j["omega_c"] = modes.omega_c;
      j["omega_h_abs"] = modes.omega_h_abs;
      j["position_cap_reached"] = traj.position_cap_reached;
      json t = json::array(), x = json::array(), y = json::array(), px = json::array(), py = json::array();
      for (const auto& s : traj.samples) {
        t.push_back(s.t);
        x.push_back(s.x);
        y.push_back(s.y);
        px.push_back(s.p_x);
        py.push_back(s.p_y);
      }
      j["t"] = t;
      j["x"] = x;
      j["y"] = y;
      j["p_x"] = px;
      j["p_y"] = py;
      j["energy"] = traj.energy_series;
      out << j.dump() << '\n';
      return;
    }
    io::write_trajectory_csv(traj, out);
  } else if (mode == "coherent") {
    const double qmax = is_set(c.qmax) ? c.qmax : std::exp(2.0 * std::numbers::pi * 10.0 / c.gamma) * c.qmin;
    const int n = c.n < 0 ? defaults::kTrajectorySamples : static_cast<int>(c.n);
    const auto samples = coherent_trajectory(c.z, c.gamma, c.qmin, qmax, n);
    if (as_json) {
      json j = header("classical");
      j["mode"] = mode;
      j["z"] = c.z;
      j["gamma"] = c.gamma;
      json Q = json::array(), q = json::array(), pp = json::array(), r2 = json::array();
      for (const auto& s : samples) {
        Q.push_back(s.Q);
        q.push_back(s.q);
        pp.push_back(s.p);
        r2.push_back(s.q * s.q + s.p * s.p);
      }
      j["Q"] = Q;
      j["q"] = q;
      j["p"] = pp;
      j["radius2"] = r2;
      out << j.dump() << '\n';
      return;
    }
    io::CsvWriter csv(out, {"Q", "q", "p", "radius2"});
    for (const auto& s : samples) {
      csv.field(s.Q).field(s.q).field(s.p).field(s.q * s.q + s.p * s.p);
      csv.end_row();
    }
  } else if (mode == "action") {
    const auto geom = geometry(c);
    const HigherLevelParams hl{c.gamma, c.z};
    const auto grid = energies(c);
    json j = header("classical");
    json e = json::array(), aq = json::array(), ag = json::array(), na = json::array(), nh = json::array(),
         diff = json::array();
    std::ostringstream body;
    io::CsvWriter csv(body, {"E", "action_Q", "action_q", "n_action", "n_higher_level", "difference"});
    for (double energy : grid) {
      const auto a = action_integral(energy, geom, hl);
      const double n_action = (a.action_Q + a.action_q) / (2.0 * std::numbers::pi);
      const double n_formula = higher_level_count(energy, geom, hl);
      csv.field(energy).field(a.action_Q).field(a.action_q).field(n_action).field(n_formula).field(n_action - n_formula);
      csv.end_row();
      e.push_back(energy);
      aq.push_back(a.action_Q);
      ag.push_back(a.action_q);
      na.push_back(n_action);
      nh.push_back(n_formula);
      diff.push_back(n_action - n_formula);
    }
    if (as_json) {
      j["mode"] = mode;
      add_geometry(j, geom);
      j["gamma"] = c.gamma;
      j["z"] = c.z;
      j["E"] = e;
      j["action_Q"] = aq;
      j["action_q"] = ag;
      j["n_action"] = na;
      j["n_higher_level"] = nh;
      j["difference"] = diff;
      out << j.dump() << '\n';
    } else {
      out << body.str();
    }
  } else {
    throw DomainError("classical: --mode must be trajectory, coherent or action");
  }
}

void cmd_area(const Config& c, std::ostream& out) {
  const auto geom = geometry(c);
  AreaMethod method;
  if (c.method == "quadrature")
    method = AreaMethod::quadrature;
  else if (c.method == "monte_carlo")
    method = AreaMethod::monte_carlo;
  else
    throw DomainError("area: --method must be quadrature or monte_carlo");
  const long long samples = c.n < 0 ? defaults::kMonteCarloSamples : c.n;
  const auto grid = energies(c);
  std::vector<double> closed, numeric;
  for (double energy : grid) {
    closed.push_back(semiclassical_count(energy, geom));
    numeric.push_back(area_count_numeric(energy, geom, method, c.seed, samples));
  }
  if (want_json(c)) {
    json j = header("area");
    add_geometry(j, geom);
    j["method"] = c.method;
    if (method == AreaMethod::monte_carlo) {
      j["seed"] = c.seed;
      j["samples"] = samples;
    }
    j["E"] = grid;
    j["n_sc"] = closed;
    j["area_count"] = numeric;
    out << j.dump() << '\n';
    return;
  }
  io::CsvWriter csv(out, {"E", "n_sc", "area_count"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.field(grid[i]).field(closed[i]).field(numeric[i]);
    csv.end_row();
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::ceiling_exceeded:
    case ErrorKind::pole:
    case ErrorKind::singularity:
    case ErrorKind::non_closure:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Landau-level model of the Riemann zero counting function", "landau_xp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto geometry_opts = [&](CLI::App* s) {
    s->add_option("--L", cfg.L, "Box half-width L (default: from --log-ratio)");
    s->add_option("--ell", cfg.ell, "Magnetic length")->capture_default_str();
    s->add_option("--log-ratio", cfg.log_ratio, "log(L^2 / 2 pi ell^2) when --L is not given")->capture_default_str();
  };
  auto output_opts = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    s->add_option("--out", cfg.out, "Output file (default: standard output)");
  };
  auto energy_opts = [&](CLI::App* s) {
    s->add_option("--e", cfg.e, "Single energy");
    s->add_option("--range", cfg.range, "Energy grid a:b:step (inclusive)");
  };

  auto* zeros = app.add_subcommand("zeros", "Zeros of zeta on the critical line below --emax");
  zeros->add_option("--emax", cfg.emax, "Upper height")->required();
  zeros->add_option("--tol", cfg.tol, "Relative accuracy of zeta");
  output_opts(zeros);

  auto* count = app.add_subcommand("count", "Counting breakdown theta, N-bar, S, N, N_sc");
  energy_opts(count);
  geometry_opts(count);
  count->add_option("--tol", cfg.tol, "Relative accuracy of zeta");
  output_opts(count);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the quantization condition");
  spectrum->add_option("--mode", cfg.mode, "levels (default) or staircase");
  spectrum->add_option("--emax", cfg.emax, "Upper energy for levels");
  energy_opts(spectrum);
  spectrum->add_option("--parity", cfg.parity, "even or odd")->capture_default_str();
  geometry_opts(spectrum);
  spectrum->add_option("--tol", cfg.tol, "Phase residual tolerance");
  output_opts(spectrum);

  auto* wave = app.add_subcommand("wavefunction", "Sampled eigenfunction on a square window");
  wave->add_option("--e", cfg.e, "Energy (default 10)");
  wave->add_option("--parity", cfg.parity, "even or odd")->capture_default_str();
  wave->add_option("--n", cfg.n, "Grid points per side (default 200)");
  wave->add_option("--half-width", cfg.half_width, "Window half-width in units of ell")->capture_default_str();
  wave->add_option("--norm", cfg.norm, "unit or sup")->capture_default_str();
  wave->add_option("--meta", cfg.meta, "Write grid and ridge metadata as JSON to this file");
  geometry_opts(wave);
  output_opts(wave);

  auto* classical = app.add_subcommand("classical", "Classical trajectories, coherent gyration, actions");
  classical->add_option("--mode", cfg.mode, "trajectory (default), coherent or action");
  classical->add_option("--B", cfg.B, "Magnetic field")->capture_default_str();
  classical->add_option("--lambda", cfg.lambda, "Electric potential coefficient")->capture_default_str();
  classical->add_option("--mu", cfg.mu, "Mass")->capture_default_str();
  classical->add_option("--charge", cfg.charge, "Charge magnitude e")->capture_default_str();
  classical->add_option("--c", cfg.c_light, "Speed of light")->capture_default_str();
  classical->add_option("--x0", cfg.x0, "Initial x")->capture_default_str();
  classical->add_option("--y0", cfg.y0, "Initial y")->capture_default_str();
  classical->add_option("--px0", cfg.px0, "Initial p_x")->capture_default_str();
  classical->add_option("--py0", cfg.py0, "Initial p_y")->capture_default_str();
  classical->add_option("--t-final", cfg.t_final, "Integration time (default 10 cyclotron periods)");
  classical->add_option("--cap", cfg.cap, "Stop when |x| or |y| exceeds this (default 10 L)");
  classical->add_option("--tol", cfg.tol, "Integrator tolerance");
  classical->add_option("--n", cfg.n, "Number of samples");
  classical->add_option("--gamma", cfg.gamma, "omega_c / |omega_h|")->capture_default_str();
  classical->add_option("--z", cfg.z, "Coherent-state parameter")->capture_default_str();
  classical->add_option("--qmin", cfg.qmin, "Lower Q for the coherent gyration")->capture_default_str();
  classical->add_option("--qmax", cfg.qmax, "Upper Q (default: ten gyrations)");
  energy_opts(classical);
  geometry_opts(classical);
  output_opts(classical);

  auto* area = app.add_subcommand("area", "Semiclassical count against the numerically integrated area");
  energy_opts(area);
  geometry_opts(area);
  area->add_option("--method", cfg.method, "quadrature or monte_carlo")->capture_default_str();
  area->add_option("--n", cfg.n, "Monte Carlo samples (default 1e6)");
  area->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
  output_opts(area);

  std::vector<const char*> argv{"landau_xp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "landau_xp: error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::ostringstream buffer;
  try {
    if (zeros->parsed()) cmd_zeros(cfg, buffer);
    else if (count->parsed()) cmd_count(cfg, buffer);
    else if (spectrum->parsed()) cmd_spectrum(cfg, buffer);
    else if (wave->parsed()) cmd_wavefunction(cfg, buffer);
    else if (classical->parsed()) cmd_classical(cfg, buffer, err);
    else if (area->parsed()) cmd_area(cfg, buffer);
  } catch (const Error& e) {
    err << "landau_xp: error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "landau_xp: error: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "landau_xp: error: cannot open output file '" << cfg.out << "'\n";
      return kExitConfig;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace landau::cli
