#include "twinbeam/cli.hpp"

#include "twinbeam/conditional.hpp"
#include "twinbeam/error.hpp"
#include "twinbeam/oracles.hpp"
#include "twinbeam/parallel.hpp"
#include "twinbeam/phase_space.hpp"
#include "twinbeam/povm.hpp"
#include "twinbeam/teleport.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace twinbeam::cli {

namespace fs = std::filesystem;

namespace {

using Params = std::map<std::string, double>;

double number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw PreconditionError(what + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double required(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw PreconditionError("missing required parameter --" + name);
  return it->second;
}

double optional(const Params& p, const std::string& name, double fallback) {
  auto it = p.find(name);
  return it == p.end() ? fallback : it->second;
}

int integer(const Params& p, const std::string& name, int fallback) {
  double v = optional(p, name, fallback);
  if (v != std::floor(v) || std::abs(v) > 1e6) {
    throw PreconditionError("parameter --" + name + " must be an integer");
  }
  return static_cast<int>(v);
}

std::optional<int> dim_override(const Params& p) {
  if (!p.contains("dim")) return std::nullopt;
  int d = integer(p, "dim", 0);
  if (d < 2 || d > 4096) throw PreconditionError("--dim must lie in [2, 4096]");
  return d;
}

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

Provenance provenance_for(const RunConfig& c, std::optional<int> dim) {
  Provenance p = dim ? base_provenance(*dim, kDefaultTailTolerance)
                     : Provenance{{"twinbeam", kVersion}, {"truncation_dim", "none"}};
  p["command"] = command_name(c.command);
  for (const auto& [k, v] : c.params) p["param." + k] = format_number(v);
  for (const auto& [k, v] : c.options) {
    if (k != "out-dir" && k != "state-csv") p["option." + k] = v;
  }
  return p;
}

json provenance_json(const Provenance& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

// Payload of one command: JSON document and/or CSV table.
struct Result {
  json doc;
  std::optional<Table> table;
  Provenance provenance;
  Format fallback = Format::Json;
};

Format resolve_format(const RunConfig& c, Format fallback) {
  if (c.format) return *c.format;
  auto ext = c.output.extension().string();
  if (ext == ".csv") return Format::Csv;
  if (ext == ".json") return Format::Json;
  return fallback;
}

fs::path write_result(const RunConfig& c, const Result& r, std::ostream& out) {
  Format fmt = resolve_format(c, r.fallback);
  if (fmt == Format::Csv && !r.table) {
    throw PreconditionError(command_name(c.command) + " has no CSV output for these options");
  }
  std::ostringstream buf;
  if (fmt == Format::Csv) {
    write_csv(buf, *r.table, r.provenance);
  } else {
    json doc = r.doc;
    doc["provenance"] = provenance_json(r.provenance);
    buf << doc.dump(2) << "\n";
  }
  if (c.output == "-") {
    out << buf.str();
    return {};
  }
  fs::path path = c.output.empty()
                      ? default_output_dir() / (command_name(c.command) +
                                                (fmt == Format::Csv ? ".csv" : ".json"))
                      : c.output;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open output file " + path.string());
  f << buf.str();
  return path;
}

json moments_json(const FockOperator& s) {
  Moments m = moments(s);
  return {{"mean_photon", m.mean_photon}, {"fano", m.fano}, {"var_x", m.var_x}, {"var_y", m.var_y}};
}

TruncationConfig twin_beam_truncation(const TwinBeamParams& twb, const Params& p, int min_dim = 2) {
  if (auto d = dim_override(p)) return TruncationConfig(*d);
  auto t = TruncationConfig::for_twin_beam(twb);
  return TruncationConfig(std::max(t.dim, min_dim));
}

// ---- commands -------------------------------------------------------------------------

Result onoff(const RunConfig& c) {
  const Params& p = c.params;
  const double n = required(p, "N");
  const double eta = optional(p, "eta", 1.0);
  const int outcome = integer(p, "outcome", 1);
  if (outcome != 0 && outcome != 1) throw PreconditionError("--outcome must be 0 or 1");
  auto twb = TwinBeamParams::from_photons(n);
  auto trunc = twin_beam_truncation(twb, p);
  auto povm = onoff_povm(eta, trunc);
  auto r = conditional_state(twb, outcome == 1 ? povm.click : povm.no_click);

  Result res;
  res.doc["outcome"] = outcome == 1 ? "click" : "no_click";
  const double p_click = click_probability(n, eta);
  res.doc["probability_oracle"] = outcome == 1 ? p_click : 1.0 - p_click;
  res.doc["probability_overlap"] = overlap_probability(twb, OnOffWigner{outcome, eta});
  res.doc["wigner_origin"] = wigner(r.state, 0.0);
  res.doc["moments"] = moments_json(r.state);
  if (outcome == 1) {
    res.doc["wigner_origin_oracle"] = onoff_wigner_origin(n, eta);
    res.doc["fano_oracle"] = onoff_fano(n, eta);
  }
  res.doc["conditional"] = to_json(r);
  int max_n = integer(p, "max-n", std::min(trunc.dim - 1, 10));
  res.table = matrix_table(r.state, max_n);
  res.provenance = provenance_for(c, trunc.dim);
  return res;
}

Result homodyne(const RunConfig& c) {
  const Params& p = c.params;
  const double n = required(p, "N");
  const double eta = optional(p, "eta", 1.0);
  const double x = optional(p, "x", 0.0);
  const double delta = optional(p, "delta", 0.0);
  const int max_n = integer(p, "max-n", 6);
  if (max_n < 0) throw PreconditionError("--max-n must be non-negative");
  if (delta < 0.0) throw PreconditionError("--delta must be non-negative");
  auto twb = TwinBeamParams::from_photons(n);
  auto trunc = twin_beam_truncation(twb, p, max_n + 1);
  PovmElement povm = delta > 0.0   ? binned_homodyne_povm(x, eta, delta, trunc)
                     : eta == 1.0 ? homodyne_projector(x, trunc)
                                  : homodyne_povm(x, eta, trunc);
  auto r = conditional_state(twb, povm);

  Result res;
  res.fallback = Format::Csv;
  res.doc["probability_density_oracle"] = HomodyneStats(n, eta, delta).binned_density(x);
  if (delta == 0.0) {
    SqueezingReport s = conditional_squeezing(x, n, eta);
    res.doc["oracle"] = {{"alpha", s.alpha_eta}, {"zeta", s.zeta_eta}, {"n_th", s.n_th},
                         {"var_x", s.var_x},     {"var_y", s.var_y},   {"squeezed", s.is_squeezed}};
  }
  res.doc["moments"] = moments_json(r.state);
  res.doc["conditional"] = to_json(r);
  res.table = matrix_table(r.state, max_n);
  res.provenance = provenance_for(c, trunc.dim);
  return res;
}

Result sweep_squeezing(const RunConfig& c) {
  const Params& p = c.params;
  const double n = required(p, "N");
  const double eta = required(p, "eta");
  const double delta = required(p, "delta");
  BinnedSqueezing summary = binned_squeezing(0.0, n, eta, delta);
  HomodyneStats stats(n, eta, delta);
  const double reach = summary.x_delta ? 1.5 * *summary.x_delta
                                       : 4.0 * std::sqrt(stats.delta_lambda_eta_sq());
  const double x0 = optional(p, "x-min", -reach);
  const double x1 = optional(p, "x-max", reach);
  const int points = integer(p, "points", 201);
  if (points < 2 || !(x1 > x0)) throw PreconditionError("sweep needs x-max > x-min and points >= 2");

  auto rows = parallel_map(static_cast<size_t>(points), [&](size_t i) {
    const double x = x0 + (x1 - x0) * static_cast<double>(i) / (points - 1);
    BinnedSqueezing b = binned_squeezing(x, n, eta, delta);
    return std::vector<double>{x, stats.binned_density(x), stats.binned_density_expansion(x),
                               b.var_x_delta, binned_conditional_var_x(x, n, eta, delta),
                               b.var_x_delta < 0.25 ? 1.0 : 0.0};
  });

  Result res;
  res.fallback = Format::Csv;
  res.table = Table{{"x", "density", "density_expansion", "var_x_threshold_model", "var_x_exact", "squeezed"}, {}};
  for (auto& r : rows) res.table->add(r);
  res.provenance = provenance_for(c, std::nullopt);
  res.provenance["g"] = format_number(summary.g);
  res.provenance["q_delta"] = format_number(summary.q_delta);
  res.provenance["q_delta_exact"] = format_number(summary.q_delta_exact);
  res.provenance["x_delta"] = summary.x_delta ? format_number(*summary.x_delta) : "none";
  res.doc["x_delta"] = summary.x_delta ? json(*summary.x_delta) : json(nullptr);
  res.doc["q_delta"] = summary.q_delta;
  res.doc["q_delta_exact"] = summary.q_delta_exact;
  res.doc["g"] = summary.g;
  json table = json::array();
  for (auto& r : rows) table.push_back(r);
  res.doc["columns"] = res.table->columns;
  res.doc["rows"] = std::move(table);
  return res;
}

Result teleport(const RunConfig& c, std::vector<fs::path>& written) {
  const Params& p = c.params;
  ChannelParams ch{required(p, "N"), optional(p, "gamma-t", 0.0), optional(p, "M", 0.0),
                   optional(p, "eta", 1.0)};
  ch.validate();
  const int pipeline = integer(p, "pipeline", 0);
  if (pipeline != 0 && pipeline != 1) throw PreconditionError("--pipeline must be 0 or 1");
  const std::string spec = c.options.contains("input") ? c.options.at("input") : "vacuum";
  FockOperator input = parse_state(spec);
  const double k = effective_K(ch);
  const double n_in = mean_photon_number(input);
  TruncationConfig trunc = dim_override(p) ? TruncationConfig(*dim_override(p))
                                           : TruncationConfig(std::max(
                                                 TruncationConfig::for_thermal(n_in + k).dim,
                                                 input.dim() + 4));
  FockOperator out = teleport_state(input, k, trunc);
  NonlocalityBound b = nonlocality_bound(ch);

  Result res;
  res.doc["K"] = k;
  res.doc["F"] = coherent_fidelity(ch);
  res.doc["bound_satisfied"] = b.satisfied;
  res.doc["K0"] = b.k0;
  res.doc["threshold"] = b.threshold;
  res.doc["min_photons"] = b.min_photons ? json(*b.min_photons) : json(nullptr);
  res.doc["input_mean_photon"] = n_in;
  res.doc["output_mean_photon"] = mean_photon_number(out);
  if (spec.starts_with("coherent:")) {
    // Overlap with the input coherent state, read back from the input's mean field.
    cplx z(quadrature_mean(input, 0.0), quadrature_mean(input, 0.5 * std::numbers::pi));
    res.doc["fidelity_numeric"] = fidelity(out, coherent_state(z, trunc));
  }
  if (pipeline == 1) {
    FockOperator via = teleport_via_conditioning(input, ch, trunc);
    res.doc["pipeline_trace_distance"] = trace_distance(via, out);
    out = via;
  }
  res.table = matrix_table(out, out.dim() - 1);
  res.provenance = provenance_for(c, trunc.dim);
  if (c.options.contains("state-csv")) {
    fs::path path = c.options.at("state-csv");
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open " + path.string());
    write_csv(f, *res.table, res.provenance);
    written.push_back(path);
  }
  return res;
}

Result wigner_map_cmd(const RunConfig& c) {
  const Params& p = c.params;
  if (!c.options.contains("state")) throw PreconditionError("missing required option --state");
  FockOperator state = parse_state(c.options.at("state"));
  const double half = optional(p, "half-width", 3.0);
  const int points = integer(p, "points", 61);
  PhaseGrid grid = PhaseGrid::square(half, points);
  auto cols = parallel_map(static_cast<size_t>(grid.nx), [&](size_t i) {
    std::vector<double> w(grid.ny);
    for (int j = 0; j < grid.ny; ++j) w[j] = wigner(state, cplx(grid.x(int(i)), grid.y(j)));
    return w;
  });
  Eigen::MatrixXd values(grid.nx, grid.ny);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) values(i, j) = cols[i][j];
  }

  Result res;
  res.fallback = Format::Csv;
  res.table = Table{{"x", "y", "W"}, {}};
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) res.table->add({grid.x(i), grid.y(j), values(i, j)});
  }
  const double mass = grid_integral(values, grid);
  res.provenance = provenance_for(c, state.dim());
  res.provenance["grid_integral"] = format_number(mass);
  res.doc["grid_integral"] = mass;
  res.doc["x"] = json::array();
  res.doc["y"] = json::array();
  for (int i = 0; i < grid.nx; ++i) res.doc["x"].push_back(grid.x(i));
  for (int j = 0; j < grid.ny; ++j) res.doc["y"].push_back(grid.y(j));
  json rows = json::array();
  for (int i = 0; i < grid.nx; ++i) rows.push_back(cols[i]);
  res.doc["values"] = std::move(rows);
  return res;
}

Result oracle(const RunConfig& c) {
  if (!c.options.contains("name")) throw PreconditionError("missing oracle name");
  const std::string name = c.options.at("name");
  json base = json::object();
  if (c.options.contains("params")) {
    try {
      base = json::parse(c.options.at("params"));
    } catch (const json::parse_error& e) {
      throw PreconditionError(std::string("--params is not valid JSON: ") + e.what());
    }
    if (!base.is_object()) throw PreconditionError("--params must be a JSON object");
  }
  Result res;
  res.provenance = provenance_for(c, std::nullopt);
  const bool has_eta = c.options.contains("eta-grid");
  const bool has_n = c.options.contains("N-list");
  if (!has_eta && !has_n) {
    res.doc["oracle"] = name;
    res.doc["params"] = base;
    res.doc["result"] = evaluate_oracle(name, base);
    return res;
  }

  std::vector<double> etas = has_eta ? parse_grid(c.options.at("eta-grid")) : std::vector<double>{};
  std::vector<double> ns = has_n ? parse_list(c.options.at("N-list")) : std::vector<double>{};
  auto value = [&](std::optional<double> eta, std::optional<double> n) {
    json q = base;
    if (eta) q["eta"] = *eta;
    if (n) q["N"] = *n;
    json r = evaluate_oracle(name, q);
    if (!r.is_number()) throw PreconditionError("oracle '" + name + "' is not scalar; grids need a scalar oracle");
    return r.get<double>();
  };
  Table t;
  if (has_eta) {
    t.columns.push_back("eta");
    if (has_n) {
      for (double n : ns) t.columns.push_back("N=" + format_number(n));
    } else {
      t.columns.push_back(name);
    }
    auto rows = parallel_map(etas.size(), [&](size_t i) {
      std::vector<double> row{etas[i]};
      if (has_n) {
        for (double n : ns) row.push_back(value(etas[i], n));
      } else {
        row.push_back(value(etas[i], std::nullopt));
      }
      return row;
    });
    for (auto& r : rows) t.add(std::move(r));
  } else {
    t.columns = {"N", name};
    for (double n : ns) t.add({n, value(std::nullopt, n)});
  }
  res.fallback = Format::Csv;
  res.doc["oracle"] = name;
  res.doc["params"] = base;
  res.doc["columns"] = t.columns;
  res.doc["rows"] = t.rows;
  res.table = std::move(t);
  return res;
}

std::vector<fs::path> reproduce(const RunConfig& c, std::ostream& out) {
  const int fig = integer(c.params, "fig", 0);
  fs::path dir = c.options.contains("out-dir") ? fs::path(c.options.at("out-dir"))
                                               : default_output_dir() / ("fig" + std::to_string(fig));
  std::vector<RunConfig> jobs;
  auto job = [&](Command cmd, Params p, std::map<std::string, std::string> o, std::string file,
                 Format fmt) {
    RunConfig r{cmd, std::move(p), std::move(o), dir / file, fmt};
    jobs.push_back(std::move(r));
  };
  switch (fig) {
    case 2: {
      const double n = optional(c.params, "N", 1.0);
      const double max_n = optional(c.params, "max-n", 6.0);
      for (double x : {0.0, 0.6}) {
        for (double eta : {1.0, 0.8, 0.4}) {
          job(Command::Homodyne, {{"N", n}, {"eta", eta}, {"x", x}, {"max-n", max_n}}, {},
              "fig2_x" + fixed1(x) + "_eta" + fixed1(eta) + ".csv", Format::Csv);
        }
      }
      break;
    }
    case 3: {
      Params p{{"N", 20.0}, {"eta", 0.7}, {"delta", 0.25}};
      job(Command::SweepSqueezing, p, {}, "fig3_density.csv", Format::Csv);
      job(Command::SweepSqueezing, p, {}, "fig3_summary.json", Format::Json);
      break;
    }
    case 4:
      job(Command::Oracle, {}, {{"name", "g"}, {"eta-grid", "0.5:1.0:51"}, {"N-list", "1,2,5,10"}},
          "fig4_g.csv", Format::Csv);
      break;
    default:
      throw PreconditionError("--fig must be 2, 3 or 4");
  }
  for (const auto& [k, v] : c.params) {
    if (k != "fig" && !(fig == 2 && (k == "N" || k == "max-n"))) {
      throw PreconditionError("parameter --" + k + " does not apply to figure " + std::to_string(fig));
    }
  }

  json manifest;
  manifest["figure"] = fig;
  manifest["twinbeam"] = kVersion;
  manifest["tail_tolerance"] = kDefaultTailTolerance;
  manifest["files"] = json::array();
  std::vector<fs::path> written;
  for (const auto& j : jobs) {
    for (auto& p : execute(j, out)) written.push_back(p);
    json params = json::object();
    for (const auto& [k, v] : j.params) params[k] = v;
    for (const auto& [k, v] : j.options) params[k] = v;
    manifest["files"].push_back(
        {{"path", j.output.filename().string()}, {"command", command_name(j.command)}, {"params", params}});
  }
  fs::path mpath = dir / "manifest.json";
  std::ofstream(mpath, std::ios::binary) << manifest.dump(2) << "\n";
  written.push_back(mpath);
  return written;
}

// ---- oracles --------------------------------------------------------------------------

struct OracleSpec {
  // Parameter names with defaults; nullopt marks a required parameter.
  std::vector<std::pair<std::string, std::optional<double>>> params;
  std::function<json(const Params&)> eval;
};

json channel_json(const Params& a) {
  ChannelParams ch{a.at("N"), a.at("gamma_t"), a.at("M"), a.at("eta")};
  NonlocalityBound b = nonlocality_bound(ch);
  return {{"satisfied", b.satisfied},
          {"max_K", b.max_K},
          {"K0", b.k0},
          {"threshold", b.threshold},
          {"min_photons", b.min_photons ? json(*b.min_photons) : json(nullptr)}};
}

const std::map<std::string, OracleSpec>& oracle_table() {
  using P = std::vector<std::pair<std::string, std::optional<double>>>;
  static const P n_eta{{"N", std::nullopt}, {"eta", 1.0}};
  static const P channel{{"N", std::nullopt}, {"gamma_t", 0.0}, {"M", 0.0}, {"eta", 1.0}};
  static const std::map<std::string, OracleSpec> table{
      {"click_probability", {n_eta, [](const Params& a) { return json(click_probability(a.at("N"), a.at("eta"))); }}},
      {"onoff_wigner_origin", {n_eta, [](const Params& a) { return json(onoff_wigner_origin(a.at("N"), a.at("eta"))); }}},
      {"s_wigner_origin",
       {{{"N", std::nullopt}, {"eta", 1.0}, {"s", std::nullopt}},
        [](const Params& a) { return json(s_wigner_origin_onoff(a.at("N"), a.at("eta"), a.at("s"))); }}},
      {"onoff_fano", {n_eta, [](const Params& a) { return json(onoff_fano(a.at("N"), a.at("eta"))); }}},
      {"onoff_fano_asymptotic",
       {n_eta, [](const Params& a) { return json(onoff_fano_asymptotic(a.at("N"), a.at("eta"))); }}},
      {"poissonian_crossover",
       {{{"eta", 1.0}}, [](const Params& a) { return json(onoff_poissonian_crossover(a.at("eta"))); }}},
      {"homodyne_density",
       {{{"N", std::nullopt}, {"eta", 1.0}, {"x", 0.0}, {"delta", 0.0}},
        [](const Params& a) {
          return json(HomodyneStats(a.at("N"), a.at("eta"), a.at("delta")).binned_density(a.at("x")));
        }}},
      {"conditional_squeezing",
       {{{"N", std::nullopt}, {"eta", 1.0}, {"x", 0.0}},
        [](const Params& a) {
          SqueezingReport s = conditional_squeezing(a.at("x"), a.at("N"), a.at("eta"));
          return json{{"alpha", s.alpha_eta}, {"zeta", s.zeta_eta}, {"n_th", s.n_th},
                      {"var_x", s.var_x},     {"var_y", s.var_y},   {"squeezed", s.is_squeezed}};
        }}},
      {"homodyne_matrix_element",
       {{{"n", std::nullopt}, {"m", std::nullopt}, {"x", 0.0}, {"N", std::nullopt}, {"eta", 1.0}},
        [](const Params& a) {
          double n = a.at("n"), m = a.at("m");
          if (n != std::floor(n) || m != std::floor(m)) throw PreconditionError("n and m must be integers");
          return json(homodyne_matrix_element(int(n), int(m), a.at("x"), a.at("N"), a.at("eta")));
        }}},
      {"g", {{{"eta", std::nullopt}, {"N", std::nullopt}}, [](const Params& a) { return json(g_function(a.at("eta"), a.at("N"))); }}},
      {"binned_squeezing",
       {{{"N", std::nullopt}, {"eta", std::nullopt}, {"delta", std::nullopt}, {"x", 0.0}},
        [](const Params& a) {
          BinnedSqueezing b = binned_squeezing(a.at("x"), a.at("N"), a.at("eta"), a.at("delta"));
          return json{{"var_x_delta", b.var_x_delta},
                      {"var_x_exact", binned_conditional_var_x(a.at("x"), a.at("N"), a.at("eta"), a.at("delta"))},
                      {"x_delta", b.x_delta ? json(*b.x_delta) : json(nullptr)},
                      {"q_delta", b.q_delta},
                      {"q_delta_exact", b.q_delta_exact},
                      {"g", b.g}};
        }}},
      {"conditional_photon_number",
       {{{"N", std::nullopt}, {"eta", 1.0}, {"x", 0.0}},
        [](const Params& a) { return json(conditional_photon_number(a.at("x"), a.at("N"), a.at("eta"))); }}},
      {"energy_average", {{{"N", std::nullopt}}, [](const Params& a) { return json(energy_average(a.at("N"))); }}},
      {"twb_entanglement",
       {{{"N", std::nullopt}},
        [](const Params& a) { return json(twb_entanglement(TwinBeamParams::from_photons(a.at("N")))); }}},
      {"k0", {{{"N", std::nullopt}}, [](const Params& a) { return json(k0(a.at("N"))); }}},
      {"effective_K",
       {channel, [](const Params& a) {
          return json(effective_K(ChannelParams{a.at("N"), a.at("gamma_t"), a.at("M"), a.at("eta")}));
        }}},
      {"coherent_fidelity",
       {channel, [](const Params& a) {
          return json(coherent_fidelity(ChannelParams{a.at("N"), a.at("gamma_t"), a.at("M"), a.at("eta")}));
        }}},
      {"nonlocality_bound", {channel, channel_json}},
  };
  return table;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> names{
      {"onoff", Command::OnOff},         {"homodyne", Command::Homodyne},
      {"sweep-squeezing", Command::SweepSqueezing}, {"teleport", Command::Teleport},
      {"wigner-map", Command::WignerMap}, {"oracle", Command::Oracle},
      {"reproduce", Command::Reproduce}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::OnOff: return "onoff";
    case Command::Homodyne: return "homodyne";
    case Command::SweepSqueezing: return "sweep-squeezing";
    case Command::Teleport: return "teleport";
    case Command::WignerMap: return "wigner-map";
    case Command::Oracle: return "oracle";
    case Command::Reproduce: return "reproduce";
  }
  return "unknown";
}

const std::vector<std::string>& parameter_names(Command c) {
  static const std::map<Command, std::vector<std::string>> names{
      {Command::OnOff, {"N", "eta", "outcome", "max-n", "dim"}},
      {Command::Homodyne, {"N", "eta", "x", "delta", "max-n", "dim"}},
      {Command::SweepSqueezing, {"N", "eta", "delta", "x-min", "x-max", "points"}},
      {Command::Teleport, {"N", "gamma-t", "M", "eta", "pipeline", "dim"}},
      {Command::WignerMap, {"half-width", "points"}},
      {Command::Oracle, {}},
      {Command::Reproduce, {"fig", "N", "max-n"}}};
  return names.at(c);
}

namespace {

const std::vector<std::string>& option_names(Command c) {
  static const std::map<Command, std::vector<std::string>> names{
      {Command::OnOff, {}},
      {Command::Homodyne, {}},
      {Command::SweepSqueezing, {}},
      {Command::Teleport, {"input", "state-csv"}},
      {Command::WignerMap, {"state"}},
      {Command::Oracle, {"name", "params", "eta-grid", "N-list"}},
      {Command::Reproduce, {"out-dir"}}};
  return names.at(c);
}

void reject_unknown(const RunConfig& c) {
  const auto& nums = parameter_names(c.command);
  for (const auto& [k, v] : c.params) {
    if (std::find(nums.begin(), nums.end(), k) == nums.end()) {
      throw PreconditionError("unknown parameter --" + k + " for " + command_name(c.command));
    }
    if (!std::isfinite(v)) throw PreconditionError("parameter --" + k + " must be finite");
  }
  const auto& opts = option_names(c.command);
  for (const auto& [k, v] : c.options) {
    if (std::find(opts.begin(), opts.end(), k) == opts.end()) {
      throw PreconditionError("unknown option --" + k + " for " + command_name(c.command));
    }
  }
}

}  // namespace

fs::path default_output_dir() {
  if (const char* env = std::getenv("TWINBEAM_OUTPUT_DIR"); env && *env) return env;
  return fs::current_path();
}

std::vector<fs::path> execute(const RunConfig& config, std::ostream& out) {
  reject_unknown(config);
  if (config.command == Command::Reproduce) return reproduce(config, out);
  std::vector<fs::path> written;
  Result r;
  switch (config.command) {
    case Command::OnOff: r = onoff(config); break;
    case Command::Homodyne: r = homodyne(config); break;
    case Command::SweepSqueezing: r = sweep_squeezing(config); break;
    case Command::Teleport: r = teleport(config, written); break;
    case Command::WignerMap: r = wigner_map_cmd(config); break;
    case Command::Oracle: r = oracle(config); break;
    case Command::Reproduce: break;
  }
  if (fs::path p = write_result(config, r, out); !p.empty()) written.insert(written.begin(), p);
  return written;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const RejectedOutcome& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (raise --dim)\n";
    return kValidation;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << "\n";
    return kConvergence;
  } catch (const CoverageError& e) {
    err << "convergence failure: " << e.what() << "\n";
    return kConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    execute(config, out);
    return kOk;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3) throw PreconditionError("grid '" + spec + "' must have the form a:b:n");
  double a = number(parts[0], "grid start"), b = number(parts[1], "grid end");
  double n = number(parts[2], "grid size");
  if (n != std::floor(n) || n < 2 || n > 1e6) throw PreconditionError("grid size must be an integer >= 2");
  if (!(b > a)) throw PreconditionError("grid end must exceed its start");
  std::vector<double> out(static_cast<size_t>(n));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  out.back() = b;
  return out;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  for (const auto& part : split(spec, ',')) out.push_back(number(part, "list entry"));
  if (out.empty()) throw PreconditionError("empty list");
  return out;
}

FockOperator parse_state(const std::string& spec, double tail) {
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) args = parse_list(spec.substr(colon + 1));
  auto want = [&](size_t lo, size_t hi) {
    if (args.size() < lo || args.size() > hi) throw PreconditionError("state '" + spec + "': wrong number of arguments");
  };
  if (kind == "vacuum") {
    want(0, 0);
    return number_state(0, TruncationConfig(2, tail));
  }
  if (kind == "fock") {
    want(1, 1);
    if (args[0] != std::floor(args[0]) || args[0] < 0 || args[0] > 4000) {
      throw PreconditionError("Fock index must be a non-negative integer");
    }
    int n = static_cast<int>(args[0]);
    return number_state(n, TruncationConfig(n + 2, tail));
  }
  if (kind == "coherent") {
    want(1, 2);
    cplx z(args[0], args.size() > 1 ? args[1] : 0.0);
    return coherent_state(z, TruncationConfig::for_coherent(std::abs(z), 1e-2 * tail));
  }
  if (kind == "squeezed") {
    want(1, 1);
    // The squeezed-vacuum photon distribution decays like tanh(r)^n.
    double t = std::tanh(std::abs(args[0]));
    auto trunc = TruncationConfig::for_thermal(t / (1.0 - t), 1e-2 * tail);
    return squeezed_state(0.0, args[0], TruncationConfig(trunc.dim, tail));
  }
  if (kind == "thermal") {
    want(1, 1);
    auto trunc = TruncationConfig::for_thermal(args[0], 1e-2 * tail);
    return thermal_state(args[0], TruncationConfig(trunc.dim, tail));
  }
  if (kind == "onoff") {
    want(1, 2);
    auto twb = TwinBeamParams::from_photons(args[0]);
    auto trunc = TruncationConfig::for_twin_beam(twb, tail);
    return conditional_state(twb, onoff_povm(args.size() > 1 ? args[1] : 1.0, trunc).click).state;
  }
  if (kind == "homodyne") {
    want(3, 3);
    auto twb = TwinBeamParams::from_photons(args[0]);
    auto trunc = TruncationConfig::for_twin_beam(twb, tail);
    double eta = args[1], x = args[2];
    PovmElement e = eta == 1.0 ? homodyne_projector(x, trunc) : homodyne_povm(x, eta, trunc);
    return conditional_state(twb, e).state;
  }
  throw PreconditionError("unknown state '" + spec + "'");
}

json evaluate_oracle(const std::string& name, const json& params) {
  const auto& table = oracle_table();
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown oracle '" + name + "'");
  if (!params.is_object()) throw PreconditionError("oracle parameters must be a JSON object");
  Params args;
  for (const auto& [key, value] : params.items()) {
    auto known = std::find_if(it->second.params.begin(), it->second.params.end(),
                              [&](const auto& p) { return p.first == key; });
    if (known == it->second.params.end()) {
      throw PreconditionError("oracle '" + name + "' has no parameter '" + key + "'");
    }
    if (!value.is_number()) throw PreconditionError("oracle parameter '" + key + "' must be a number");
    args[key] = value.get<double>();
  }
  for (const auto& [key, fallback] : it->second.params) {
    if (args.contains(key)) continue;
    if (!fallback) throw PreconditionError("oracle '" + name + "' needs parameter '" + key + "'");
    args[key] = *fallback;
  }
  return it->second.eval(args);
}

std::vector<std::string> oracle_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : oracle_table()) out.push_back(k);
  return out;
}

}  // namespace twinbeam::cli
