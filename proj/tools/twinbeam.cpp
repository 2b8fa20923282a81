#include "twinbeam/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace tc = twinbeam::cli;

namespace {

struct Sub {
  CLI::App* app;
  tc::Command command;
};

void add_number(CLI::App* app, tc::RunConfig& cfg, const std::string& name, const std::string& help) {
  app->add_option_function<double>("--" + name, [&cfg, name](double v) { cfg.params[name] = v; }, help);
}

void add_text(CLI::App* app, tc::RunConfig& cfg, const std::string& flag, const std::string& key,
              const std::string& help) {
  app->add_option_function<std::string>(flag, [&cfg, key](const std::string& v) { cfg.options[key] = v; },
                                        help);
}

void add_common(CLI::App* app, tc::RunConfig& cfg, std::string& output, std::string& format) {
  app->add_option("-o,--output", output, "output file, '-' for stdout");
  app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin-beam conditional measurements and teleportation"};
  app.require_subcommand(1);
  tc::RunConfig cfg{};
  std::string output, format;
  std::vector<Sub> subs;

  auto* onoff = app.add_subcommand("onoff", "click / no-click conditioning");
  add_number(onoff, cfg, "N", "twin-beam photons");
  add_number(onoff, cfg, "eta", "detector efficiency");
  add_number(onoff, cfg, "outcome", "0 (no click) or 1 (click)");
  add_number(onoff, cfg, "max-n", "largest Fock index in the CSV table");
  add_number(onoff, cfg, "dim", "truncation override");
  subs.push_back({onoff, tc::Command::OnOff});

  auto* hom = app.add_subcommand("homodyne", "homodyne-conditioned state matrix elements");
  for (auto [n, h] : {std::pair{"N", "twin-beam photons"}, {"eta", "detector efficiency"},
                      {"x", "homodyne outcome"}, {"delta", "bin width (0: unbinned)"},
                      {"max-n", "largest Fock index in the table"}, {"dim", "truncation override"}}) {
    add_number(hom, cfg, n, h);
  }
  subs.push_back({hom, tc::Command::Homodyne});

  auto* sweep = app.add_subcommand("sweep-squeezing", "binned homodyne outcome density and squeezing");
  for (auto [n, h] : {std::pair{"N", "twin-beam photons"}, {"eta", "detector efficiency"},
                      {"delta", "bin width"}, {"x-min", "sweep start"}, {"x-max", "sweep end"},
                      {"points", "sweep points"}}) {
    add_number(sweep, cfg, n, h);
  }
  subs.push_back({sweep, tc::Command::SweepSqueezing});

  auto* tel = app.add_subcommand("teleport", "teleportation channel with losses");
  for (auto [n, h] : {std::pair{"N", "twin-beam photons"}, {"gamma-t", "loss exposure"},
                      {"M", "thermal background photons"}, {"eta", "heterodyne efficiency"},
                      {"pipeline", "1: also run the full conditional pipeline"},
                      {"dim", "output truncation"}}) {
    add_number(tel, cfg, n, h);
  }
  add_text(tel, cfg, "--input", "input", "vacuum | fock:n | coherent:re[,im] | squeezed:r | thermal:n");
  add_text(tel, cfg, "--state-csv", "state-csv", "also write the output state matrix here");
  subs.push_back({tel, tc::Command::Teleport});

  auto* wig = app.add_subcommand("wigner-map", "Wigner function on a square grid");
  add_text(wig, cfg, "--state", "state",
           "vacuum | fock:n | coherent:re[,im] | squeezed:r | thermal:n | onoff:N[,eta] | homodyne:N,eta,x");
  add_number(wig, cfg, "half-width", "grid half width");
  add_number(wig, cfg, "points", "points per axis");
  subs.push_back({wig, tc::Command::WignerMap});

  auto* orc = app.add_subcommand("oracle", "closed-form results by name");
  orc->add_option_function<std::string>("name", [&](const std::string& v) { cfg.options["name"] = v; },
                                        "oracle name")
      ->required();
  add_text(orc, cfg, "--params", "params", "JSON object of parameters");
  add_text(orc, cfg, "--eta-grid", "eta-grid", "a:b:n sweep of eta");
  add_text(orc, cfg, "--N", "N-list", "comma-separated N values");
  bool list = false;
  orc->add_flag("--list", list, "print the oracle names");
  subs.push_back({orc, tc::Command::Oracle});

  auto* rep = app.add_subcommand("reproduce", "figure datasets with a manifest");
  add_number(rep, cfg, "fig", "2, 3 or 4");
  add_number(rep, cfg, "N", "twin-beam photons (figure 2)");
  add_number(rep, cfg, "max-n", "largest Fock index (figure 2)");
  add_text(rep, cfg, "--out-dir", "out-dir", "output directory");
  subs.push_back({rep, tc::Command::Reproduce});

  for (auto& s : subs) {
    if (s.command != tc::Command::Reproduce) add_common(s.app, cfg, output, format);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tc::kValidation;
  } catch (...) {
    return tc::exit_code_for_current_exception(std::cerr);
  }

  for (auto& s : subs) {
    if (s.app->parsed()) cfg.command = s.command;
  }
  if (cfg.command == tc::Command::Oracle && list) {
    for (const auto& n : tc::oracle_names()) std::cout << n << "\n";
    return tc::kOk;
  }
  cfg.output = output;
  if (format == "json") cfg.format = tc::Format::Json;
  if (format == "csv") cfg.format = tc::Format::Csv;

  try {
    for (const auto& p : tc::execute(cfg, std::cout)) std::cerr << "wrote " << p.string() << "\n";
  } catch (...) {
    return tc::exit_code_for_current_exception(std::cerr);
  }
  return tc::kOk;
}
