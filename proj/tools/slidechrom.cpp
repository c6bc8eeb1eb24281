// slidechrom: command-line front end for chromatic nonsymmetric polynomials
// of Dyck graphs, their slide and key expansions.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "slidechrom/cli.hpp"

namespace sc = slidechrom;
namespace cli = slidechrom::cli;

namespace {

std::optional<sc::Window> window_from(const std::vector<int>& v) {
  if (v.empty()) return std::nullopt;
  return sc::Window(v[0], v[1]);
}

int emit(const cli::CommandResult& res, bool json) {
  if (json)
    std::cout << res.payload.dump(2) << '\n';
  else
    (res.status == cli::Status::error ? std::cerr : std::cout) << res.text;
  return cli::exit_code(res.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic nonsymmetric polynomials of Dyck graphs"};
  app.require_subcommand(1);

  bool json = false;
  unsigned threads = sc::default_threads();
  bool force = false;
  std::vector<int> window;
  app.add_flag("--json", json, "Print the JSON payload instead of text");
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--force", force, "Allow sweeps with n > 6");
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", window, "Variable window LO HI")->expected(2);
  };

  std::string literal;
  auto* graph = app.add_subcommand("graph", "Edges, restriction map and DOT of a path");
  graph->add_option("path", literal, "Path literal, e.g. ENEENENEE@3,3")->required();

  std::string chrom_mode = "both";
  auto* chrom = app.add_subcommand("chromatic", "Chromatic polynomial by brute force and by slides");
  chrom->add_option("path", literal)->required();
  chrom->add_option("--mode", chrom_mode)->check(CLI::IsMember({"brute", "theorem", "both"}));
  add_window(chrom);

  std::string poly_file;
  auto* slides = app.add_subcommand("slides", "Slide expansion of a polynomial given as JSON");
  slides->add_option("file", poly_file, "JSON polynomial file, - for stdin")->required();
  add_window(slides);

  auto* rdes = app.add_subcommand("rdes", "Per-permutation descents, barrho and rdes");
  rdes->add_option("path", literal)->required();

  std::string back_arg;
  int back_r = 0;
  int back_m = 2;
  auto* back = app.add_subcommand("backstable", "Backstable truncations of a path or a slide");
  back->add_option("target", back_arg, "Path literal or weak composition like 1,2|0,2,0,1")->required();
  back->add_option("-r", back_r, "Positive variables (compositions only)");
  back->add_option("-m", back_m, "Number of nonpositive variables");

  std::optional<int> qsym_m;
  auto* qsym = app.add_subcommand("qsym", "Fundamental quasisymmetric expansion of the stable limit");
  qsym->add_option("path", literal)->required();
  qsym->add_option("-m", qsym_m, "Variables used for the check (default n)");

  bool replay = false;
  auto* keys = app.add_subcommand("keys", "Key expansion, or replay of stored counterexamples");
  keys->add_option("path", literal);
  keys->add_flag("--replay", replay, "Replay fixtures from SLIDECHROM_FIXTURES");

  cli::SweepOptions sweep_opt;
  std::string sweep_mode = "theorem";
  auto* sweep = app.add_subcommand("sweep", "Verify every path of P_{n,r}");
  sweep->add_option("n", sweep_opt.n)->required();
  sweep->add_option("r", sweep_opt.r)->required();
  sweep->add_option("mode", sweep_mode)->check(CLI::IsMember({"theorem", "backstable", "corollary", "keys"}));
  sweep->add_option("-m", sweep_opt.m, "Window depth for backstable/corollary");
  sweep->add_flag("--record", sweep_opt.record, "keys mode: write findings to SLIDECHROM_FIXTURES");

  int paths_n = 0, paths_r = 0;
  bool count_only = false;
  auto* paths = app.add_subcommand("paths", "Enumerate partial Dyck paths");
  paths->add_option("n", paths_n)->required();
  paths->add_option("r", paths_r)->required();
  paths->add_flag("--count", count_only, "Only print the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*graph) return emit(cli::cmd_graph(literal), json);
  if (*chrom) {
    auto mode = chrom_mode == "brute" ? cli::ChromaticMode::brute
                : chrom_mode == "theorem" ? cli::ChromaticMode::theorem
                                          : cli::ChromaticMode::both;
    return emit(cli::cmd_chromatic(literal, window_from(window), mode), json);
  }
  if (*slides) {
    try {
      nlohmann::json doc;
      if (poly_file == "-") {
        doc = nlohmann::json::parse(std::cin);
      } else {
        std::ifstream in(poly_file);
        if (!in) return emit(cli::error_result("cannot open " + poly_file), json);
        doc = nlohmann::json::parse(in);
      }
      return emit(cli::cmd_slides(doc, window_from(window)), json);
    } catch (const std::exception& e) {
      return emit(cli::error_result(e.what()), json);
    }
  }
  if (*rdes) return emit(cli::cmd_rdes(literal), json);
  if (*back) return emit(cli::cmd_backstable(back_arg, back_r, back_m), json);
  if (*qsym) return emit(cli::cmd_qsym(literal, qsym_m), json);
  if (*keys) {
    if (!replay && literal.empty()) return emit(cli::error_result("keys needs a path or --replay"), json);
    return emit(cli::cmd_keys(literal, replay), json);
  }
  if (*sweep) {
    sweep_opt.mode = sweep_mode == "theorem"      ? cli::SweepMode::theorem
                     : sweep_mode == "backstable" ? cli::SweepMode::backstable
                     : sweep_mode == "corollary"  ? cli::SweepMode::corollary
                                                  : cli::SweepMode::keys;
    sweep_opt.threads = threads;
    sweep_opt.force = force;
    return emit(cli::cmd_sweep(sweep_opt), json);
  }
  if (*paths) return emit(cli::cmd_paths(paths_n, paths_r, count_only), json);
  return 2;
}
