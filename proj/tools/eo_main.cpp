#include <atomic>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eo/json_io.hpp"

namespace {

using nlohmann::json;

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

std::optional<std::vector<int>> parse_delta(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      parts.push_back(std::stoi(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      eo::parse_error("BadDelta", "delta must be comma-separated integers");
    }
    pos = next + 1;
  }
  return parts;
}

void emit(const json& rep, bool as_json, std::string (*render)(const json&)) {
  if (as_json)
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << render(rep);
}

int kind_to_exit(eo::ErrorKind k) {
  switch (k) {
    case eo::ErrorKind::Parse:
      return 2;
    case eo::ErrorKind::Domain:
      return 3;
    case eo::ErrorKind::Internal:
      return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ekedahl-Oort invariants of curves, Dieudonne modules, and stable curves"};
  app.require_subcommand(1);

  std::string input_path;
  bool as_json = false;
  bool emit_matrix = false;

  auto* cmd_curve = app.add_subcommand("curve", "invariants of a hyperelliptic curve");
  cmd_curve->add_option("file", input_path, "curve JSON file")->required();
  cmd_curve->add_flag("--emit-matrix", emit_matrix, "include the Hasse-Witt matrix");
  cmd_curve->add_flag("--json", as_json, "machine-readable output");

  auto* cmd_module = app.add_subcommand("module", "invariants of a mod-p Dieudonne module");
  cmd_module->add_option("file", input_path, "module JSON file")->required();
  cmd_module->add_flag("--json", as_json, "machine-readable output");

  auto* cmd_stable = app.add_subcommand("stable", "invariants of a stable curve dual graph");
  cmd_stable->add_option("file", input_path, "stable-curve JSON file")->required();
  cmd_stable->add_flag("--json", as_json, "machine-readable output");

  int opt_g = 1;
  std::string delta_str;
  auto* cmd_enum = app.add_subcommand("enumerate", "all final types of genus g");
  cmd_enum->add_option("--g", opt_g, "genus")->required();
  cmd_enum->add_option("--delta", delta_str, "keep only this Hasse-Witt partition, e.g. 2,1");
  cmd_enum->add_flag("--json", as_json, "machine-readable output");

  auto* cmd_table = app.add_subcommand("table", "delta -> mu correspondence at p-rank 0");
  cmd_table->add_option("--g", opt_g, "genus")->required();
  cmd_table->add_flag("--json", as_json, "machine-readable output");

  eo::SearchSpec spec;
  std::string search_delta, search_checkpoint;
  int search_rank_h = -1, search_vanish = -1;
  auto* cmd_search = app.add_subcommand("search", "exhaustive genus-4 normal-form search");
  cmd_search->add_option("--p", spec.p, "characteristic (odd prime)")->required();
  cmd_search->add_option("--k", spec.k, "extension degree")->default_val(1);
  cmd_search->add_option("--delta", search_delta, "required Hasse-Witt partition, e.g. 2,2");
  cmd_search->add_option("--rank-h", search_rank_h, "required rank of H");
  cmd_search->add_option("--vanish-at", search_vanish, "require H^(m) = 0 for this m");
  cmd_search->add_option("--threads", spec.threads, "worker count")->default_val(1);
  cmd_search->add_option("--checkpoint", search_checkpoint, "checkpoint file for resume");
  cmd_search->add_option("--family", spec.family, "search family")
      ->default_val("hyperelliptic-normal-g4");
  cmd_search->add_option("--stop-after", spec.stop_after_prefixes,
                         "stop after this many completed prefixes (testing aid)");
  cmd_search->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_curve->parsed()) {
      const auto curve = eo::curve_from_json(eo::load_json_file(input_path));
      emit(eo::curve_report(curve, emit_matrix), as_json, eo::render_curve_text);
    } else if (cmd_module->parsed()) {
      const auto mod = eo::module_from_json(eo::load_json_file(input_path));
      emit(eo::module_report(mod), as_json, eo::render_module_text);
    } else if (cmd_stable->parsed()) {
      const auto graph = eo::stable_from_json(eo::load_json_file(input_path));
      const auto rep = eo::stable_invariants(graph);
      emit(eo::stable_report(rep, graph), as_json, eo::render_stable_text);
    } else if (cmd_enum->parsed()) {
      emit(eo::enumerate_report(opt_g, parse_delta(delta_str)), as_json,
           eo::render_enumerate_text);
    } else if (cmd_table->parsed()) {
      eo::require_domain(opt_g >= 1 && opt_g <= 10, "GTooLarge", "table needs 1 <= g <= 10");
      emit(eo::table_report(opt_g), as_json, eo::render_table_text);
    } else if (cmd_search->parsed()) {
      spec.predicate.delta = parse_delta(search_delta);
      if (search_rank_h >= 0) spec.predicate.rank_h = search_rank_h;
      if (search_vanish >= 0) spec.predicate.vanish_at = search_vanish;
      spec.checkpoint_path = search_checkpoint;
      std::signal(SIGINT, handle_sigint);
      const auto result = eo::run_search(spec, &g_interrupted);
      emit(eo::search_report(spec, result), as_json, eo::render_search_text);
      if (result.interrupted) {
        const json err{{"error", "InterruptedCheckpointWritten"},
                       {"kind", "interrupted"},
                       {"message", spec.checkpoint_path.empty()
                                       ? "search interrupted (no checkpoint file given)"
                                       : "search interrupted; resume with --checkpoint " +
                                             spec.checkpoint_path}};
        std::cerr << err.dump() << "\n";
        return 130;
      }
    }
  } catch (const eo::Error& e) {
    const char* kind = e.kind() == eo::ErrorKind::Parse
                           ? "parse"
                           : e.kind() == eo::ErrorKind::Domain ? "domain" : "internal";
    const json err{{"error", e.code()}, {"kind", kind}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return kind_to_exit(e.kind());
  } catch (const std::exception& e) {
    const json err{{"error", "Unexpected"}, {"kind", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 4;
  }
  return 0;
}
