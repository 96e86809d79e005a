#pragma once
// Command-line front end: lexicon ingestion -> reduction -> matrices ->
// dependency analysis, with serialized outputs.
//
// Exit codes: 0 success, 1 parse/IO errors while running, 2 invalid flags.

#include "vnroles/dependency.hpp"
#include "vnroles/event.hpp"
#include "vnroles/lexicon.hpp"
#include "vnroles/matrix.hpp"
#include "vnroles/reduction.hpp"
#include "vnroles/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace vnroles::cli {

struct CliConfig {
  std::string vn_path;
  double threshold = 55.0;
  Level level = Level::Verb;
  std::string format = "json";
  std::string output;  // empty = stdout
};

namespace detail {

inline std::string check_threshold(const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') return "threshold is not a number: " + text;
  if (!(value > 0.0) || value > 100.0) return "threshold must be in (0,100], got " + text;
  return {};
}

inline RoleIncidenceMatrix build_matrix(const Lexicon& lexicon, Level level) {
  const auto effective = effective_classes(lexicon);
  RoleIncidenceMatrix matrix = class_matrix(effective, lexicon.role_inventory);
  return level == Level::Verb ? verb_expand(matrix) : matrix;
}

inline std::string stats_text(const Lexicon& lexicon, const std::string& format) {
  const auto effective = effective_classes(lexicon);
  const std::size_t classes = count_classes(lexicon);
  const std::size_t roots = lexicon.roots.size();
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"classes", classes},
      {"roots", roots},
      {"subclasses", classes - roots},
      {"effective_classes", effective.size()},
      {"retained_subclasses", retained_subclass_count(effective)},
      {"roles", lexicon.role_inventory.size()},
      {"members", count_members(lexicon)},
  };
  if (format == "csv") {
    std::string out;
    for (const auto& [key, value] : counts) {
      out += key + "," + std::to_string(value) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  for (const auto& [key, value] : counts) j[key] = value;
  return j.dump(2) + "\n";
}

inline std::string mutual_text(const AnalysisReport& report, const std::string& format) {
  const auto pairs = mutual_pairs(report);
  if (format == "csv") {
    std::string out = "a,b,p_ab,p_ba\n";
    for (const PairClassification& p : pairs) {
      out += p.role_a + "," + p.role_b + "," + format_pct(p.p_ab) + "," + format_pct(p.p_ba) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const PairClassification& p : pairs) {
    j.push_back({{"a", p.role_a}, {"b", p.role_b}, {"p_ab", p.p_ab}, {"p_ba", p.p_ba}});
  }
  return j.dump(2) + "\n";
}

inline std::vector<std::pair<std::string, EventTemplate>> demo_events() {
  std::vector<std::pair<std::string, EventTemplate>> events;
  events.emplace_back("kill", make_result_event("x", "y",
                                                ordinal_change("alive-dead", "y",
                                                               {"alive", "dead"}, "alive",
                                                               "dead")));
  events.emplace_back("heat-water",
                      make_result_event("x", "water",
                                        numeric_change("temperature", "water", 20.0, 80.0, "C")));
  events.emplace_back("oil-price",
                      make_result_event("-", "oil",
                                        numeric_change("price", "oil", 100.0, 110.0, "USD")));
  events.emplace_back("hit", make_manner_event("John", "fence", "hit"));
  return events;
}

inline int write_output(const std::string& text, const std::string& output, std::ostream& out,
                        std::ostream& err) {
  if (output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << output << "\n";
    return 1;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "cannot write output file: " << output << "\n";
    return 1;
  }
  return 0;
}

}  // namespace detail

// Runs the CLI on `args` (program name excluded), writing results to `out`
// and diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verb-class role co-occurrence analysis over a VerbNet-format lexicon", "vnroles"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::map<std::string, Level> level_names{{"class", Level::Class}, {"verb", Level::Verb}};

  auto add_vn_path = [&cfg](CLI::App* cmd) {
    cmd->add_option("--vn-path", cfg.vn_path, "Directory of VerbNet class XML files")
        ->envname("VN_PATH")
        ->required();
  };
  auto add_output = [&cfg](CLI::App* cmd) {
    cmd->add_option("--output", cfg.output, "Write to this file instead of standard output");
  };
  auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("--level", cfg.level, "Analysis level: class or verb")
        ->transform(CLI::CheckedTransformer(level_names, CLI::ignore_case))
        ->default_str("verb");
  };
  auto add_threshold = [&cfg](CLI::App* cmd) {
    cmd->add_option("--threshold", cfg.threshold, "Dependency threshold percent, in (0,100]")
        ->check(detail::check_threshold)
        ->default_val(55.0);
  };
  auto add_format = [&cfg](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(std::move(choices)))
        ->default_str("json");
  };

  CLI::App* stats = app.add_subcommand("stats", "Lexicon and reduction summary counts");
  add_vn_path(stats);
  add_output(stats);
  add_format(stats, {"json", "csv"});

  CLI::App* classes = app.add_subcommand("classes", "Effective classes as TSV");
  add_vn_path(classes);
  add_output(classes);

  CLI::App* matrix = app.add_subcommand("matrix", "Role incidence matrix as CSV");
  add_vn_path(matrix);
  add_output(matrix);
  add_level(matrix);

  CLI::App* deps = app.add_subcommand("deps", "Full pairwise dependency report");
  add_vn_path(deps);
  add_output(deps);
  add_level(deps);
  add_threshold(deps);
  add_format(deps, {"json", "csv", "dot"});

  CLI::App* mutual = app.add_subcommand("mutual", "Mutually dependent role pairs");
  add_vn_path(mutual);
  add_output(mutual);
  add_level(mutual);
  add_threshold(mutual);
  add_format(mutual, {"json", "csv"});

  CLI::App* demo = app.add_subcommand("demo-events", "Sample role-scalar event templates");
  add_output(demo);

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (stats->parsed()) {
      text = detail::stats_text(parse_lexicon(cfg.vn_path), cfg.format);
    } else if (classes->parsed()) {
      text = classes_tsv(effective_classes(parse_lexicon(cfg.vn_path)));
    } else if (matrix->parsed()) {
      text = matrix_csv(detail::build_matrix(parse_lexicon(cfg.vn_path), cfg.level));
    } else if (deps->parsed()) {
      const AnalysisReport report =
          classify_pairs(detail::build_matrix(parse_lexicon(cfg.vn_path), cfg.level),
                         cfg.threshold);
      text = cfg.format == "csv"   ? dependency_csv(report)
             : cfg.format == "dot" ? report_dot(report)
                                   : report_json(report);
    } else if (mutual->parsed()) {
      const AnalysisReport report =
          classify_pairs(detail::build_matrix(parse_lexicon(cfg.vn_path), cfg.level),
                         cfg.threshold);
      text = detail::mutual_text(report, cfg.format);
    } else if (demo->parsed()) {
      const auto events = detail::demo_events();
      text = events_json(events);
    }
    return detail::write_output(text, cfg.output, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace vnroles::cli
