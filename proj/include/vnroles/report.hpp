#pragma once
// Serialization of analysis reports and event templates: JSON, CSV and DOT.
// All emitters are deterministic; repeated runs on the same input produce
// byte-identical output.

#include "vnroles/dependency.hpp"
#include "vnroles/event.hpp"

#include <json.hpp>

#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

namespace vnroles {

// Formats a percentage already rounded to one decimal, e.g. "55.8", "100.0".
inline std::string format_pct(double rounded) {
  const auto tenths = static_cast<long long>(std::llround(rounded * 10.0));
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

inline nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["threshold"] = report.threshold;
  j["level"] = to_string(report.level);
  j["roles"] = report.roles;
  j["edges"] = nlohmann::ordered_json::array();
  for (const DependencyEdge& e : report.edges) {
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"pct", e.percentage},
                          {"common", e.val_common},
                          {"sum", e.sum_from}});
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairClassification& p : report.pairs) {
    j["pairs"].push_back({{"a", p.role_a},
                          {"b", p.role_b},
                          {"p_ab", p.p_ab},
                          {"p_ba", p.p_ba},
                          {"kind", to_string(p.kind)}});
  }
  return j;
}

inline std::string report_json(const AnalysisReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

inline AnalysisReport report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  AnalysisReport report;
  report.threshold = j.at("threshold").get<double>();
  auto level = level_from_string(j.at("level").get<std::string>());
  if (!level) throw Error(ErrorKind::LevelMismatch, "unknown level in report");
  report.level = *level;
  report.roles = j.at("roles").get<std::vector<RoleName>>();
  for (const auto& e : j.at("edges")) {
    report.edges.push_back(DependencyEdge{e.at("from").get<std::string>(),
                                          e.at("to").get<std::string>(),
                                          e.at("pct").get<double>(),
                                          e.at("common").get<std::size_t>(),
                                          e.at("sum").get<std::size_t>()});
  }
  for (const auto& p : j.at("pairs")) {
    auto kind = pair_kind_from_string(p.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorKind::LevelMismatch, "unknown pair kind in report");
    report.pairs.push_back(PairClassification{p.at("a").get<std::string>(),
                                              p.at("b").get<std::string>(),
                                              p.at("p_ab").get<double>(),
                                              p.at("p_ba").get<double>(), *kind});
  }
  report.one_way_roles = derive_one_way_roles(report.roles, report.pairs);
  return report;
}

// Square matrix of conditional percentages: row = conditioning role (from),
// column = conditioned role (to), diagonal left empty.
inline std::string dependency_csv(const AnalysisReport& report) {
  const std::size_t n = report.roles.size();
  if (report.edges.size() != n * (n > 0 ? n - 1 : 0)) {
    raise(ErrorKind::LengthMismatch, "report edge list does not cover all ordered pairs");
  }
  std::ostringstream out;
  for (const RoleName& role : report.roles) {
    out << ',' << role;
  }
  out << '\n';
  auto edge = report.edges.begin();  // edges are emitted in row-major order
  for (const RoleName& from : report.roles) {
    out << from;
    for (const RoleName& to : report.roles) {
      out << ',';
      if (from == to) continue;
      out << format_pct(edge->percentage);
      ++edge;
    }
    out << '\n';
  }
  return out.str();
}

// Graph with one node per role, an undirected bold edge per mutual pair
// labeled "p_ab/p_ba" and a directed edge per one-way relation labeled with
// its percentage.
inline std::string report_dot(const AnalysisReport& report) {
  std::ostringstream out;
  out << "digraph role_dependency {\n";
  for (const RoleName& role : report.roles) {
    out << "  \"" << role << "\";\n";
  }
  for (const PairClassification& p : report.pairs) {
    if (p.kind != PairKind::Mutual) continue;
    out << "  \"" << p.role_a << "\" -> \"" << p.role_b << "\" [dir=none, style=bold, label=\""
        << format_pct(p.p_ab) << "/" << format_pct(p.p_ba) << "\"];\n";
  }
  for (const PairClassification& p : report.pairs) {
    if (p.kind == PairKind::OneWayAToB) {
      out << "  \"" << p.role_a << "\" -> \"" << p.role_b << "\" [label=\"" << format_pct(p.p_ab)
          << "\"];\n";
    } else if (p.kind == PairKind::OneWayBToA) {
      out << "  \"" << p.role_b << "\" -> \"" << p.role_a << "\" [label=\"" << format_pct(p.p_ba)
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline nlohmann::ordered_json scale_value_to_json(const ScaleValue& value) {
  if (const auto* ordinal = std::get_if<OrdinalValue>(&value)) {
    return {{"label", ordinal->label}};
  }
  const auto& numeric = std::get<NumericValue>(value);
  return {{"value", numeric.value}, {"unit", numeric.unit}};
}

inline nlohmann::ordered_json event_to_json(const EventTemplate& event) {
  nlohmann::ordered_json j;
  j["agent"] = event.agent;
  j["patient"] = event.patient;
  j["side"] = to_string(classify_side(event));
  j["manner"] = event.manner ? nlohmann::ordered_json(*event.manner) : nullptr;
  if (event.result) {
    nlohmann::ordered_json r;
    r["dimension"] = event.result->dimension;
    r["participant"] = event.result->participant;
    r["scale"] = event.result->scale_order;
    r["initial"] = scale_value_to_json(event.result->initial_value);
    r["final"] = scale_value_to_json(event.result->final_value);
    j["result"] = r;
  } else {
    j["result"] = nullptr;
  }
  return j;
}

inline std::string events_json(std::span<const std::pair<std::string, EventTemplate>> events) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [name, event] : events) {
    nlohmann::ordered_json entry;
    entry["name"] = name;
    entry["event"] = event_to_json(event);
    j.push_back(entry);
  }
  return j.dump(2) + "\n";
}

}  // namespace vnroles
