#pragma once
// Hybrid role-scalar event templates: an agent acting on a patient, with a
// manner slot for the action and a result slot for the patient's change of
// state, modeled as movement between two values on a one-dimensional scale.

#include "vnroles/error.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vnroles {

struct OrdinalValue {
  std::string label;  // must belong to the scale's declared label order
  bool operator==(const OrdinalValue&) const = default;
};

struct NumericValue {
  double value = 0.0;
  std::string unit;
  bool operator==(const NumericValue&) const = default;
};

using ScaleValue = std::variant<OrdinalValue, NumericValue>;

// A change of one participant's state: from initial_value to final_value on
// the named dimension. Ordinal scales declare their label order ad hoc.
struct ScalarChange {
  std::string dimension;                 // e.g. "temperature", "alive-dead"
  std::string participant;               // the affected entity
  std::vector<std::string> scale_order;  // ordinal label order; empty for numeric scales
  ScaleValue initial_value;
  ScaleValue final_value;

  bool operator==(const ScalarChange&) const = default;
};

namespace detail {

inline void validate_value(const ScalarChange& change, const ScaleValue& value) {
  if (const auto* ordinal = std::get_if<OrdinalValue>(&value)) {
    bool known = false;
    for (const std::string& label : change.scale_order) {
      if (label == ordinal->label) known = true;
    }
    if (!known) {
      raise(ErrorKind::InvalidScale, "label '" + ordinal->label + "' is not on the '" +
                                         change.dimension + "' scale");
    }
  } else {
    const auto& numeric = std::get<NumericValue>(value);
    if (numeric.unit.empty()) {
      raise(ErrorKind::InvalidScale, "numeric value on '" + change.dimension + "' has no unit");
    }
  }
}

}  // namespace detail

inline void validate(const ScalarChange& change) {
  if (change.dimension.empty()) raise(ErrorKind::InvalidScale, "scale dimension is empty");
  if (change.initial_value.index() != change.final_value.index()) {
    raise(ErrorKind::InvalidScale,
          "initial and final values of '" + change.dimension + "' are of different kinds");
  }
  detail::validate_value(change, change.initial_value);
  detail::validate_value(change, change.final_value);
  if (change.initial_value == change.final_value) {
    raise(ErrorKind::NoChange, "initial and final values on '" + change.dimension + "' are equal");
  }
}

inline ScalarChange ordinal_change(std::string dimension, std::string participant,
                                   std::vector<std::string> scale_order, std::string from_label,
                                   std::string to_label) {
  ScalarChange change{std::move(dimension), std::move(participant), std::move(scale_order),
                      OrdinalValue{std::move(from_label)}, OrdinalValue{std::move(to_label)}};
  validate(change);
  return change;
}

inline ScalarChange numeric_change(std::string dimension, std::string participant,
                                   double from_value, double to_value, std::string unit) {
  ScalarChange change{std::move(dimension), std::move(participant), {},
                      NumericValue{from_value, unit}, NumericValue{to_value, std::move(unit)}};
  validate(change);
  return change;
}

// (x ACT[Manner] y) CAUSE ([State1]y -> [State2]y): the manner slot carries
// the action specification, the result slot the patient's scalar change. At
// least one slot is present; both at once is allowed.
struct EventTemplate {
  std::string agent;    // x; unconstrained, may be a placeholder
  std::string patient;  // y
  std::optional<std::string> manner;
  std::optional<ScalarChange> result;

  bool operator==(const EventTemplate&) const = default;
};

enum class EventSide { Manner, Result, Both };

inline const char* to_string(EventSide side) noexcept {
  switch (side) {
    case EventSide::Manner: return "manner";
    case EventSide::Result: return "result";
    case EventSide::Both: return "both";
  }
  return "unknown";
}

inline EventTemplate make_event(std::string agent, std::string patient,
                                std::optional<std::string> manner,
                                std::optional<ScalarChange> result) {
  if (!manner && !result) {
    raise(ErrorKind::EmptyTemplate, "event template needs a manner or a result");
  }
  if (manner && manner->empty()) raise(ErrorKind::EmptyManner, "manner is empty");
  if (result) {
    validate(*result);
    if (result->participant != patient) {
      raise(ErrorKind::ParticipantMismatch, "result describes '" + result->participant +
                                                "' but the patient is '" + patient + "'");
    }
  }
  return EventTemplate{std::move(agent), std::move(patient), std::move(manner),
                       std::move(result)};
}

inline EventTemplate make_manner_event(std::string agent, std::string patient,
                                       std::string manner) {
  return make_event(std::move(agent), std::move(patient), std::move(manner), std::nullopt);
}

inline EventTemplate make_result_event(std::string agent, std::string patient,
                                       ScalarChange change) {
  return make_event(std::move(agent), std::move(patient), std::nullopt, std::move(change));
}

inline EventSide classify_side(const EventTemplate& event) {
  if (event.manner && event.result) return EventSide::Both;
  return event.manner ? EventSide::Manner : EventSide::Result;
}

}  // namespace vnroles
