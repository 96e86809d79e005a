#pragma once
// Typed error conditions shared by all vnroles modules.

#include <stdexcept>
#include <string>
#include <utility>

namespace vnroles {

enum class ErrorKind {
  // lexicon ingestion
  MissingPath,
  MalformedXml,
  DuplicateClassId,
  // class reduction
  EmptyPath,
  // incidence matrices
  UnknownRole,
  AlreadyVerbLevel,
  // dependency analysis
  LengthMismatch,
  LevelMismatch,
  BadThreshold,
  // event templates
  EmptyManner,
  ParticipantMismatch,
  NoChange,
  InvalidScale,
  EmptyTemplate,
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingPath: return "missing_path";
    case ErrorKind::MalformedXml: return "malformed_xml";
    case ErrorKind::DuplicateClassId: return "duplicate_class_id";
    case ErrorKind::EmptyPath: return "empty_path";
    case ErrorKind::UnknownRole: return "unknown_role";
    case ErrorKind::AlreadyVerbLevel: return "already_verb_level";
    case ErrorKind::LengthMismatch: return "length_mismatch";
    case ErrorKind::LevelMismatch: return "level_mismatch";
    case ErrorKind::BadThreshold: return "bad_threshold";
    case ErrorKind::EmptyManner: return "empty_manner";
    case ErrorKind::ParticipantMismatch: return "participant_mismatch";
    case ErrorKind::NoChange: return "no_change";
    case ErrorKind::InvalidScale: return "invalid_scale";
    case ErrorKind::EmptyTemplate: return "empty_template";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void raise(ErrorKind kind, std::string detail) {
  throw Error(kind, std::move(detail));
}

}  // namespace vnroles
