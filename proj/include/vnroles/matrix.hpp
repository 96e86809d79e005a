#pragma once
// Binary class-by-role incidence matrices, plus the verb-level expansion
// where every class row is replicated once per member.

#include "vnroles/error.hpp"
#include "vnroles/lexicon.hpp"
#include "vnroles/reduction.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace vnroles {

enum class Level { Class, Verb };

inline const char* to_string(Level level) noexcept {
  return level == Level::Class ? "class" : "verb";
}

inline std::optional<Level> level_from_string(std::string_view text) {
  if (text == "class") return Level::Class;
  if (text == "verb") return Level::Verb;
  return std::nullopt;
}

struct MatrixRow {
  std::string class_id;          // originating class
  std::size_t member_count = 0;  // 1 per row at verb level

  bool operator==(const MatrixRow&) const = default;
};

struct RoleIncidenceMatrix {
  Level level = Level::Class;
  std::vector<MatrixRow> rows;
  std::vector<RoleName> columns;
  std::vector<std::uint8_t> cells;  // row-major, values 0/1

  bool operator==(const RoleIncidenceMatrix&) const = default;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }

  std::uint8_t cell(std::size_t row, std::size_t col) const {
    return cells[row * columns.size() + col];
  }

  std::optional<std::size_t> column_index(std::string_view role) const {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] == role) return j;
    }
    return std::nullopt;
  }
};

// One role's column as a bit vector.
struct RoleVector {
  RoleName role;
  std::vector<std::uint8_t> bits;
  Level level = Level::Class;

  bool operator==(const RoleVector&) const = default;

  std::size_t popcount() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
  }
};

// Class-level matrix: cell(i,j) = 1 iff inventory[j] is in classes[i].frame.
inline RoleIncidenceMatrix class_matrix(std::span<const EffectiveClass> classes,
                                        std::span<const RoleName> inventory) {
  RoleIncidenceMatrix m;
  m.level = Level::Class;
  m.columns.assign(inventory.begin(), inventory.end());
  m.rows.reserve(classes.size());
  m.cells.assign(classes.size() * inventory.size(), 0);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const EffectiveClass& c = classes[i];
    m.rows.push_back(MatrixRow{c.class_id, c.member_count});
    for (const RoleName& role : c.frame) {
      auto j = m.column_index(role);
      if (!j) {
        raise(ErrorKind::UnknownRole,
              "role '" + role + "' of class '" + c.class_id + "' not in inventory");
      }
      m.cells[i * inventory.size() + *j] = 1;
    }
  }
  return m;
}

// Replicates each class row member_count times; zero-member rows vanish.
inline RoleIncidenceMatrix verb_expand(const RoleIncidenceMatrix& matrix) {
  if (matrix.level == Level::Verb) {
    raise(ErrorKind::AlreadyVerbLevel, "matrix is already verb-level");
  }
  RoleIncidenceMatrix m;
  m.level = Level::Verb;
  m.columns = matrix.columns;

  const std::size_t width = matrix.column_count();
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    for (std::size_t k = 0; k < matrix.rows[i].member_count; ++k) {
      m.rows.push_back(MatrixRow{matrix.rows[i].class_id, 1});
      m.cells.insert(m.cells.end(), matrix.cells.begin() + static_cast<std::ptrdiff_t>(i * width),
                     matrix.cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
    }
  }
  return m;
}

inline RoleVector role_vector(const RoleIncidenceMatrix& matrix, const RoleName& role) {
  auto j = matrix.column_index(role);
  if (!j) raise(ErrorKind::UnknownRole, "role '" + role + "' not in matrix columns");
  RoleVector v;
  v.role = role;
  v.level = matrix.level;
  v.bits.reserve(matrix.row_count());
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    v.bits.push_back(matrix.cell(i, *j));
  }
  return v;
}

// Header row of role names, then one 0/1 row per matrix row.
inline std::string matrix_csv(const RoleIncidenceMatrix& matrix) {
  std::ostringstream out;
  for (std::size_t j = 0; j < matrix.column_count(); ++j) {
    if (j > 0) out << ',';
    out << matrix.columns[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    for (std::size_t j = 0; j < matrix.column_count(); ++j) {
      if (j > 0) out << ',';
      out << static_cast<int>(matrix.cell(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vnroles
