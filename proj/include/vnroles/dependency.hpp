#pragma once
// Pairwise conditional dependency between roles.
//
// For roles A and B with incidence vectors a and b:
//   val_common = |positions set in both a and b|
//   P(B|A) = 100 * val_common / popcount(a)
//   P(A|B) = 100 * val_common / popcount(b)
// A pair is mutually dependent when both percentages, rounded half-up to one
// decimal, reach the threshold; one-way dependent when exactly one does.
// A role with an all-zero vector yields percentage 0, not an error.

#include "vnroles/error.hpp"
#include "vnroles/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vnroles {

// Percentage 100*common/sum rounded half-up to one decimal, computed in
// integer arithmetic so ties round exactly. Zero sum yields 0.
inline double rounded_percentage(std::size_t common, std::size_t sum) {
  if (sum == 0) return 0.0;
  const auto c = static_cast<unsigned long long>(common);
  const auto s = static_cast<unsigned long long>(sum);
  const unsigned long long tenths = (2000ULL * c + s) / (2ULL * s);  // floor(1000c/s + 1/2)
  return static_cast<double>(tenths) / 10.0;
}

struct PairDependency {
  double p_b_given_a = 0.0;  // unrounded
  double p_a_given_b = 0.0;  // unrounded
  std::size_t val_common = 0;
};

inline PairDependency pair_dependency(const RoleVector& a, const RoleVector& b) {
  if (a.bits.size() != b.bits.size()) {
    raise(ErrorKind::LengthMismatch, "vectors have lengths " + std::to_string(a.bits.size()) +
                                         " and " + std::to_string(b.bits.size()));
  }
  if (a.level != b.level) {
    raise(ErrorKind::LevelMismatch, "vectors are at different levels");
  }
  std::size_t common = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    common += static_cast<std::size_t>(a.bits[i] & b.bits[i]);
  }
  const std::size_t sum_a = a.popcount();
  const std::size_t sum_b = b.popcount();
  PairDependency d;
  d.val_common = common;
  d.p_b_given_a = sum_a ? 100.0 * static_cast<double>(common) / static_cast<double>(sum_a) : 0.0;
  d.p_a_given_b = sum_b ? 100.0 * static_cast<double>(common) / static_cast<double>(sum_b) : 0.0;
  return d;
}

// One ordered edge: how strongly `from` implies `to`.
struct DependencyEdge {
  RoleName from;
  RoleName to;
  double percentage = 0.0;      // P(to|from), rounded half-up to one decimal
  std::size_t val_common = 0;
  std::size_t sum_from = 0;

  bool operator==(const DependencyEdge&) const = default;
};

enum class PairKind { Mutual, OneWayAToB, OneWayBToA, Independent };

inline const char* to_string(PairKind kind) noexcept {
  switch (kind) {
    case PairKind::Mutual: return "mutual";
    case PairKind::OneWayAToB: return "one_way_a_to_b";
    case PairKind::OneWayBToA: return "one_way_b_to_a";
    case PairKind::Independent: return "independent";
  }
  return "unknown";
}

inline std::optional<PairKind> pair_kind_from_string(std::string_view text) {
  if (text == "mutual") return PairKind::Mutual;
  if (text == "one_way_a_to_b") return PairKind::OneWayAToB;
  if (text == "one_way_b_to_a") return PairKind::OneWayBToA;
  if (text == "independent") return PairKind::Independent;
  return std::nullopt;
}

// Unordered pair, role_a < role_b alphabetically.
struct PairClassification {
  RoleName role_a;
  RoleName role_b;
  double p_ab = 0.0;  // P(role_b|role_a), rounded
  double p_ba = 0.0;  // P(role_a|role_b), rounded
  PairKind kind = PairKind::Independent;

  bool operator==(const PairClassification&) const = default;
};

struct AnalysisReport {
  double threshold = 55.0;
  Level level = Level::Verb;
  std::vector<RoleName> roles;                // alphabetical
  std::vector<DependencyEdge> edges;          // all ordered pairs, (from, to) order
  std::vector<PairClassification> pairs;      // all unordered pairs, (a, b) order
  std::vector<RoleName> one_way_roles;        // in no mutual pair, in >=1 one-way pair

  bool operator==(const AnalysisReport&) const = default;
};

// Roles that take part in at least one one-way relation but in no mutual
// pair. Recomputable from `pairs` alone.
inline std::vector<RoleName> derive_one_way_roles(const std::vector<RoleName>& roles,
                                                  const std::vector<PairClassification>& pairs) {
  RoleFrame mutual;
  RoleFrame one_way;
  for (const PairClassification& p : pairs) {
    switch (p.kind) {
      case PairKind::Mutual:
        mutual.insert(p.role_a);
        mutual.insert(p.role_b);
        break;
      case PairKind::OneWayAToB:
      case PairKind::OneWayBToA:
        one_way.insert(p.role_a);
        one_way.insert(p.role_b);
        break;
      case PairKind::Independent:
        break;
    }
  }
  std::vector<RoleName> result;
  for (const RoleName& role : roles) {
    if (!mutual.contains(role) && one_way.contains(role)) result.push_back(role);
  }
  return result;
}

// Classifies every unordered role pair of the matrix at the given threshold.
// Percentages are rounded half-up to one decimal first; the comparison
// against the threshold is inclusive (>=) on the rounded values.
inline AnalysisReport classify_pairs(const RoleIncidenceMatrix& matrix, double threshold) {
  if (!(threshold > 0.0) || threshold > 100.0) {
    raise(ErrorKind::BadThreshold, "threshold must be in (0,100], got " + std::to_string(threshold));
  }

  const std::size_t n = matrix.column_count();

  // iterate columns in alphabetical order regardless of matrix layout
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return matrix.columns[lhs] < matrix.columns[rhs];
  });

  std::vector<std::size_t> popcounts(n, 0);
  for (std::size_t i = 0; i < matrix.row_count(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      popcounts[j] += matrix.cell(i, j);
    }
  }
  auto common_of = [&](std::size_t a, std::size_t b) {
    std::size_t common = 0;
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
      common += static_cast<std::size_t>(matrix.cell(i, a) & matrix.cell(i, b));
    }
    return common;
  };

  AnalysisReport report;
  report.threshold = threshold;
  report.level = matrix.level;
  report.roles.reserve(n);
  for (std::size_t j : order) report.roles.push_back(matrix.columns[j]);

  for (std::size_t ai = 0; ai < n; ++ai) {
    for (std::size_t bi = 0; bi < n; ++bi) {
      if (ai == bi) continue;
      const std::size_t a = order[ai];
      const std::size_t b = order[bi];
      const std::size_t common = common_of(a, b);
      report.edges.push_back(DependencyEdge{matrix.columns[a], matrix.columns[b],
                                            rounded_percentage(common, popcounts[a]), common,
                                            popcounts[a]});
    }
  }

  for (std::size_t ai = 0; ai < n; ++ai) {
    for (std::size_t bi = ai + 1; bi < n; ++bi) {
      const std::size_t a = order[ai];
      const std::size_t b = order[bi];
      const std::size_t common = common_of(a, b);
      PairClassification pc;
      pc.role_a = matrix.columns[a];
      pc.role_b = matrix.columns[b];
      pc.p_ab = rounded_percentage(common, popcounts[a]);
      pc.p_ba = rounded_percentage(common, popcounts[b]);
      const bool ab = pc.p_ab >= threshold;
      const bool ba = pc.p_ba >= threshold;
      pc.kind = ab && ba   ? PairKind::Mutual
                : ab       ? PairKind::OneWayAToB
                : ba       ? PairKind::OneWayBToA
                           : PairKind::Independent;
      report.pairs.push_back(pc);
    }
  }

  report.one_way_roles = derive_one_way_roles(report.roles, report.pairs);
  return report;
}

// Mutual pairs only, sorted alphabetically by first role.
inline std::vector<PairClassification> mutual_pairs(const AnalysisReport& report) {
  std::vector<PairClassification> result;
  for (const PairClassification& p : report.pairs) {
    if (p.kind == PairKind::Mutual) result.push_back(p);
  }
  return result;
}

}  // namespace vnroles
