#pragma once
// Shared helpers for the test suites: fixture locations, scratch directories,
// random fixture generators and an independent brute-force oracle for the
// dependency classification.

#include <vnroles/dependency.hpp>
#include <vnroles/lexicon.hpp>
#include <vnroles/matrix.hpp>
#include <vnroles/reduction.hpp>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

namespace testutil {

inline std::filesystem::path fixture_dir() {
  return std::filesystem::path(VNROLES_FIXTURE_DIR);
}

inline std::filesystem::path mini_vn() { return fixture_dir() / "mini_vn"; }

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("vnroles_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    std::filesystem::path file = path_ / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file;
  }

 private:
  std::filesystem::path path_;
};

// Returns the error kind thrown by fn, or nullopt if it did not throw.
template <typename Fn>
std::optional<vnroles::ErrorKind> error_kind_of(Fn&& fn) {
  try {
    fn();
    return std::nullopt;
  } catch (const vnroles::Error& e) {
    return e.kind();
  }
}

// Minimal class XML around an id, lemma list and role list.
inline std::string class_xml(const std::string& id, const std::vector<std::string>& members,
                             const std::vector<std::string>& roles,
                             const std::string& subclasses_xml = "") {
  std::string xml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<VNCLASS ID=\"" + id + "\">\n";
  xml += "  <MEMBERS>\n";
  for (const auto& m : members) xml += "    <MEMBER name=\"" + m + "\" wn=\"\"/>\n";
  xml += "  </MEMBERS>\n  <THEMROLES>\n";
  for (const auto& r : roles) xml += "    <THEMROLE type=\"" + r + "\"><SELRESTRS/></THEMROLE>\n";
  xml += "  </THEMROLES>\n  <FRAMES/>\n  <SUBCLASSES>" + subclasses_xml + "</SUBCLASSES>\n";
  xml += "</VNCLASS>\n";
  return xml;
}

inline std::string subclass_xml(const std::string& id, const std::vector<std::string>& members,
                                const std::vector<std::string>& roles,
                                const std::string& subclasses_xml = "") {
  std::string xml = "\n    <VNSUBCLASS ID=\"" + id + "\">\n      <MEMBERS>\n";
  for (const auto& m : members) xml += "        <MEMBER name=\"" + m + "\" wn=\"\"/>\n";
  xml += "      </MEMBERS>\n      <THEMROLES>\n";
  for (const auto& r : roles) {
    xml += "        <THEMROLE type=\"" + r + "\"><SELRESTRS/></THEMROLE>\n";
  }
  xml += "      </THEMROLES>\n      <FRAMES/>\n      <SUBCLASSES>" + subclasses_xml +
         "</SUBCLASSES>\n    </VNSUBCLASS>\n";
  return xml;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: materializes verb rows explicitly and recomputes the
// pairwise classification from scratch. Kept independent of the library's
// matrix/bit plumbing; rounding goes through floating point instead of the
// library's integer route.
// ---------------------------------------------------------------------------

namespace oracle {

struct MiniClass {
  std::set<std::string> frame;
  std::size_t members = 0;
};

struct Pair {
  std::string a, b;
  double p_ab = 0.0, p_ba = 0.0;
  std::string kind;
};

inline double round_tenth(std::size_t common, std::size_t sum) {
  if (sum == 0) return 0.0;
  return std::floor(1000.0 * static_cast<double>(common) / static_cast<double>(sum) + 0.5) / 10.0;
}

inline std::vector<Pair> classify(const std::vector<MiniClass>& classes,
                                  const std::vector<std::string>& inventory, double threshold) {
  std::vector<std::set<std::string>> rows;
  for (const MiniClass& c : classes) {
    for (std::size_t i = 0; i < c.members; ++i) rows.push_back(c.frame);
  }
  std::vector<Pair> out;
  for (std::size_t i = 0; i < inventory.size(); ++i) {
    for (std::size_t j = i + 1; j < inventory.size(); ++j) {
      const std::string& a = inventory[i];
      const std::string& b = inventory[j];
      std::size_t sum_a = 0, sum_b = 0, common = 0;
      for (const auto& row : rows) {
        const bool has_a = row.contains(a);
        const bool has_b = row.contains(b);
        sum_a += has_a;
        sum_b += has_b;
        common += has_a && has_b;
      }
      Pair p;
      p.a = a;
      p.b = b;
      p.p_ab = round_tenth(common, sum_a);
      p.p_ba = round_tenth(common, sum_b);
      const bool ab = p.p_ab >= threshold;
      const bool ba = p.p_ba >= threshold;
      p.kind = ab && ba ? "mutual"
               : ab    ? "one_way_a_to_b"
               : ba    ? "one_way_b_to_a"
                       : "independent";
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace oracle

// Converts oracle classes into the library's analysis-unit shape.
inline std::vector<vnroles::EffectiveClass> to_effective(
    const std::vector<oracle::MiniClass>& classes) {
  std::vector<vnroles::EffectiveClass> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    vnroles::EffectiveClass ec;
    ec.class_id = "c" + std::to_string(i);
    ec.member_count = classes[i].members;
    ec.frame = vnroles::RoleFrame(classes[i].frame.begin(), classes[i].frame.end());
    out.push_back(ec);
  }
  return out;
}

// Random mini-lexicon: up to max_classes classes over the first n_roles names
// of a fixed pool, member counts up to max_members.
inline std::pair<std::vector<oracle::MiniClass>, std::vector<std::string>> random_mini_classes(
    std::mt19937& rng, std::size_t max_classes = 8, std::size_t max_roles = 5,
    std::size_t max_members = 4) {
  static const std::vector<std::string> pool = {"A", "B", "C", "D", "E"};
  std::uniform_int_distribution<std::size_t> n_roles_dist(2, max_roles);
  const std::size_t n_roles = n_roles_dist(rng);
  std::vector<std::string> inventory(pool.begin(),
                                     pool.begin() + static_cast<std::ptrdiff_t>(n_roles));

  std::uniform_int_distribution<std::size_t> n_classes_dist(1, max_classes);
  std::uniform_int_distribution<std::size_t> members_dist(0, max_members);
  std::uniform_int_distribution<int> coin(0, 1);

  std::vector<oracle::MiniClass> classes(n_classes_dist(rng));
  for (auto& c : classes) {
    while (c.frame.empty()) {
      for (const auto& role : inventory) {
        if (coin(rng)) c.frame.insert(role);
      }
    }
    c.members = members_dist(rng);
  }
  return {classes, inventory};
}

// Random class forest for reduction properties: small trees with possibly
// empty role sets and zero-member classes.
inline vnroles::Lexicon random_lexicon(std::mt19937& rng) {
  static const std::vector<std::string> pool = {"A", "B", "C", "D", "E"};
  std::uniform_int_distribution<std::size_t> n_roots(1, 3);
  std::uniform_int_distribution<std::size_t> n_members(0, 4);
  std::uniform_int_distribution<std::size_t> n_children(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  int next_id = 0;

  auto make_node = [&](auto&& self, int depth) -> vnroles::VerbClass {
    vnroles::VerbClass node;
    node.class_id = "c" + std::to_string(next_id++);
    const std::size_t members = n_members(rng);
    for (std::size_t i = 0; i < members; ++i) {
      node.members.push_back("v" + std::to_string(next_id) + "_" + std::to_string(i));
    }
    for (const auto& role : pool) {
      if (coin(rng) && coin(rng)) node.own_roles.insert(role);  // sparse
    }
    if (depth < 3) {
      const std::size_t children = n_children(rng);
      for (std::size_t i = 0; i < children; ++i) node.subclasses.push_back(self(self, depth + 1));
    }
    return node;
  };

  vnroles::Lexicon lexicon;
  const std::size_t roots = n_roots(rng);
  for (std::size_t i = 0; i < roots; ++i) {
    lexicon.roots.push_back(make_node(make_node, 0));
  }
  lexicon.role_inventory = vnroles::role_inventory(lexicon);
  return lexicon;
}

}  // namespace testutil
