#pragma once
// Lexicon ingestion: parse a directory of verb-class XML files into an
// in-memory class forest.
//
// Format essentials (as in the VerbNet 3.2b DTD): a VNCLASS root per file,
// MEMBERS/MEMBER@name for lemmas, THEMROLES/THEMROLE@type for the roles a
// class declares itself, SUBCLASSES/VNSUBCLASS for children. Roles named
// inside syntactic frames or selectional restrictions are ignored; only
// THEMROLE declarations count. Selectional restrictions are discarded.

#include "vnroles/error.hpp"
#include "vnroles/xml.hpp"

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vnroles {

// Canonical capitalized role name as declared in the lexicon ("Agent",
// "Patient", ...). Trimmed and non-empty; equality is exact string equality.
using RoleName = std::string;

// Alphabetically ordered role set.
using RoleFrame = std::set<RoleName>;

struct VerbClass {
  std::string class_id;               // e.g. "break-45.1", unique in the lexicon
  std::vector<std::string> members;   // one lemma per MEMBER entry, document order
  RoleFrame own_roles;                // roles this class declares itself (not inherited)
  std::vector<VerbClass> subclasses;

  bool operator==(const VerbClass&) const = default;
};

struct Lexicon {
  std::vector<VerbClass> roots;          // one per class file, in file-name order
  std::vector<RoleName> role_inventory;  // alphabetical union of all own_roles

  bool operator==(const Lexicon&) const = default;
};

// Preorder visit of a class and all its subclasses.
template <typename Fn>
void for_each_class(const VerbClass& node, Fn&& fn) {
  fn(node);
  for (const VerbClass& sub : node.subclasses) for_each_class(sub, fn);
}

template <typename Fn>
void for_each_class(const Lexicon& lexicon, Fn&& fn) {
  for (const VerbClass& root : lexicon.roots) for_each_class(root, fn);
}

namespace detail {

inline std::string trim(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

inline VerbClass class_from_element(const xml::Element& element, std::string_view expected_name,
                                    std::unordered_set<std::string>& seen_ids) {
  if (element.name != expected_name) {
    raise(ErrorKind::MalformedXml, "expected <" + std::string(expected_name) + ">, found <" +
                                       element.name + ">");
  }
  VerbClass result;
  const std::string* id = element.attribute("ID");
  if (id == nullptr || trim(*id).empty()) {
    raise(ErrorKind::MalformedXml, "<" + element.name + "> without ID attribute");
  }
  result.class_id = trim(*id);
  if (!seen_ids.insert(result.class_id).second) {
    raise(ErrorKind::DuplicateClassId, "class id '" + result.class_id + "' declared twice");
  }

  if (const xml::Element* members = element.first_child("MEMBERS")) {
    members->for_each_child("MEMBER", [&](const xml::Element& member) {
      const std::string* name = member.attribute("name");
      if (name == nullptr || name->empty()) {
        raise(ErrorKind::MalformedXml, "<MEMBER> without name attribute in " + result.class_id);
      }
      result.members.push_back(*name);
    });
  }

  if (const xml::Element* roles = element.first_child("THEMROLES")) {
    roles->for_each_child("THEMROLE", [&](const xml::Element& role) {
      const std::string* type = role.attribute("type");
      std::string trimmed = type ? trim(*type) : std::string();
      if (trimmed.empty()) {
        raise(ErrorKind::MalformedXml, "<THEMROLE> without type attribute in " + result.class_id);
      }
      result.own_roles.insert(std::move(trimmed));
    });
  }

  if (const xml::Element* subclasses = element.first_child("SUBCLASSES")) {
    subclasses->for_each_child("VNSUBCLASS", [&](const xml::Element& sub) {
      result.subclasses.push_back(class_from_element(sub, "VNSUBCLASS", seen_ids));
    });
  }
  return result;
}

inline std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise(ErrorKind::MalformedXml, "cannot read file");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace detail

// Ordered, deduplicated union of own_roles over the whole forest.
inline std::vector<RoleName> role_inventory(const Lexicon& lexicon) {
  RoleFrame all;
  for_each_class(lexicon, [&](const VerbClass& c) {
    all.insert(c.own_roles.begin(), c.own_roles.end());
  });
  return {all.begin(), all.end()};
}

// Total member entries; a lemma listed in k classes counts k times.
inline std::size_t count_members(const Lexicon& lexicon) {
  std::size_t total = 0;
  for_each_class(lexicon, [&](const VerbClass& c) { total += c.members.size(); });
  return total;
}

inline std::size_t count_classes(const Lexicon& lexicon) {
  std::size_t total = 0;
  for_each_class(lexicon, [&](const VerbClass&) { ++total; });
  return total;
}

// Parses every *.xml file found directly in `dir` (no recursion) as one root
// class. Files are processed in file-name order so the result is identical
// across runs.
inline Lexicon parse_lexicon(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    raise(ErrorKind::MissingPath, "no such directory: " + dir.string());
  }

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Lexicon lexicon;
  std::unordered_set<std::string> seen_ids;
  for (const auto& file : files) {
    try {
      xml::Element root = xml::parse_document(detail::read_file(file));
      lexicon.roots.push_back(detail::class_from_element(root, "VNCLASS", seen_ids));
    } catch (const Error& e) {
      throw Error(e.kind(), file.filename().string() + ": " + e.detail());
    }
  }
  lexicon.role_inventory = role_inventory(lexicon);
  return lexicon;
}

}  // namespace vnroles
