#pragma once
// Class reduction: collapse the parsed class forest into effective analysis
// classes. A subclass whose full role frame adds nothing over its nearest
// retained ancestor is merged into that ancestor; a subclass that declares at
// least one new role name is kept as its own unit.

#include "vnroles/error.hpp"
#include "vnroles/lexicon.hpp"

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace vnroles {

struct EffectiveClass {
  std::string class_id;          // id of the retained class
  std::size_t member_count = 0;  // own members plus all merged descendants'
  RoleFrame frame;               // own roles plus everything inherited
  bool is_subclass = false;      // retained node was below a root

  bool operator==(const EffectiveClass&) const = default;
};

// Union of own_roles along a root-to-node path.
inline RoleFrame inherited_frame(std::span<const VerbClass* const> class_path) {
  if (class_path.empty()) raise(ErrorKind::EmptyPath, "class path is empty");
  RoleFrame frame;
  for (const VerbClass* node : class_path) {
    frame.insert(node->own_roles.begin(), node->own_roles.end());
  }
  return frame;
}

// Depth-first reduction of the whole forest, output in document order.
// Roots are always retained. Frames only grow along a path, so the strict
// superset test against the retained ancestor reduces to a size comparison.
inline std::vector<EffectiveClass> effective_classes(const Lexicon& lexicon) {
  std::vector<EffectiveClass> out;

  auto walk = [&out](auto&& self, const VerbClass& node, const RoleFrame& path_frame,
                     std::size_t anchor, bool is_root) -> void {
    RoleFrame frame = path_frame;
    frame.insert(node.own_roles.begin(), node.own_roles.end());

    std::size_t here;
    if (is_root || frame.size() > out[anchor].frame.size()) {
      here = out.size();
      out.push_back(EffectiveClass{node.class_id, node.members.size(), frame, !is_root});
    } else {
      out[anchor].member_count += node.members.size();
      here = anchor;
    }
    for (const VerbClass& sub : node.subclasses) {
      self(self, sub, frame, here, false);
    }
  };

  for (const VerbClass& root : lexicon.roots) {
    walk(walk, root, RoleFrame{}, 0, true);
  }
  return out;
}

inline std::size_t retained_subclass_count(std::span<const EffectiveClass> classes) {
  std::size_t n = 0;
  for (const EffectiveClass& c : classes) {
    if (c.is_subclass) ++n;
  }
  return n;
}

// One line per class: id<TAB>member_count<TAB>role1,role2,...
inline std::string classes_tsv(std::span<const EffectiveClass> classes) {
  std::ostringstream out;
  for (const EffectiveClass& c : classes) {
    out << c.class_id << '\t' << c.member_count << '\t';
    bool first = true;
    for (const RoleName& role : c.frame) {
      if (!first) out << ',';
      out << role;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vnroles
