#pragma once

#include <array>
#include <string>
#include <vector>

namespace cardtree {

/// Finite rooted graph presenting an infinite binary tree: every node has a
/// label and exactly two successors; the tree is the unfolding from root.
struct RegularTree {
  std::vector<std::string> node_names;
  std::vector<std::string> labels;          // per node
  std::vector<std::array<int, 2>> succ;     // per node: {succ0, succ1}
  int root = 0;

  int num_nodes() const { return static_cast<int>(node_names.size()); }
  int node_index(const std::string& name) const;  // -1 if unknown

  int add_node(const std::string& name, const std::string& label);
  void set_succ(int node, int succ0, int succ1);

  /// Label of the unfolding at the node addressed by a 0/1 word from root.
  std::string label_at(const std::string& directions) const;

  void validate() const;
  void canonicalize();  // sort nodes by name

  bool operator==(const RegularTree&) const = default;
};

}  // namespace cardtree
