#include "cardtree/regular_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cardtree/automaton.hpp"

namespace cardtree {

int RegularTree::node_index(const std::string& name) const {
  for (int i = 0; i < num_nodes(); ++i)
    if (node_names[i] == name) return i;
  return -1;
}

int RegularTree::add_node(const std::string& name, const std::string& label) {
  node_names.push_back(name);
  labels.push_back(label);
  succ.push_back({-1, -1});
  return num_nodes() - 1;
}

void RegularTree::set_succ(int node, int succ0, int succ1) {
  succ[node] = {succ0, succ1};
}

std::string RegularTree::label_at(const std::string& directions) const {
  int n = root;
  for (char d : directions) {
    if (d != '0' && d != '1') throw ValidationError("bad direction word");
    n = succ[n][d - '0'];
  }
  return labels[n];
}

void RegularTree::validate() const {
  if (node_names.empty()) throw ValidationError("tree has no nodes");
  std::set<std::string> names(node_names.begin(), node_names.end());
  if (static_cast<int>(names.size()) != num_nodes())
    throw ValidationError("duplicate node name");
  if (root < 0 || root >= num_nodes())
    throw ValidationError("root does not resolve");
  for (int i = 0; i < num_nodes(); ++i)
    for (int d : {0, 1})
      if (succ[i][d] < 0 || succ[i][d] >= num_nodes())
        throw ValidationError("node " + node_names[i] +
                              " has unresolved successor");
}

void RegularTree::canonicalize() {
  std::vector<int> perm(num_nodes());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return node_names[x] < node_names[y]; });
  std::vector<int> to(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) to[perm[i]] = i;

  std::vector<std::string> nn(num_nodes()), nl(num_nodes());
  std::vector<std::array<int, 2>> ns(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) {
    nn[i] = node_names[perm[i]];
    nl[i] = labels[perm[i]];
    ns[i] = {to[succ[perm[i]][0]], to[succ[perm[i]][1]]};
  }
  node_names = std::move(nn);
  labels = std::move(nl);
  succ = std::move(ns);
  root = to[root];
}

}  // namespace cardtree
