#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqs/paths.hpp"

namespace bqs {

// A rooted plane tree whose internal nodes all have the same number of
// children (p + 1 for the trees paired with p-Dyck paths).  A node without
// children is a leaf.
class PAryTree {
 public:
  PAryTree() = default;  // a single leaf
  explicit PAryTree(std::vector<PAryTree> children);

  static PAryTree leaf() { return PAryTree(); }

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PAryTree>& children() const { return children_; }

  std::size_t internal_nodes() const;
  std::size_t leaves() const;

  // True when every internal node has exactly p + 1 children.
  bool is_regular(int p) const;

  friend bool operator==(const PAryTree&, const PAryTree&) = default;

 private:
  std::vector<PAryTree> children_;
};

// "*" for a leaf, "(c_1 ... c_{p+1})" for an internal node, no separators.
std::string to_string(const PAryTree& tree);
PAryTree parse_tree(std::string_view text);

// All trees with `internal` internal nodes of arity p + 1.
std::vector<PAryTree> enumerate_trees(int internal, int p);

// Postorder walk (children left to right, then the node).  Every leaf but the
// leftmost one gives a vertical step and every internal node a horizontal
// step.  Throws BijectionError on a tree that is not (p+1)-regular.
LatticePath tree_to_path(const PAryTree& tree, int p);

// Inverse of tree_to_path.  Throws BijectionError if the path violates the
// prefix condition or does not close up into a single tree.
PAryTree path_to_tree(const LatticePath& path, int p);

// The p-Dyck vector of a tree: its path with the final horizontal run
// removed.
PVector tree_to_dyck_vector(const PAryTree& tree, int p);

// Inverse of tree_to_dyck_vector.  Throws BijectionError on a transdiagonal
// vector.
PAryTree dyck_vector_to_tree(const PVector& v);

}  // namespace bqs
