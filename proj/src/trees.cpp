#include "bqs/trees.hpp"

#include <cctype>
#include <functional>

#include "bqs/errors.hpp"

namespace bqs {

PAryTree::PAryTree(std::vector<PAryTree> children) : children_(std::move(children)) {}

std::size_t PAryTree::internal_nodes() const {
  if (is_leaf()) return 0;
  std::size_t count = 1;
  for (const auto& c : children_) count += c.internal_nodes();
  return count;
}

std::size_t PAryTree::leaves() const {
  if (is_leaf()) return 1;
  std::size_t count = 0;
  for (const auto& c : children_) count += c.leaves();
  return count;
}

bool PAryTree::is_regular(int p) const {
  if (is_leaf()) return true;
  if (children_.size() != static_cast<std::size_t>(p) + 1) return false;
  for (const auto& c : children_) {
    if (!c.is_regular(p)) return false;
  }
  return true;
}

std::string to_string(const PAryTree& tree) {
  if (tree.is_leaf()) return "*";
  std::string out = "(";
  for (const auto& c : tree.children()) out += to_string(c);
  out += ')';
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PAryTree parse() {
    PAryTree t = node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  PAryTree node() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree", pos_);
    if (text_[pos_] == '*') {
      ++pos_;
      return PAryTree::leaf();
    }
    if (text_[pos_] != '(') throw ParseError("expected '*' or '('", pos_);
    ++pos_;
    std::vector<PAryTree> children;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unclosed '('", pos_);
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      children.push_back(node());
    }
    if (children.empty()) throw ParseError("internal node without children", pos_ - 1);
    return PAryTree(std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_regular(const PAryTree& tree, int p) {
  if (p < 1) throw BijectionError("tree bijection needs p >= 1");
  if (!tree.is_regular(p)) {
    throw BijectionError("tree " + to_string(tree) + " is not " + std::to_string(p + 1) +
                         "-regular");
  }
}

}  // namespace

PAryTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::vector<PAryTree> enumerate_trees(int internal, int p) {
  if (internal < 0 || p < 1) throw DimensionError("enumerate_trees needs internal >= 0, p >= 1");
  // by_size[k] holds all trees with k internal nodes.
  std::vector<std::vector<PAryTree>> by_size(static_cast<std::size_t>(internal) + 1);
  by_size[0].push_back(PAryTree::leaf());
  const int arity = p + 1;
  for (int k = 1; k <= internal; ++k) {
    std::vector<PAryTree> chosen;
    std::function<void(int, int)> fill = [&](int slot, int left) {
      if (slot == arity) {
        if (left == 0) by_size[k].emplace_back(chosen);
        return;
      }
      for (int s = 0; s <= left; ++s) {
        for (const auto& sub : by_size[s]) {
          chosen.push_back(sub);
          fill(slot + 1, left - s);
          chosen.pop_back();
        }
      }
    };
    fill(0, k - 1);
  }
  return by_size[internal];
}

LatticePath tree_to_path(const PAryTree& tree, int p) {
  require_regular(tree, p);
  LatticePath path{p, {}};
  bool first_leaf = true;
  std::function<void(const PAryTree&)> walk = [&](const PAryTree& t) {
    if (t.is_leaf()) {
      if (!first_leaf) path.steps.push_back(Step::Vertical);
      first_leaf = false;
      return;
    }
    for (const auto& c : t.children()) walk(c);
    path.steps.push_back(Step::Horizontal);
  };
  walk(tree);
  return path;
}

PAryTree path_to_tree(const LatticePath& path, int p) {
  if (p < 1 || path.p != p) throw BijectionError("path and tree disagree on p");
  const std::size_t arity = static_cast<std::size_t>(p) + 1;
  std::vector<PAryTree> stack;
  stack.push_back(PAryTree::leaf());  // the leftmost leaf carries no step
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i] == Step::Vertical) {
      stack.push_back(PAryTree::leaf());
      continue;
    }
    if (stack.size() < arity) {
      throw BijectionError("horizontal step " + std::to_string(i) +
                           " crosses the diagonal; path is not p-Dyck");
    }
    std::vector<PAryTree> children(std::make_move_iterator(stack.end() - static_cast<std::ptrdiff_t>(arity)),
                                   std::make_move_iterator(stack.end()));
    stack.resize(stack.size() - arity);
    stack.emplace_back(std::move(children));
  }
  if (stack.size() != 1) {
    throw BijectionError("path leaves " + std::to_string(stack.size()) +
                         " subtrees; it must end on the diagonal");
  }
  return std::move(stack.front());
}

PVector tree_to_dyck_vector(const PAryTree& tree, int p) {
  LatticePath path = tree_to_path(tree, p);
  while (!path.steps.empty() && path.steps.back() == Step::Horizontal) path.steps.pop_back();
  return vector_of_path(path);
}

PAryTree dyck_vector_to_tree(const PVector& v) {
  if (is_transdiagonal(v)) {
    throw BijectionError("(" + to_string(v) + ") is transdiagonal and has no tree");
  }
  LatticePath path = path_of_vector(v);
  const auto closing = static_cast<std::size_t>(v.size()) - v.total();
  path.steps.insert(path.steps.end(), closing, Step::Horizontal);
  return path_to_tree(path, v.p());
}

}  // namespace bqs
