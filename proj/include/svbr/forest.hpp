#ifndef SVBR_FOREST_HPP
#define SVBR_FOREST_HPP

// Multicolored rooted binary trees and ordered forests, plus their
// semantics as dyadic-brick subdivisions of disjoint unit s-cubes: a caret
// of color c halves its brick along dimension c, left child taking the
// lower half.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace svbr {

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
  int color = 0;  // 0 for a leaf
  Tree left, right;
};

inline Tree leaf() {
  static const Tree l = std::make_shared<TreeNode>();
  return l;
}
inline Tree caret(int color, Tree l, Tree r) {
  if (color < 1) throw std::invalid_argument("caret color must be positive");
  return std::make_shared<TreeNode>(TreeNode{color, std::move(l), std::move(r)});
}
inline bool is_leaf(const Tree& t) { return t->color == 0; }

inline int leaves(const Tree& t) {
  return is_leaf(t) ? 1 : leaves(t->left) + leaves(t->right);
}
inline int carets(const Tree& t) {
  return is_leaf(t) ? 0 : 1 + carets(t->left) + carets(t->right);
}
inline int depth(const Tree& t) {
  return is_leaf(t) ? 0 : 1 + std::max(depth(t->left), depth(t->right));
}
inline int max_color(const Tree& t) {
  return is_leaf(t) ? 0 : std::max(t->color, std::max(max_color(t->left), max_color(t->right)));
}

inline void carets_by_color(const Tree& t, std::map<int, int>& out) {
  if (is_leaf(t)) return;
  ++out[t->color];
  carets_by_color(t->left, out);
  carets_by_color(t->right, out);
}
inline std::map<int, int> carets_by_color(const Tree& t) {
  std::map<int, int> out;
  carets_by_color(t, out);
  return out;
}

inline bool tree_equal(const Tree& a, const Tree& b) {
  if (a == b) return true;
  if (a->color != b->color) return false;
  if (is_leaf(a)) return true;
  return tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

// Path from the root: 0 = left child, 1 = right child.
using Path = std::vector<int>;

inline const Tree& subtree_at(const Tree& t, const Path& p) {
  const Tree* cur = &t;
  for (int step : p) {
    if (is_leaf(*cur)) throw std::out_of_range("path leaves the tree");
    cur = step == 0 ? &(*cur)->left : &(*cur)->right;
  }
  return *cur;
}

inline Tree replace_at(const Tree& t, const Path& p, size_t k, const Tree& sub) {
  if (k == p.size()) return sub;
  if (is_leaf(t)) throw std::out_of_range("path leaves the tree");
  if (p[k] == 0) return caret(t->color, replace_at(t->left, p, k + 1, sub), t->right);
  return caret(t->color, t->left, replace_at(t->right, p, k + 1, sub));
}
inline Tree replace_at(const Tree& t, const Path& p, const Tree& sub) {
  return replace_at(t, p, 0, sub);
}

// Leaf positions are 1-based, left to right.
inline Tree graft_tree(const Tree& t, int leaf_index, const Tree& sub, int& offset) {
  if (is_leaf(t)) {
    ++offset;
    return offset == leaf_index ? sub : t;
  }
  Tree l = graft_tree(t->left, leaf_index, sub, offset);
  Tree r = graft_tree(t->right, leaf_index, sub, offset);
  return (l == t->left && r == t->right) ? t : caret(t->color, l, r);
}

inline Path leaf_path(const Tree& t, int leaf_index) {
  if (is_leaf(t)) {
    if (leaf_index != 1) throw std::out_of_range("leaf index out of range");
    return {};
  }
  int nl = leaves(t->left);
  if (leaf_index <= nl) {
    Path p = leaf_path(t->left, leaf_index);
    p.insert(p.begin(), 0);
    return p;
  }
  Path p = leaf_path(t->right, leaf_index - nl);
  p.insert(p.begin(), 1);
  return p;
}

struct Forest {
  std::vector<Tree> trees;

  Forest() = default;
  explicit Forest(std::vector<Tree> ts) : trees(std::move(ts)) {
    if (trees.empty()) throw std::invalid_argument("forest must be nonempty");
  }
  static Forest trivial(int n) {
    if (n < 1) throw std::invalid_argument("forest must be nonempty");
    return Forest(std::vector<Tree>(n, leaf()));
  }

  int roots() const { return (int)trees.size(); }
  int leaf_count() const {
    int n = 0;
    for (const auto& t : trees) n += leaves(t);
    return n;
  }
  int caret_count() const {
    int n = 0;
    for (const auto& t : trees) n += carets(t);
    return n;
  }
  bool is_trivial() const {
    for (const auto& t : trees)
      if (!is_leaf(t)) return false;
    return true;
  }
  bool operator==(const Forest& o) const {
    if (trees.size() != o.trees.size()) return false;
    for (size_t i = 0; i < trees.size(); ++i)
      if (!tree_equal(trees[i], o.trees[i])) return false;
    return true;
  }

  // Maps a global leaf index to (tree index, local leaf index), both 1-based
  // for the leaf, 0-based for the tree.
  std::pair<int, int> locate_leaf(int leaf_index) const {
    int i = leaf_index;
    for (size_t r = 0; r < trees.size(); ++r) {
      int nl = leaves(trees[r]);
      if (i <= nl) return {(int)r, i};
      i -= nl;
    }
    throw std::out_of_range("leaf index out of range");
  }
  int leaf_offset(int tree_index) const {
    int off = 0;
    for (int r = 0; r < tree_index; ++r) off += leaves(trees[r]);
    return off;
  }
};

inline Forest graft(const Forest& f, int leaf_index, const Tree& sub) {
  auto [r, local] = f.locate_leaf(leaf_index);
  Forest out = f;
  int offset = 0;
  out.trees[r] = graft_tree(out.trees[r], local, sub, offset);
  return out;
}

inline bool is_very_elementary(const Forest& f) {
  for (const auto& t : f.trees)
    if (carets(t) > 1) return false;
  return true;
}

namespace detail {
inline bool elementary_path(const Tree& t, uint64_t seen) {
  if (is_leaf(t)) return true;
  uint64_t bit = uint64_t{1} << t->color;
  if (seen & bit) return false;
  return elementary_path(t->left, seen | bit) && elementary_path(t->right, seen | bit);
}
}  // namespace detail

// Along every root-to-leaf path each color appears at most once.  The
// strict variant instead allows each color at most once in the whole tree.
inline bool is_elementary(const Forest& f, bool per_tree_strict = false) {
  for (const auto& t : f.trees) {
    if (per_tree_strict) {
      for (const auto& [c, n] : carets_by_color(t))
        if (n > 1) return false;
    } else if (!detail::elementary_path(t, 0)) {
      return false;
    }
  }
  return true;
}

// Leaf counts of the nontrivial trees.
inline std::vector<int> merge_leaf_multiset(const Forest& f) {
  std::vector<int> out;
  for (const auto& t : f.trees)
    if (!is_leaf(t)) out.push_back(leaves(t));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bricks

struct DyadicInterval {
  int64_t a = 0;  // [a/2^k, (a+1)/2^k)
  int k = 0;

  bool operator==(const DyadicInterval& o) const { return a == o.a && k == o.k; }
  DyadicInterval half(int which) const { return {2 * a + which, k + 1}; }
  bool contains(const DyadicInterval& o) const {
    return o.k >= k && (o.a >> (o.k - k)) == a;
  }
  bool disjoint(const DyadicInterval& o) const { return !contains(o) && !o.contains(*this); }
};

struct Brick {
  int root = 0;  // which unit cube of the forest
  std::vector<DyadicInterval> iv;  // one interval per dimension 1..s

  bool operator==(const Brick& o) const { return root == o.root && iv == o.iv; }
  bool contains(const Brick& o) const {
    if (root != o.root || iv.size() != o.iv.size()) return false;
    for (size_t d = 0; d < iv.size(); ++d)
      if (!iv[d].contains(o.iv[d])) return false;
    return true;
  }
  // Dyadic bricks in the same cube either nest or are disjoint in some axis.
  bool intersects(const Brick& o) const {
    if (root != o.root) return false;
    for (size_t d = 0; d < iv.size(); ++d)
      if (iv[d].disjoint(o.iv[d])) return false;
    return true;
  }
  Brick intersection(const Brick& o) const {
    Brick out;
    out.root = root;
    out.iv.resize(iv.size());
    for (size_t d = 0; d < iv.size(); ++d)
      out.iv[d] = iv[d].k >= o.iv[d].k ? iv[d] : o.iv[d];
    return out;
  }
};

namespace detail {
inline void bricks_of(const Tree& t, const Brick& cur, int s, std::vector<Brick>& out) {
  if (is_leaf(t)) {
    out.push_back(cur);
    return;
  }
  if (t->color > s) throw std::invalid_argument("caret color exceeds color count");
  Brick l = cur, r = cur;
  l.iv[t->color - 1] = cur.iv[t->color - 1].half(0);
  r.iv[t->color - 1] = cur.iv[t->color - 1].half(1);
  bricks_of(t->left, l, s, out);
  bricks_of(t->right, r, s, out);
}
}  // namespace detail

// Leaf-ordered brick list of the subdivision the forest encodes.
inline std::vector<Brick> bricks(const Forest& f, int s) {
  std::vector<Brick> out;
  for (int r = 0; r < f.roots(); ++r) {
    Brick unit;
    unit.root = r;
    unit.iv.assign(s, DyadicInterval{});
    detail::bricks_of(f.trees[r], unit, s, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: leaf "_", caret "(c L R)", forest = whitespace-separated trees.

inline void print_tree(const Tree& t, std::ostream& os) {
  if (is_leaf(t)) {
    os << "_";
    return;
  }
  os << "(" << t->color << " ";
  print_tree(t->left, os);
  os << " ";
  print_tree(t->right, os);
  os << ")";
}
inline std::string print_tree(const Tree& t) {
  std::ostringstream os;
  print_tree(t, os);
  return os.str();
}
inline std::string print_forest(const Forest& f) {
  std::ostringstream os;
  for (int r = 0; r < f.roots(); ++r) {
    if (r) os << " ";
    print_tree(f.trees[r], os);
  }
  return os.str();
}

namespace detail {
inline void skip_ws(const std::string& s, size_t& p) {
  while (p < s.size() && (s[p] == ' ' || s[p] == '\t' || s[p] == '\n' || s[p] == '\r')) ++p;
}
inline Tree parse_tree_at(const std::string& s, size_t& p) {
  skip_ws(s, p);
  if (p >= s.size()) throw std::runtime_error("unexpected end of tree text");
  if (s[p] == '_') {
    ++p;
    return leaf();
  }
  if (s[p] != '(') throw std::runtime_error("expected '(' or '_' in tree text");
  ++p;
  skip_ws(s, p);
  size_t q = p;
  while (q < s.size() && isdigit((unsigned char)s[q])) ++q;
  if (q == p) throw std::runtime_error("expected caret color in tree text");
  int color = std::stoi(s.substr(p, q - p));
  p = q;
  Tree l = parse_tree_at(s, p);
  Tree r = parse_tree_at(s, p);
  skip_ws(s, p);
  if (p >= s.size() || s[p] != ')') throw std::runtime_error("expected ')' in tree text");
  ++p;
  return caret(color, l, r);
}
}  // namespace detail

inline Tree parse_tree(const std::string& s) {
  size_t p = 0;
  Tree t = detail::parse_tree_at(s, p);
  detail::skip_ws(s, p);
  if (p != s.size()) throw std::runtime_error("trailing text after tree");
  return t;
}

inline Forest parse_forest(const std::string& s) {
  size_t p = 0;
  std::vector<Tree> ts;
  while (true) {
    detail::skip_ws(s, p);
    if (p >= s.size()) break;
    ts.push_back(detail::parse_tree_at(s, p));
  }
  if (ts.empty()) throw std::runtime_error("empty forest text");
  return Forest(std::move(ts));
}

}  // namespace svbr

#endif
