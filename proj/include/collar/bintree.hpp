#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "collar/common.hpp"

namespace collar {

/// A full binary tree, stored as its left-to-right leaf addresses (binary
/// strings, '0' = left child). The address list of a full tree is exactly a
/// complete prefix code, which is what validate() checks.
class BinTree {
 public:
  BinTree() : leaves_{""} {}

  explicit BinTree(std::vector<std::string> leaves) : leaves_(std::move(leaves)) {
    std::sort(leaves_.begin(), leaves_.end());
    validate();
  }

  std::size_t leaf_count() const { return leaves_.size(); }
  const std::vector<std::string>& leaves() const { return leaves_; }
  const std::string& leaf(std::size_t i) const { return leaves_[i]; }

  /// Index of the leaf that is a prefix of `addr`, or -1.
  int leaf_containing(const std::string& addr) const {
    for (std::size_t i = 0; i < leaves_.size(); ++i)
      if (addr.compare(0, leaves_[i].size(), leaves_[i]) == 0) return static_cast<int>(i);
    return -1;
  }

  /// Split leaf i into its two children.
  BinTree split(std::size_t i) const {
    std::vector<std::string> ls = leaves_;
    std::string base = ls[i];
    ls[i] = base + "0";
    ls.insert(ls.begin() + static_cast<long>(i) + 1, base + "1");
    BinTree t;
    t.leaves_ = std::move(ls);
    return t;
  }

  /// Right comb with n leaves: 0, 10, 110, ..., 1^{n-1}.
  static BinTree right_comb(int n) {
    if (n < 1) throw ValidationError("comb needs at least one leaf");
    std::vector<std::string> ls;
    for (int i = 0; i < n - 1; ++i) ls.push_back(std::string(i, '1') + "0");
    ls.push_back(std::string(n - 1, '1'));
    return BinTree(std::move(ls));
  }

  /// Left comb with n leaves: 0^{n-1}, 0^{n-2}1, ..., 01, 1.
  static BinTree left_comb(int n) {
    if (n < 1) throw ValidationError("comb needs at least one leaf");
    std::vector<std::string> ls;
    ls.push_back(std::string(n - 1, '0'));
    for (int i = n - 2; i >= 0; --i) ls.push_back(std::string(i, '0') + "1");
    return BinTree(std::move(ls));
  }

  /// Smallest common refinement of two trees.
  static BinTree refinement(const BinTree& a, const BinTree& b) {
    std::vector<std::string> ls;
    for (const auto& s : a.leaves_) {
      bool is_prefix_of_b = false;
      for (const auto& t : b.leaves_) {
        if (t.size() > s.size() && t.compare(0, s.size(), s) == 0) {
          ls.push_back(t);  // b subdivides below s
          is_prefix_of_b = true;
        }
      }
      if (!is_prefix_of_b) ls.push_back(s);
    }
    return BinTree(std::move(ls));
  }

  /// Bracket notation: leaf = "*", internal node = "(L,R)".
  std::string to_bracket() const { return bracket(""); }

  static BinTree from_bracket(const std::string& s) {
    std::size_t pos = 0;
    std::vector<std::string> ls;
    parse(s, pos, "", ls);
    if (pos != s.size()) throw ValidationError("trailing characters in tree string");
    return BinTree(std::move(ls));
  }

  friend bool operator==(const BinTree& a, const BinTree& b) = default;

 private:
  void validate() const {
    if (leaves_.empty()) throw ValidationError("tree has no leaves");
    // prefix-free
    for (std::size_t i = 0; i + 1 < leaves_.size(); ++i) {
      if (leaves_[i] == leaves_[i + 1] ||
          (leaves_[i + 1].compare(0, leaves_[i].size(), leaves_[i]) == 0))
        throw ValidationError("leaf addresses are not prefix-free");
    }
    for (const auto& s : leaves_)
      for (char c : s)
        if (c != '0' && c != '1') throw ValidationError("leaf address must be binary");
    if (!full_subtree(0, leaves_.size(), 0))
      throw ValidationError("leaf addresses do not form a full tree");
  }

  /// leaves_[lo..hi) must be exactly the leaves of a full subtree whose root
  /// address has length `depth`. Sorted order puts the left subtree first.
  bool full_subtree(std::size_t lo, std::size_t hi, std::size_t depth) const {
    if (hi - lo == 1) return leaves_[lo].size() == depth;
    std::size_t split = lo;
    while (split < hi && leaves_[split].size() > depth && leaves_[split][depth] == '0') ++split;
    if (split == lo || split == hi) return false;
    for (std::size_t i = lo; i < hi; ++i)
      if (leaves_[i].size() <= depth) return false;
    return full_subtree(lo, split, depth + 1) && full_subtree(split, hi, depth + 1);
  }

  std::string bracket(const std::string& prefix) const {
    if (std::binary_search(leaves_.begin(), leaves_.end(), prefix)) return "*";
    return "(" + bracket(prefix + "0") + "," + bracket(prefix + "1") + ")";
  }

  static void parse(const std::string& s, std::size_t& pos, const std::string& prefix,
                    std::vector<std::string>& ls) {
    if (pos >= s.size()) throw ValidationError("unexpected end of tree string");
    if (s[pos] == '*') {
      ++pos;
      ls.push_back(prefix);
      return;
    }
    if (s[pos] != '(') throw ValidationError("expected '(' or '*' in tree string");
    ++pos;
    parse(s, pos, prefix + "0", ls);
    if (pos >= s.size() || s[pos] != ',') throw ValidationError("expected ',' in tree string");
    ++pos;
    parse(s, pos, prefix + "1", ls);
    if (pos >= s.size() || s[pos] != ')') throw ValidationError("expected ')' in tree string");
    ++pos;
  }

  std::vector<std::string> leaves_;
};

}  // namespace collar
