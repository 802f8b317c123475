#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "collar/bintree.hpp"

namespace collar {

/// An element of Thompson's group V: a pair of equal-leaf-count binary trees
/// plus a bijection of their leaves. Domain leaf i maps onto range leaf
/// perm[i] as a prefix substitution on infinite binary strings.
///
/// Elements are kept as given (validated); reduce() produces the canonical
/// representative and equality compares reduced forms.
class TreePair {
 public:
  TreePair() : domain_(), range_(), perm_{0}, reduced_(true) {}

  TreePair(BinTree domain, BinTree range, std::vector<int> perm)
      : domain_(std::move(domain)), range_(std::move(range)), perm_(std::move(perm)) {
    if (domain_.leaf_count() != range_.leaf_count())
      throw ValidationError("domain and range leaf counts differ");
    if (perm_.size() != domain_.leaf_count())
      throw ValidationError("leaf bijection has wrong size");
    std::vector<bool> seen(perm_.size(), false);
    for (int v : perm_) {
      if (v < 0 || static_cast<std::size_t>(v) >= perm_.size() || seen[v])
        throw ValidationError("leaf bijection is not a bijection");
      seen[v] = true;
    }
    reduced_ = !find_reducible_caret().has_value();
  }

  static TreePair identity() { return TreePair(); }

  const BinTree& domain() const { return domain_; }
  const BinTree& range() const { return range_; }
  const std::vector<int>& perm() const { return perm_; }
  bool is_reduced() const { return reduced_; }

  /// Image of a leaf address under the prefix substitution.
  std::string apply(const std::string& addr) const {
    int i = domain_.leaf_containing(addr);
    if (i < 0) throw ValidationError("address shorter than the domain subdivision");
    const std::string& d = domain_.leaf(static_cast<std::size_t>(i));
    return range_.leaf(static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])) +
           addr.substr(d.size());
  }

  /// Fully reduced canonical representative of the same group element.
  TreePair reduce() const {
    if (reduced_) return *this;
    TreePair cur = *this;
    for (;;) {
      auto caret = cur.find_reducible_caret();
      if (!caret) break;
      cur = cur.contract(caret->first, caret->second);
    }
    cur.reduced_ = true;
    return cur;
  }

  /// Reduce with carets picked in a caller-chosen order (confluence testing).
  template <typename Picker>
  TreePair reduce_with(Picker&& pick) const {
    TreePair cur = *this;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> all = cur.reducible_carets();
      if (all.empty()) break;
      auto choice = all[pick(all.size())];
      cur = cur.contract(choice.first, choice.second);
    }
    cur.reduced_ = true;
    return cur;
  }

  /// Group product: (a * b) applies b first, then a.
  friend TreePair operator*(const TreePair& a, const TreePair& b) {
    BinTree mid = BinTree::refinement(b.range_, a.domain_);
    const std::size_t n = mid.leaf_count();
    std::vector<std::pair<std::string, std::string>> legs(n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& addr = mid.leaf(c);
      legs[c] = {b.preimage(addr), a.apply(addr)};
    }
    std::sort(legs.begin(), legs.end());
    std::vector<std::string> dom(n), ran_sorted(n);
    for (std::size_t i = 0; i < n; ++i) dom[i] = legs[i].first;
    std::vector<std::string> ran(n);
    for (std::size_t i = 0; i < n; ++i) ran[i] = legs[i].second;
    ran_sorted = ran;
    std::sort(ran_sorted.begin(), ran_sorted.end());
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = std::lower_bound(ran_sorted.begin(), ran_sorted.end(), ran[i]);
      perm[i] = static_cast<int>(it - ran_sorted.begin());
    }
    return TreePair(BinTree(std::move(dom)), BinTree(std::move(ran_sorted)), std::move(perm))
        .reduce();
  }

  TreePair inverse() const {
    const std::size_t n = perm_.size();
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    return TreePair(range_, domain_, std::move(inv)).reduce();
  }

  TreePair pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    TreePair acc = identity();
    TreePair base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    TreePair r = reduce();
    return r.domain_.leaf_count() == 1;
  }

  /// Least k <= cap with a^k = identity, or nullopt ("exceeds cap").
  std::optional<int> order(int cap) const {
    if (cap < 1) throw ValidationError("order cap must be positive");
    TreePair r = reduce();
    TreePair acc = r;
    for (int k = 1; k <= cap; ++k) {
      if (acc.is_identity()) return k;
      acc = acc * r;
    }
    return std::nullopt;
  }

  /// Torsion element of prime order p: right comb with p leaves, leaf p-cycle.
  static TreePair element_of_order(int p) {
    if (!is_prime(p)) throw ValidationError("element_of_order requires a prime");
    BinTree comb = BinTree::right_comb(p);
    std::vector<int> cyc(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % p;
    return TreePair(comb, comb, std::move(cyc));
  }

  /// The classic infinite-order element: 2-caret comb against its mirror,
  /// identity leaf bijection.
  static TreePair basic_infinite_order() {
    return TreePair(BinTree::right_comb(3), BinTree::left_comb(3), {0, 1, 2});
  }

  friend bool operator==(const TreePair& a, const TreePair& b) {
    TreePair ra = a.reduce(), rb = b.reduce();
    return ra.domain_ == rb.domain_ && ra.range_ == rb.range_ && ra.perm_ == rb.perm_;
  }

 private:
  std::string preimage(const std::string& addr) const {
    int j = range_.leaf_containing(addr);
    if (j < 0) throw ValidationError("address shorter than the range subdivision");
    std::size_t i = 0;
    while (perm_[i] != j) ++i;
    return domain_.leaf(i) + addr.substr(range_.leaf(static_cast<std::size_t>(j)).size());
  }

  static bool siblings(const std::string& a, const std::string& b) {
    return a.size() == b.size() && !a.empty() &&
           a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0 && a.back() == '0' &&
           b.back() == '1';
  }

  /// A cancellable caret: domain siblings at (i, i+1) mapped order-preservingly
  /// onto range siblings (perm[i], perm[i]+1).
  std::optional<std::pair<std::size_t, std::size_t>> find_reducible_caret() const {
    for (std::size_t i = 0; i + 1 < perm_.size(); ++i) {
      if (!siblings(domain_.leaf(i), domain_.leaf(i + 1))) continue;
      if (perm_[i + 1] != perm_[i] + 1) continue;
      std::size_t j = static_cast<std::size_t>(perm_[i]);
      if (siblings(range_.leaf(j), range_.leaf(j + 1))) return std::make_pair(i, j);
    }
    return std::nullopt;
  }

  std::vector<std::pair<std::size_t, std::size_t>> reducible_carets() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i + 1 < perm_.size(); ++i) {
      if (!siblings(domain_.leaf(i), domain_.leaf(i + 1))) continue;
      if (perm_[i + 1] != perm_[i] + 1) continue;
      std::size_t j = static_cast<std::size_t>(perm_[i]);
      if (siblings(range_.leaf(j), range_.leaf(j + 1))) out.emplace_back(i, j);
    }
    return out;
  }

  /// Contract the caret at domain position i / range position j.
  TreePair contract(std::size_t i, std::size_t j) const {
    std::vector<std::string> dom = domain_.leaves();
    std::vector<std::string> ran = range_.leaves();
    dom[i] = dom[i].substr(0, dom[i].size() - 1);
    dom.erase(dom.begin() + static_cast<long>(i) + 1);
    ran[j] = ran[j].substr(0, ran[j].size() - 1);
    ran.erase(ran.begin() + static_cast<long>(j) + 1);
    std::vector<int> np;
    np.reserve(perm_.size() - 1);
    for (std::size_t k = 0; k < perm_.size(); ++k) {
      if (k == i + 1) continue;
      int t = perm_[k];
      if (static_cast<std::size_t>(t) > j + 1)
        --t;
      np.push_back(t);
    }
    return TreePair(BinTree(std::move(dom)), BinTree(std::move(ran)), std::move(np));
  }

  BinTree domain_;
  BinTree range_;
  std::vector<int> perm_;
  bool reduced_ = false;
};

}  // namespace collar
