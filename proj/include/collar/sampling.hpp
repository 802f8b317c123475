#pragma once

#include <string>
#include <vector>

#include "collar/free_product.hpp"
#include "collar/gen_word.hpp"
#include "collar/tree_pair.hpp"

namespace collar {

/// Random full binary tree with `leaves` leaves (uniform split choices).
inline BinTree random_tree(Rng& rng, int leaves) {
  BinTree t;
  for (int i = 1; i < leaves; ++i) t = t.split(rng.below(t.leaf_count()));
  return t;
}

inline std::vector<int> random_permutation(Rng& rng, std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

/// Random (reduced) element of V with at most max_leaves leaves.
inline TreePair random_tree_pair(Rng& rng, int max_leaves = 6) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_leaves)));
  BinTree d = random_tree(rng, n);
  BinTree r = random_tree(rng, n);
  return TreePair(d, r, random_permutation(rng, static_cast<std::size_t>(n))).reduce();
}

inline TreePair random_nonidentity_tree_pair(Rng& rng, int max_leaves = 6) {
  for (;;) {
    TreePair t = random_tree_pair(rng, max_leaves);
    if (!t.is_identity()) return t;
  }
}

/// Random reduced word in P1 * P2 with at most max_syllables syllables.
inline FPElement random_fp_element(Rng& rng, int max_syllables = 4, int max_leaves = 5) {
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_syllables) + 1));
  int factor = rng.flip() ? 1 : 2;
  std::vector<Syllable> sylls;
  for (int i = 0; i < len; ++i) {
    sylls.push_back({factor, random_nonidentity_tree_pair(rng, max_leaves)});
    factor = 3 - factor;
  }
  return FPElement(std::move(sylls));
}

inline TupleElement random_tuple(Rng& rng, std::size_t n, int max_syllables = 3,
                                 int max_leaves = 5) {
  TupleElement t;
  t.components.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    t.components.push_back(random_fp_element(rng, max_syllables, max_leaves));
  return t;
}

/// Random word over a named alphabet with ± exponents.
inline GenWord random_gen_word(Rng& rng, const std::vector<std::string>& alphabet,
                               int max_length) {
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_length) + 1));
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    ls.push_back(Letter{alphabet[rng.below(alphabet.size())], rng.flip() ? 1 : -1});
  return GenWord(std::move(ls));
}

}  // namespace collar
