#pragma once

#include <array>
#include <string>
#include <vector>

#include "collar/tree_pair.hpp"

namespace collar {

/// One syllable of a word in S = P1 * P2 (each factor a copy of V).
struct Syllable {
  int factor = 1;  // 1 or 2
  TreePair element;
  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.factor == b.factor && a.element == b.element;
  }
};

/// A reduced word in the free product P1 * P2: no identity syllables,
/// adjacent syllables in distinct factors.
class FPElement {
 public:
  FPElement() = default;

  explicit FPElement(std::vector<Syllable> syllables) {
    for (auto& s : syllables) append(s.factor, s.element);
  }

  static FPElement syllable(int factor, const TreePair& t) {
    FPElement w;
    w.append(factor, t);
    return w;
  }

  static FPElement empty_word() { return FPElement(); }

  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool is_empty() const { return sylls_.empty(); }
  std::size_t length() const { return sylls_.size(); }

  /// True if every syllable lies in P1.
  bool pure_p1() const {
    for (const auto& s : sylls_)
      if (s.factor != 1) return false;
    return true;
  }

  friend FPElement operator*(const FPElement& a, const FPElement& b) {
    FPElement out = a;
    for (const auto& s : b.sylls_) out.append(s.factor, s.element);
    return out;
  }

  FPElement inverse() const {
    FPElement out;
    for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
      out.append(it->factor, it->element.inverse());
    return out;
  }

  friend bool operator==(const FPElement& a, const FPElement& b) {
    if (a.sylls_.size() != b.sylls_.size()) return false;
    for (std::size_t i = 0; i < a.sylls_.size(); ++i)
      if (!(a.sylls_[i] == b.sylls_[i])) return false;
    return true;
  }

 private:
  /// Append one factor element, merging and cancelling at the boundary.
  void append(int factor, const TreePair& t) {
    if (factor != 1 && factor != 2) throw ValidationError("factor must be 1 or 2");
    TreePair cur = t.reduce();
    if (cur.is_identity()) return;
    if (!sylls_.empty() && sylls_.back().factor == factor) {
      TreePair merged = sylls_.back().element * cur;
      sylls_.pop_back();
      if (!merged.is_identity()) sylls_.push_back({factor, merged});
      return;
    }
    sylls_.push_back({factor, cur});
  }

  std::vector<Syllable> sylls_;
};

inline FPElement fp_multiply(const FPElement& a, const FPElement& b) { return a * b; }
inline FPElement fp_inverse(const FPElement& a) { return a.inverse(); }
inline bool fp_equal(const FPElement& a, const FPElement& b) { return a == b; }

/// Re-normalize an arbitrary syllable list (exposed for tests / parsing).
inline FPElement fp_reduce(const std::vector<Syllable>& sylls) { return FPElement(sylls); }

/// Partial conjugation phi_u: fixes P1 syllables, maps each P2 syllable x to
/// the V-element u x u^{-1} (conjugation inside the factor copy).
inline FPElement partial_conjugation(const TreePair& u, const FPElement& w) {
  if (u.is_identity()) throw ValidationError("partial conjugation requires u != identity");
  const TreePair ui = u.inverse();
  std::vector<Syllable> out;
  out.reserve(w.length());
  for (const auto& s : w.syllables()) {
    if (s.factor == 1)
      out.push_back(s);
    else
      out.push_back({2, (u * s.element) * ui});
  }
  return FPElement(std::move(out));
}

/// Report of the automorphism-level order check for phi_u.
struct AutOrderReport {
  int declared_order = 0;          // order(u)
  bool power_is_identity = false;  // phi_u^p fixes every sample word
  bool lower_powers_move = false;  // some P2 syllable is moved by phi_u^k, 0<k<p
  std::string detail;
  bool ok() const { return power_is_identity && lower_powers_move; }
};

/// Verify that phi_u has exact order p = order(u) at the automorphism level:
/// phi_u^p = id on all samples, and a witness P2 syllable moves under every
/// lower power. The Out-level statement is recorded in the paper, not decided
/// here.
inline AutOrderReport automorphism_order_check(const TreePair& u,
                                               const std::vector<FPElement>& samples,
                                               int order_cap = 64) {
  AutOrderReport rep;
  auto p = u.order(order_cap);
  if (!p) throw PreconditionError("u has infinite order within cap");
  rep.declared_order = *p;
  rep.power_is_identity = true;
  for (const auto& w : samples) {
    FPElement cur = w;
    for (int k = 0; k < *p; ++k) cur = partial_conjugation(u, cur);
    if (!(cur == w)) {
      rep.power_is_identity = false;
      rep.detail = "phi_u^p moved a sample word";
      return rep;
    }
  }
  // find a moving witness among the P2 syllables of the samples
  for (const auto& w : samples) {
    for (const auto& s : w.syllables()) {
      if (s.factor != 2) continue;
      FPElement x = FPElement::syllable(2, s.element);
      bool moves_at_every_lower_power = true;
      FPElement cur = x;
      for (int k = 1; k < *p; ++k) {
        cur = partial_conjugation(u, cur);
        if (cur == x) {
          moves_at_every_lower_power = false;
          break;
        }
      }
      if (moves_at_every_lower_power) {
        rep.lower_powers_move = true;
        return rep;
      }
    }
  }
  rep.detail = "no P2 syllable witness moved by all lower powers";
  return rep;
}

/// An element of the direct power S^n.
struct TupleElement {
  std::vector<FPElement> components;

  std::size_t size() const { return components.size(); }
  bool is_identity() const {
    for (const auto& c : components)
      if (!c.is_empty()) return false;
    return true;
  }

  friend TupleElement operator*(const TupleElement& a, const TupleElement& b) {
    if (a.size() != b.size()) throw ValidationError("tuple length mismatch");
    TupleElement out;
    out.components.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      out.components.push_back(a.components[i] * b.components[i]);
    return out;
  }

  TupleElement inverse() const {
    TupleElement out;
    out.components.reserve(size());
    for (const auto& c : components) out.components.push_back(c.inverse());
    return out;
  }

  friend bool operator==(const TupleElement& a, const TupleElement& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.components[i] == b.components[i])) return false;
    return true;
  }

  static TupleElement identity(std::size_t n) {
    TupleElement t;
    t.components.assign(n, FPElement());
    return t;
  }
};

/// Canonical torsion element for a prime: the comb-plus-cycle constructor.
inline TreePair canonical_u(int prime) { return TreePair::element_of_order(prime); }

/// Componentwise partial conjugation by the canonical u of each prime.
inline TupleElement tuple_automorphism(const std::vector<int>& primes, const TupleElement& t) {
  if (primes.size() != t.size())
    throw ValidationError("prime sequence length does not match tuple length");
  TupleElement out;
  out.components.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out.components.push_back(partial_conjugation(canonical_u(primes[i]), t.components[i]));
  return out;
}

/// phi^m with m possibly negative: per component, conjugation by u_i^m.
/// Exponents are taken mod the (validated) order p_i of u_i.
inline TupleElement tuple_automorphism_power(const std::vector<int>& primes,
                                             const TupleElement& t, long m) {
  if (primes.size() != t.size())
    throw ValidationError("prime sequence length does not match tuple length");
  TupleElement out;
  out.components.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int p = primes[i];
    long e = ((m % p) + p) % p;
    if (e == 0) {
      out.components.push_back(t.components[i]);
      continue;
    }
    TreePair ue = canonical_u(p).pow(e);
    out.components.push_back(partial_conjugation(ue, t.components[i]));
  }
  return out;
}

// --- straightening classifier ----------------------------------------------

/// The fixed probe generating set of one copy of S: two elements per V copy
/// (the basic F-generator and the 2-leaf swap).
inline std::vector<FPElement> factor_probe_set() {
  const TreePair x0 = TreePair::basic_infinite_order();
  const TreePair swap = TreePair::element_of_order(2);
  return {FPElement::syllable(1, x0), FPElement::syllable(1, swap),
          FPElement::syllable(2, x0), FPElement::syllable(2, swap)};
}

enum class PatternShape { PermutationShaped, InjectionShaped, Other };

inline std::string to_string(PatternShape s) {
  switch (s) {
    case PatternShape::PermutationShaped: return "permutation-shaped";
    case PatternShape::InjectionShaped: return "injection-shaped";
    default: return "other";
  }
}

struct StraighteningPattern {
  std::vector<std::vector<bool>> nontrivial;  // n rows (domain factors) x m cols
  PatternShape shape = PatternShape::Other;
};

/// A homomorphism S^n -> S^m described by the images of the probe generators
/// of each domain factor: images[i][k] is the image of probe generator k of
/// factor i+1.
struct FactorHom {
  std::size_t domain_factors = 0;
  std::size_t target_factors = 0;
  std::vector<std::vector<TupleElement>> images;
};

/// Triviality pattern of the "matrix of maps" decomposition, judged on the
/// probe generators, plus its shape classification.
inline StraighteningPattern straightening_pattern(const FactorHom& hom) {
  const std::size_t n = hom.domain_factors, m = hom.target_factors;
  if (hom.images.size() != n) throw ValidationError("need probe images for every factor");
  StraighteningPattern out;
  out.nontrivial.assign(n, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& img : hom.images[i]) {
      if (img.size() != m) throw ValidationError("image tuple has wrong length");
      for (std::size_t j = 0; j < m; ++j)
        if (!img.components[j].is_empty()) out.nontrivial[i][j] = true;
    }
  }
  std::vector<int> row_counts(n, 0), col_counts(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (out.nontrivial[i][j]) {
        ++row_counts[i];
        ++col_counts[j];
      }
  const bool one_per_col =
      std::all_of(col_counts.begin(), col_counts.end(), [](int c) { return c == 1; });
  const bool one_per_row =
      std::all_of(row_counts.begin(), row_counts.end(), [](int c) { return c == 1; });
  const bool at_most_one_per_row =
      std::all_of(row_counts.begin(), row_counts.end(), [](int c) { return c <= 1; });
  if (one_per_col && one_per_row)
    out.shape = PatternShape::PermutationShaped;
  else if (one_per_col && at_most_one_per_row)
    out.shape = PatternShape::InjectionShaped;
  else
    out.shape = PatternShape::Other;
  return out;
}

}  // namespace collar
