#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "collar/free_product.hpp"
#include "collar/presentation.hpp"
#include "collar/sampling.hpp"

namespace collar {

/// A finite prefix of an increasing sequence of primes (an element (ω, n) of
/// the index family Ω × N).
class PrimeSeq {
 public:
  PrimeSeq() = default;
  explicit PrimeSeq(std::vector<int> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (!is_prime(primes_[i]))
        throw ValidationError(std::to_string(primes_[i]) + " is not prime");
      if (i > 0 && primes_[i] <= primes_[i - 1])
        throw ValidationError("prime sequence must be strictly increasing");
    }
  }

  const std::vector<int>& primes() const { return primes_; }
  std::size_t length() const { return primes_.size(); }
  int at(std::size_t i) const { return primes_[i]; }
  bool contains(int p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  std::set<int> as_set() const { return std::set<int>(primes_.begin(), primes_.end()); }

  PrimeSeq prefix(std::size_t n) const {
    return PrimeSeq(std::vector<int>(primes_.begin(), primes_.begin() + static_cast<long>(n)));
  }

  /// Set inclusion {this} ⊆ {other}.
  bool subset_of(const PrimeSeq& other) const {
    for (int p : primes_)
      if (!other.contains(p)) return false;
    return true;
  }

  friend bool operator==(const PrimeSeq& a, const PrimeSeq& b) = default;

 private:
  std::vector<int> primes_;
};

/// An element of G_(ω,n) = Sⁿ ⋊ Z in semi-direct normal form (tuple, z).
struct TowerElement {
  TupleElement tuple;
  long z = 0;

  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.z == b.z && a.tuple == b.tuple;
  }
};

/// Semi-direct law: (k₁, m₁)·(k₂, m₂) = (k₁ · φ^{m₁}(k₂), m₁ + m₂), with φ
/// the componentwise partial conjugation for the prime sequence.
inline TowerElement tower_multiply(const TowerElement& a, const TowerElement& b,
                                   const PrimeSeq& seq) {
  if (a.tuple.size() != seq.length() || b.tuple.size() != seq.length())
    throw ValidationError("tower element level does not match prime sequence");
  TowerElement out;
  out.tuple = a.tuple * tuple_automorphism_power(seq.primes(), b.tuple, a.z);
  out.z = a.z + b.z;
  return out;
}

inline TowerElement tower_identity(const PrimeSeq& seq) {
  return TowerElement{TupleElement::identity(seq.length()), 0};
}

inline TowerElement tower_inverse(const TowerElement& a, const PrimeSeq& seq) {
  TowerElement out;
  out.z = -a.z;
  out.tuple = tuple_automorphism_power(seq.primes(), a.tuple.inverse(), -a.z);
  return out;
}

/// Group-model interface at a fixed level, for verify_hom and the oracles.
struct TowerGroupModel {
  using Element = TowerElement;
  PrimeSeq seq;
  Element identity() const { return tower_identity(seq); }
  Element multiply(const Element& a, const Element& b) const {
    return tower_multiply(a, b, seq);
  }
  Element inverse(const Element& a) const { return tower_inverse(a, seq); }
  bool is_identity(const Element& a) const { return a == tower_identity(seq); }
};

inline TowerElement random_tower_element(Rng& rng, const PrimeSeq& seq, int max_syllables = 3,
                                         int max_leaves = 5, long max_z = 6) {
  TowerElement t;
  t.tuple = random_tuple(rng, seq.length(), max_syllables, max_leaves);
  t.z = rng.range(-max_z, max_z);
  return t;
}

/// The bonding epimorphism α_n: level n → level n−1 (drops the last factor).
inline TowerElement bonding_map(const TowerElement& a, const PrimeSeq& seq) {
  if (seq.length() == 0) throw PreconditionError("bonding map undefined at level 0");
  if (a.tuple.size() != seq.length())
    throw ValidationError("tower element level does not match prime sequence");
  TowerElement out;
  out.z = a.z;
  out.tuple.components.assign(a.tuple.components.begin(), a.tuple.components.end() - 1);
  return out;
}

/// The splitting section: appends the identity component.
inline TowerElement section(const TowerElement& b) {
  TowerElement out = b;
  out.tuple.components.push_back(FPElement());
  return out;
}

/// Isomorphism decision for equal-length sequences: equality as sets, which
/// for strictly increasing sequences is equality as sequences.
struct IsoResult {
  bool isomorphic = false;
  std::string diagnostic;
};

inline IsoResult iso_decide(const PrimeSeq& a, const PrimeSeq& b) {
  IsoResult r;
  if (a.length() != b.length()) {
    r.isomorphic = false;
    r.diagnostic =
        "levels differ; the isomorphism criterion only addresses equal length "
        "(distinct levels are not decided by the lemma)";
    return r;
  }
  r.isomorphic = a == b;
  if (!r.isomorphic) r.diagnostic = "prime sets differ";
  return r;
}

/// Epimorphism decision: {b} ⊆ {a} (requires |a| ≥ |b|).
inline bool epi_decide(const PrimeSeq& a, const PrimeSeq& b) {
  if (a.length() < b.length()) return false;
  return b.subset_of(a);
}

/// The explicit epimorphism of Lemma-style construction: matching prime
/// factors map identically, all other factors are crushed, z ↦ z.
struct TowerEpiMap {
  PrimeSeq source, target;
  std::vector<int> factor_of_target;  // index in source of each target factor

  TowerElement apply(const TowerElement& e) const {
    if (e.tuple.size() != source.length())
      throw ValidationError("element level does not match the map source");
    TowerElement out;
    out.z = e.z;
    out.tuple.components.reserve(target.length());
    for (int idx : factor_of_target)
      out.tuple.components.push_back(e.tuple.components[static_cast<std::size_t>(idx)]);
    return out;
  }
};

struct BuildEpiResult {
  bool exists = false;
  std::optional<int> missing_prime;
  std::optional<TowerEpiMap> map;
  bool hom_verified = false;
  std::size_t pairs_checked = 0;
};

/// Build the epimorphism when the subset criterion holds and verify the
/// homomorphism law on random element pairs; refuse (naming a missing prime)
/// otherwise.
inline BuildEpiResult build_epi(const PrimeSeq& a, const PrimeSeq& b,
                                std::size_t verify_pairs = 500, std::uint64_t seed = 0) {
  BuildEpiResult out;
  for (int p : b.primes())
    if (!a.contains(p)) {
      out.exists = false;
      out.missing_prime = p;
      return out;
    }
  if (a.length() < b.length()) {
    out.exists = false;
    return out;
  }
  out.exists = true;
  TowerEpiMap m;
  m.source = a;
  m.target = b;
  for (int p : b.primes()) {
    const auto& ap = a.primes();
    m.factor_of_target.push_back(
        static_cast<int>(std::lower_bound(ap.begin(), ap.end(), p) - ap.begin()));
  }
  Rng rng(seed);
  out.hom_verified = true;
  for (std::size_t i = 0; i < verify_pairs; ++i) {
    TowerElement x = random_tower_element(rng, a);
    TowerElement y = random_tower_element(rng, a);
    TowerElement lhs = m.apply(tower_multiply(x, y, a));
    TowerElement rhs = tower_multiply(m.apply(x), m.apply(y), b);
    if (!(lhs == rhs)) {
      out.hom_verified = false;
      break;
    }
    ++out.pairs_checked;
  }
  out.map = std::move(m);
  return out;
}

/// Certified exact order of the tuple automorphism φ_seq: verifies φ^N = id
/// on the witnesses and, for each prime p, that φ^{N/p} moves some witness
/// (so every prime is necessary and the order is exactly N = ∏ primes).
struct OuterOrderResult {
  long order = 1;
  bool identity_at_order = false;
  bool all_primes_necessary = false;
  std::string diagnostic;
  bool ok() const { return identity_at_order && all_primes_necessary; }
};

inline OuterOrderResult outer_action_order(const PrimeSeq& seq,
                                           const std::vector<TupleElement>& witnesses) {
  OuterOrderResult r;
  for (int p : seq.primes()) r.order *= p;
  r.identity_at_order = true;
  for (const auto& w : witnesses) {
    if (w.size() != seq.length()) throw ValidationError("witness tuple has wrong length");
    if (!(tuple_automorphism_power(seq.primes(), w, r.order) == w)) {
      r.identity_at_order = false;
      r.diagnostic = "phi^N moved a witness";
      return r;
    }
  }
  r.all_primes_necessary = true;
  if (seq.length() == 0) return r;  // order 1, nothing to certify
  for (std::size_t i = 0; i < seq.length(); ++i) {
    const long sub = r.order / seq.at(i);
    bool moved = false;
    for (const auto& w : witnesses) {
      if (!(tuple_automorphism_power(seq.primes(), w, sub) == w)) {
        moved = true;
        break;
      }
    }
    if (!moved) {
      r.all_primes_necessary = false;
      r.diagnostic = "no witness moved by phi^(N/" + std::to_string(seq.at(i)) +
                     "); witness set inadequate";
      return r;
    }
  }
  return r;
}

/// Default witness tuples: for each factor, a tuple carrying a moving P2
/// syllable in that factor.
inline std::vector<TupleElement> default_order_witnesses(const PrimeSeq& seq) {
  std::vector<TupleElement> out;
  const TreePair x0 = TreePair::basic_infinite_order();
  for (std::size_t i = 0; i < seq.length(); ++i) {
    TupleElement t = TupleElement::identity(seq.length());
    t.components[i] = FPElement::syllable(2, x0);
    out.push_back(std::move(t));
  }
  if (out.empty()) out.push_back(TupleElement::identity(0));
  return out;
}

// --- pro-isomorphism of inverse sequences ------------------------------------

/// Brute-force search for a commuting ladder between the two inverse
/// sequences, restricted (as the lemmas license within this family) to the
/// prime-set epi criterion. A ladder is an alternating chain of prefix cuts
///   X(c₁) ⊆ Y(c₂) ⊆ X(c₃) ⊆ ...
/// (sides alternate, cuts strictly increase per side) such that
///   - every inclusion except the terminal one is verified inside the prefixes,
///   - each side is cofinal in its prefix (final cut = prefix length) and
///     contributes at least `depth` cuts,
///   - the terminal cut is closable against the other side's extensions:
///     each of its primes lies in the other's prefix set or beyond the
///     other's last prime (increasing extensions can only append larger primes).
struct LadderResult {
  bool found = false;
  // cut indices per side, in chain order
  std::vector<std::size_t> cuts_a, cuts_b;
};

namespace detail {

struct LadderSearcher {
  const PrimeSeq& a;
  const PrimeSeq& b;
  std::size_t depth;
  std::vector<std::size_t> cuts_a, cuts_b;

  // {x prefix cx} ⊆ {y prefix cy}
  static bool subset(const PrimeSeq& x, std::size_t cx, const PrimeSeq& y, std::size_t cy) {
    for (std::size_t i = 0; i < cx; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < cy; ++j)
        if (y.at(j) == x.at(i)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }

  // {x full prefix} ⊆ {y full prefix} ∪ {primes beyond y's last}
  static bool closable(const PrimeSeq& x, const PrimeSeq& y) {
    if (y.length() == 0) return true;
    const int ylast = y.at(y.length() - 1);
    for (std::size_t i = 0; i < x.length(); ++i)
      if (!y.contains(x.at(i)) && x.at(i) <= ylast) return false;
    return true;
  }

  bool done(int terminal_side) const {
    if (cuts_a.size() < depth || cuts_b.size() < depth) return false;
    if (cuts_a.empty() || cuts_a.back() != a.length()) return false;
    if (cuts_b.empty() || cuts_b.back() != b.length()) return false;
    return terminal_side == 0 ? closable(a, b) : closable(b, a);
  }

  // side: which side places the next cut (0 = a, 1 = b); prev_cut_other is
  // the most recent cut on the other side (0 = chain start).
  bool extend(int side, std::size_t prev_cut_other) {
    if (done(1 - side)) return true;  // the other side placed the terminal cut
    const PrimeSeq& own = side == 0 ? a : b;
    const PrimeSeq& other = side == 0 ? b : a;
    auto& own_cuts = side == 0 ? cuts_a : cuts_b;
    const std::size_t lo = own_cuts.empty() ? 1 : own_cuts.back() + 1;
    for (std::size_t c = lo; c <= own.length(); ++c) {
      // the previous chain element must include into this one
      if (prev_cut_other > 0 && !subset(other, prev_cut_other, own, c)) continue;
      own_cuts.push_back(c);
      if (extend(1 - side, c)) return true;
      own_cuts.pop_back();
    }
    return false;
  }
};

}  // namespace detail

inline LadderResult ladder_search(const PrimeSeq& a, const PrimeSeq& b, std::size_t depth) {
  if (depth > a.length() || depth > b.length())
    throw ValidationError("ladder depth exceeds a prefix length");
  // an empty prefix is compatible with everything: identity/trivial ladder
  if (a.length() == 0 || b.length() == 0) return LadderResult{true, {}, {}};
  LadderResult out;
  for (int start = 0; start < 2; ++start) {
    detail::LadderSearcher s{a, b, depth, {}, {}};
    if (s.extend(start, 0)) {
      out.found = true;
      out.cuts_a = std::move(s.cuts_a);
      out.cuts_b = std::move(s.cuts_b);
      return out;
    }
  }
  return out;
}

/// Combinatorial pro-distinctness of two prefixes. Compatible prefixes (one a
/// weak prefix of the other) are reported as equal-prefix; otherwise the
/// interleaving witness is returned: the smaller prime at the first
/// difference, which lies strictly between consecutive primes of the other
/// sequence and so can never appear in any of its tails.
struct ProDistinctResult {
  bool distinct = false;
  std::optional<int> witness;
};

inline ProDistinctResult pro_distinct(const PrimeSeq& a, const PrimeSeq& b) {
  ProDistinctResult r;
  const std::size_t l = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < l; ++i) {
    if (a.at(i) == b.at(i)) continue;
    r.distinct = true;
    r.witness = std::min(a.at(i), b.at(i));
    return r;
  }
  r.distinct = false;  // equal, or one is a prefix of the other
  return r;
}

// --- presentation-level bridge (normal-form oracle) -------------------------

/// Explicit semidirect data and evaluation map for the tower level `seq`:
/// per factor, two P1 generators (fixed by the action) plus the full
/// conjugation orbit of one P2 generator under u_{p_i}, so the action and its
/// inverse are single-letter words (a cyclic orbit shift). The Z-generator is
/// named `z_name`.
struct TowerPresentationData {
  PrimeSeq seq;
  SemidirectData sd;
  std::string z_name;
  std::map<std::string, TowerElement> images;  // k-gens and z_name → concrete elements
};

inline TowerPresentationData tower_presentation_data(const PrimeSeq& seq,
                                                     const std::string& z_name = "a") {
  TowerPresentationData out;
  out.seq = seq;
  out.z_name = z_name;
  out.sd.q_gens = {z_name};
  const TreePair x0 = TreePair::basic_infinite_order();
  const TreePair swap2 = TreePair::element_of_order(2);

  auto add_kgen = [&](const std::string& name, std::size_t factor_idx, int factor,
                      const TreePair& val) {
    out.sd.k_gens.push_back(name);
    TowerElement e = tower_identity(seq);
    e.tuple.components[factor_idx] = FPElement::syllable(factor, val);
    out.images[name] = std::move(e);
  };

  for (std::size_t i = 0; i < seq.length(); ++i) {
    const int p = seq.at(i);
    const TreePair u = canonical_u(p);
    const std::string fi = "f" + std::to_string(i + 1);
    // P1 generators are fixed by the action
    add_kgen(fi + "p1a", i, 1, x0);
    add_kgen(fi + "p1b", i, 1, swap2);
    out.sd.action[z_name][fi + "p1a"] = GenWord::gen(fi + "p1a");
    out.sd.action[z_name][fi + "p1b"] = GenWord::gen(fi + "p1b");
    out.sd.inverse_action[z_name][fi + "p1a"] = GenWord::gen(fi + "p1a");
    out.sd.inverse_action[z_name][fi + "p1b"] = GenWord::gen(fi + "p1b");
    // conjugation orbit of one P2 generator; the orbit must have exact size p
    std::vector<TreePair> orbit{x0};
    for (int k = 1; k < p; ++k) orbit.push_back((u * orbit.back()) * u.inverse());
    for (int k = 0; k < p; ++k) {
      for (int k2 = 0; k2 < k; ++k2)
        if (orbit[static_cast<std::size_t>(k)] == orbit[static_cast<std::size_t>(k2)])
          throw PreconditionError("conjugation orbit collapsed; base element commutes with a power of u");
      add_kgen(fi + "p2c" + std::to_string(k), i, 2, orbit[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < p; ++k) {
      const std::string name = fi + "p2c" + std::to_string(k);
      const std::string next = fi + "p2c" + std::to_string((k + 1) % p);
      const std::string prev = fi + "p2c" + std::to_string((k - 1 + p) % p);
      out.sd.action[z_name][name] = GenWord::gen(next);
      out.sd.inverse_action[z_name][name] = GenWord::gen(prev);
    }
  }
  out.images[z_name] = TowerElement{TupleElement::identity(seq.length()), 1};
  out.sd.validate();
  return out;
}

/// Evaluate a presentation word into the concrete tower group.
inline TowerElement evaluate_tower_word(const GenWord& w, const TowerPresentationData& data) {
  TowerGroupModel m{data.seq};
  return evaluate_word(m, w, data.images);
}

}  // namespace collar
