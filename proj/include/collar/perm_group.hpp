#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "collar/permutation.hpp"

namespace collar {

constexpr std::size_t kDefaultClosureCap = 20000;

/// A finite permutation group with its full element enumeration.
///
/// Closure is breadth-first multiplication against the generator set with a
/// hash set; groups beyond the cap raise SizeLimitError. Everything downstream
/// (derived series, quotients, normal subgroup enumeration) works on the
/// enumerated closure.
class PermGroup {
 public:
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultClosureCap) {
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw ValidationError("generators do not share the given degree");
    std::unordered_set<Permutation, PermutationHash> seen;
    std::deque<Permutation> frontier;
    const Permutation id = Permutation::identity(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
      Permutation cur = frontier.front();
      frontier.pop_front();
      for (const auto& g : generators) {
        Permutation nxt = cur * g;
        if (seen.insert(nxt).second) {
          if (seen.size() > cap)
            throw SizeLimitError("group closure exceeds cap of " + std::to_string(cap));
          frontier.push_back(nxt);
        }
      }
    }
    std::vector<Permutation> elems(seen.begin(), seen.end());
    std::sort(elems.begin(), elems.end());
    return PermGroup(degree, std::move(generators), std::move(elems));
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree_ || order() > g.order()) return false;
    for (const auto& e : elements_)
      if (!g.contains(e)) return false;
    return true;
  }

  /// Subgroup generated by all commutators [a,b] = a⁻¹b⁻¹ab over the closure.
  PermGroup commutator_subgroup(std::size_t cap = kDefaultClosureCap) const {
    std::unordered_set<Permutation, PermutationHash> comms;
    std::vector<Permutation> inv;
    inv.reserve(elements_.size());
    for (const auto& e : elements_) inv.push_back(e.inverse());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < elements_.size(); ++j)
        comms.insert(inv[i] * inv[j] * elements_[i] * elements_[j]);
      // the commutator set already covers the group: the subgroup is the group
      if (comms.size() == elements_.size()) return *this;
    }
    std::vector<Permutation> gens(comms.begin(), comms.end());
    std::sort(gens.begin(), gens.end());
    return generate(degree_, std::move(gens), cap);
  }

  /// Descending chain G ⊵ G' ⊵ G'' ⊵ ... until stabilization. The last term
  /// is the perfect core.
  std::vector<PermGroup> derived_series(std::size_t cap = kDefaultClosureCap) const {
    std::vector<PermGroup> series{*this};
    for (;;) {
      PermGroup next = series.back().commutator_subgroup(cap);
      if (next.order() == series.back().order()) break;
      series.push_back(std::move(next));
    }
    return series;
  }

  PermGroup perfect_core(std::size_t cap = kDefaultClosureCap) const {
    return derived_series(cap).back();
  }

  bool is_perfect(std::size_t cap = kDefaultClosureCap) const {
    return commutator_subgroup(cap).order() == order();
  }

  /// Finite-group test: the derived series reaches the perfect core, so
  /// hypo-Abelian reduces to triviality of that core.
  bool is_hypo_abelian(std::size_t cap = kDefaultClosureCap) const {
    return perfect_core(cap).is_trivial();
  }

  /// Conjugation-closure normality check of `n` inside this group.
  /// Checking generator conjugates of generators suffices: conjugation by a
  /// fixed element is injective on the finite subgroup, and conjugation by
  /// products composes.
  bool is_normal_subgroup(const PermGroup& n) const {
    if (!n.is_subgroup_of(*this)) return false;
    const auto& ggens = generators_.empty() ? elements_ : generators_;
    const auto& ngens = n.generators_.empty() ? n.elements_ : n.generators_;
    for (const auto& g : ggens) {
      Permutation gi = g.inverse();
      for (const auto& x : ngens)
        if (!n.contains(g * x * gi)) return false;
    }
    return true;
  }

  /// All normal subgroups, as joins of normal closures of single elements.
  std::vector<PermGroup> normal_subgroups(std::size_t cap = kDefaultClosureCap) const {
    std::vector<std::vector<Permutation>> classes = conjugacy_classes();
    // normal closure of each class = subgroup generated by the class
    std::vector<PermGroup> closures;
    for (const auto& cls : classes)
      closures.push_back(generate(degree_, cls, cap));
    auto key = [](const PermGroup& g) { return g.elements(); };
    std::map<std::vector<Permutation>, PermGroup> found;
    for (const auto& c : closures) found.emplace(key(c), c);
    // close under pairwise join
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<PermGroup> current;
      for (auto& [k, v] : found) current.push_back(v);
      for (std::size_t i = 0; i < current.size(); ++i)
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          std::vector<Permutation> gens = current[i].elements();
          gens.insert(gens.end(), current[j].elements().begin(), current[j].elements().end());
          PermGroup join = generate(degree_, std::move(gens), cap);
          if (found.emplace(key(join), join).second) grew = true;
        }
    }
    std::vector<PermGroup> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return out;
  }

  std::vector<std::vector<Permutation>> conjugacy_classes() const {
    std::vector<std::vector<Permutation>> classes;
    std::unordered_set<Permutation, PermutationHash> assigned;
    const auto& gens = generators_.empty() ? elements_ : generators_;
    for (const auto& e : elements_) {
      if (assigned.count(e)) continue;
      std::vector<Permutation> cls{e};
      assigned.insert(e);
      std::deque<Permutation> frontier{e};
      while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
          Permutation conj = g * cur * g.inverse();
          if (assigned.insert(conj).second) {
            cls.push_back(conj);
            frontier.push_back(conj);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  std::size_t center_order() const {
    std::size_t c = 0;
    for (const auto& z : elements_) {
      bool central = true;
      for (const auto& g : generators_.empty() ? elements_ : generators_)
        if (!(z * g == g * z)) {
          central = false;
          break;
        }
      if (central) ++c;
    }
    return c;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

  // --- standard constructions -------------------------------------------

  static PermGroup trivial(int degree = 1) { return generate(degree, {}); }

  static PermGroup cyclic(int n) {
    if (n <= 0) throw ValidationError("cyclic order must be positive");
    if (n == 1) return trivial(1);
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return generate(n, {Permutation::from_cycles(n, {cyc})});
  }

  static PermGroup symmetric(int n) {
    if (n <= 1) return trivial(std::max(n, 1));
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return generate(n, {Permutation::from_cycles(n, {cyc}),
                        Permutation::from_cycles(n, {{0, 1}})});
  }

  static PermGroup alternating(int n) {
    if (n <= 2) return trivial(std::max(n, 1));
    std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
      // standard: (0 1 2) plus an n-cycle (n odd) or (n-1)-cycle on 1..n-1
      if (n % 2 == 1) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Permutation::from_cycles(n, {cyc}));
      } else {
        std::vector<int> cyc(n - 1);
        std::iota(cyc.begin(), cyc.end(), 1);
        gens.push_back(Permutation::from_cycles(n, {cyc}));
      }
    }
    return generate(n, std::move(gens), 400000);
  }

  static PermGroup dihedral(int n) {
    if (n < 3) throw ValidationError("dihedral requires n >= 3");
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return generate(n, {Permutation::from_cycles(n, {rot}), Permutation(std::move(refl))});
  }

  static PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const int deg = a.degree() + b.degree();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators().empty() ? a.elements() : a.generators()) {
      std::vector<int> im(deg);
      for (int i = 0; i < a.degree(); ++i) im[i] = g(i);
      for (int i = 0; i < b.degree(); ++i) im[a.degree() + i] = a.degree() + i;
      gens.push_back(Permutation(std::move(im)));
    }
    for (const auto& g : b.generators().empty() ? b.elements() : b.generators()) {
      std::vector<int> im(deg);
      for (int i = 0; i < a.degree(); ++i) im[i] = i;
      for (int i = 0; i < b.degree(); ++i) im[a.degree() + i] = a.degree() + g(i);
      gens.push_back(Permutation(std::move(im)));
    }
    return generate(deg, std::move(gens), 400000);
  }

 private:
  PermGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems)
      : degree_(degree), generators_(std::move(gens)), elements_(std::move(elems)) {}

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// The permutation action of a group on the left cosets of a normal subgroup,
/// together with the quotient map on elements. Point i of the quotient is the
/// coset whose canonical (minimal) representative is reps[i].
struct CosetAction {
  PermGroup image = PermGroup::trivial();  // the quotient as a permutation group
  std::vector<Permutation> reps;           // canonical coset representatives

  static Permutation canonical(const PermGroup& n, const Permutation& g) {
    // min of gN in element order
    Permutation best = g * n.elements()[0];
    for (const auto& x : n.elements()) {
      Permutation cand = g * x;
      if (cand < best) best = cand;
    }
    return best;
  }

  /// Coset index of an element of the parent group.
  std::size_t coset_of(const PermGroup& n, const Permutation& g) const {
    Permutation canon = canonical(n, g);
    auto it = std::lower_bound(reps.begin(), reps.end(), canon);
    if (it == reps.end() || !(*it == canon))
      throw PreconditionError("element not in the parent group");
    return static_cast<std::size_t>(it - reps.begin());
  }
};

/// Quotient by a normal subgroup, realized via the permutation action on
/// left cosets.
inline CosetAction quotient_by(const PermGroup& g, const PermGroup& n) {
  if (!g.is_normal_subgroup(n))
    throw PreconditionError("subgroup is not normal; quotient undefined");
  if (n.is_trivial()) {
    // the coset action is the regular representation of g; keep g's own
    // (isomorphic, smaller-degree) model instead
    CosetAction act;
    act.image = g;
    act.reps = g.elements();
    return act;
  }
  if (n.order() == g.order()) {
    CosetAction act;
    act.image = PermGroup::trivial();
    act.reps = {g.elements()[0]};
    return act;
  }
  std::vector<Permutation> reps;
  reps.reserve(g.order() / n.order());
  {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& e : g.elements()) {
      Permutation canon = CosetAction::canonical(n, e);
      if (seen.insert(canon).second) reps.push_back(canon);
    }
  }
  std::sort(reps.begin(), reps.end());
  const int qdeg = static_cast<int>(reps.size());
  auto coset_index = [&](const Permutation& p) {
    Permutation canon = CosetAction::canonical(n, p);
    auto it = std::lower_bound(reps.begin(), reps.end(), canon);
    return static_cast<int>(it - reps.begin());
  };
  std::vector<Permutation> qgens;
  for (const auto& gen : g.generators().empty() ? g.elements() : g.generators()) {
    std::vector<int> im(static_cast<std::size_t>(qdeg));
    for (int i = 0; i < qdeg; ++i)
      im[static_cast<std::size_t>(i)] = coset_index(gen * reps[static_cast<std::size_t>(i)]);
    qgens.push_back(Permutation(std::move(im)));
  }
  CosetAction act;
  act.image = PermGroup::generate(qdeg, std::move(qgens));
  act.reps = std::move(reps);
  return act;
}

/// Report from checking the two extension lemmas on a concrete 1 → N → G → Q → 1.
struct ExtensionReport {
  std::size_t group_order = 0, kernel_order = 0, quotient_order = 0;
  bool kernel_perfect = false, quotient_perfect = false, group_perfect = false;
  bool kernel_hypo = false, quotient_hypo = false, group_hypo = false;
  bool perfect_lemma_applicable = false;  // N and G/N perfect
  bool perfect_lemma_holds = true;        // then G perfect
  bool hypo_lemma_applicable = false;     // N and G/N hypo-Abelian
  bool hypo_lemma_holds = true;           // then G hypo-Abelian
  bool all_ok() const { return perfect_lemma_holds && hypo_lemma_holds; }
};

/// Check "perfect-by-perfect is perfect" and "hypo-by-hypo is hypo-Abelian"
/// on g with normal subgroup n; the quotient is the coset action image.
inline ExtensionReport check_extension_lemmas(const PermGroup& g, const PermGroup& n) {
  if (!g.is_normal_subgroup(n))
    throw PreconditionError("extension check requires a normal subgroup");
  auto act = quotient_by(g, n);
  ExtensionReport r;
  r.group_order = g.order();
  r.kernel_order = n.order();
  r.quotient_order = act.image.order();
  r.kernel_perfect = n.is_perfect();
  r.quotient_perfect = act.image.is_perfect();
  r.group_perfect = g.is_perfect();
  r.kernel_hypo = n.is_hypo_abelian();
  r.quotient_hypo = act.image.is_hypo_abelian();
  r.group_hypo = g.is_hypo_abelian();
  r.perfect_lemma_applicable = r.kernel_perfect && r.quotient_perfect;
  if (r.perfect_lemma_applicable) r.perfect_lemma_holds = r.group_perfect;
  r.hypo_lemma_applicable = r.kernel_hypo && r.quotient_hypo;
  if (r.hypo_lemma_applicable) r.hypo_lemma_holds = r.group_hypo;
  return r;
}

/// Kernel of the coset-action quotient map g → g/n, enumerated directly.
inline PermGroup quotient_kernel(const PermGroup& g, const PermGroup& n) {
  auto act = quotient_by(g, n);
  const std::size_t id_coset = act.coset_of(n, Permutation::identity(g.degree()));
  std::vector<Permutation> ker;
  for (const auto& e : g.elements())
    if (act.coset_of(n, e) == id_coset) ker.push_back(e);
  return PermGroup::generate(g.degree(), std::move(ker));
}

// --- brute-force isomorphism test for small groups -------------------------

namespace detail {

/// Greedy small generating set of g.
inline std::vector<Permutation> small_generating_set(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermGroup sub = PermGroup::trivial(g.degree());
  // try highest-order elements first; tends to minimize the set
  std::vector<Permutation> byorder = g.elements();
  std::stable_sort(byorder.begin(), byorder.end(),
                   [](const Permutation& a, const Permutation& b) {
                     return a.order() > b.order();
                   });
  for (const auto& e : byorder) {
    if (sub.order() == g.order()) break;
    if (sub.contains(e)) continue;
    std::vector<Permutation> trial = gens;
    trial.push_back(e);
    PermGroup bigger = PermGroup::generate(g.degree(), trial);
    if (bigger.order() > sub.order()) {
      gens = std::move(trial);
      sub = std::move(bigger);
    }
  }
  return gens;
}

/// Try to extend gen ↦ image to a full homomorphism by BFS replay; returns
/// the image set size if consistent (an isomorphism iff == |a|), 0 otherwise.
inline bool replay_is_isomorphism(const PermGroup& a, const std::vector<Permutation>& agens,
                                  const PermGroup& b, const std::vector<Permutation>& bimgs) {
  std::unordered_map<Permutation, Permutation, PermutationHash> img;
  const Permutation ida = Permutation::identity(a.degree());
  const Permutation idb = Permutation::identity(b.degree());
  img.emplace(ida, idb);
  std::deque<Permutation> frontier{ida};
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    const Permutation curimg = img.at(cur);
    for (std::size_t k = 0; k < agens.size(); ++k) {
      Permutation nxt = cur * agens[k];
      Permutation nxtimg = curimg * bimgs[k];
      auto it = img.find(nxt);
      if (it == img.end()) {
        img.emplace(nxt, nxtimg);
        frontier.push_back(nxt);
      } else if (!(it->second == nxtimg)) {
        return false;  // not a well-defined homomorphism
      }
    }
  }
  if (img.size() != a.order()) return false;
  std::unordered_set<Permutation, PermutationHash> range;
  for (auto& [k, v] : img) range.insert(v);
  return range.size() == a.order();
}

}  // namespace detail

/// Invariant fingerprint cheap enough to prescreen isomorphism.
inline std::string group_fingerprint(const PermGroup& g) {
  std::map<int, int> order_profile;
  for (const auto& e : g.elements()) order_profile[e.order()]++;
  std::string s = "o" + std::to_string(g.order()) + ";z" + std::to_string(g.center_order());
  s += ";d";
  for (const auto& t : g.derived_series()) s += std::to_string(t.order()) + ",";
  s += ";p";
  for (auto& [o, c] : order_profile) s += std::to_string(o) + ":" + std::to_string(c) + ",";
  s += ";c";
  std::map<std::size_t, int> class_profile;
  for (const auto& cls : g.conjugacy_classes()) class_profile[cls.size()]++;
  for (auto& [sz, c] : class_profile) s += std::to_string(sz) + ":" + std::to_string(c) + ",";
  return s;
}

/// Brute-force isomorphism test, intended for orders ≤ a few hundred.
inline bool are_isomorphic(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  if (group_fingerprint(a) != group_fingerprint(b)) return false;
  std::vector<Permutation> agens = detail::small_generating_set(a);
  if (agens.empty()) return true;  // both trivial
  // candidate images per generator: elements of b of matching order
  std::vector<std::vector<Permutation>> cands;
  for (const auto& g : agens) {
    std::vector<Permutation> c;
    const int o = g.order();
    for (const auto& e : b.elements())
      if (e.order() == o) c.push_back(e);
    if (c.empty()) return false;
    cands.push_back(std::move(c));
  }
  std::vector<Permutation> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == agens.size())
      return detail::replay_is_isomorphism(a, agens, b, chosen);
    for (const auto& c : cands[k]) {
      chosen.push_back(c);
      if (rec(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace collar
