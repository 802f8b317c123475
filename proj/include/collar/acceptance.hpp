#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "collar/bs12.hpp"
#include "collar/chain_complex.hpp"
#include "collar/kernel_split.hpp"
#include "collar/small_groups.hpp"
#include "collar/tower.hpp"

namespace collar {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance {

namespace detail {

inline void require(bool cond, const std::string& msg, std::string& failure) {
  if (!cond && failure.empty()) failure = msg;
}

/// All strictly increasing prime sequences of length in [1, max_len] over the
/// given prime pool.
inline std::vector<PrimeSeq> all_sequences(const std::vector<int>& pool, std::size_t max_len) {
  std::vector<PrimeSeq> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) out.push_back(PrimeSeq(cur));
    if (cur.size() == max_len) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Neither prefix is a weak prefix of the other.
inline bool incompatible(const PrimeSeq& a, const PrimeSeq& b) {
  const std::size_t l = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < l; ++i)
    if (a.at(i) != b.at(i)) return true;
  return false;
}

/// Random unimodular-over-ZQ square block with small coefficients.
inline GRMatrix random_unimodular(Rng& rng, const GroupPtr& g, std::size_t n) {
  GRMatrix u = GRMatrix::identity(g, n);
  const std::size_t ops = n <= 1 ? 1 : 2;
  for (std::size_t t = 0; t < ops && n > 1; ++t) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    int ge = static_cast<int>(rng.below(g->order()));
    BigInt c = rng.flip() ? 1 : -1;
    // row_i += (c·ge) row_j
    for (std::size_t col = 0; col < n; ++col)
      u(i, col) = u(i, col) + GroupRingElem::basis(g, ge, c) * u(j, col);
  }
  return u;
}

inline GroupRingElem random_ring_elem(Rng& rng, const GroupPtr& g, int max_terms = 2,
                                      int max_coeff = 2) {
  GroupRingElem e = GroupRingElem::zero(g);
  const int terms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms) + 1));
  for (int t = 0; t < terms; ++t) {
    long c = rng.range(-max_coeff, max_coeff);
    if (c == 0) continue;
    e.coeff(rng.below(g->order())) += c;
  }
  return e;
}

/// Θ = [Θ|_A | Θ|_B] with Θ|_A = [U | R] (U unimodular) under a random column
/// permutation, so Θ|_A is surjective by construction.
inline std::pair<GRMatrix, std::size_t> random_split_instance(Rng& rng, const GroupPtr& g,
                                                              std::size_t rc, std::size_t extra_a,
                                                              std::size_t rb) {
  const std::size_t ra = rc + extra_a;
  GRMatrix u = random_unimodular(rng, g, rc);
  GRMatrix a(g, rc, ra);
  std::vector<std::size_t> cols(ra);
  for (std::size_t i = 0; i < ra; ++i) cols[i] = i;
  for (std::size_t i = ra; i > 1; --i) std::swap(cols[i - 1], cols[rng.below(i)]);
  for (std::size_t c = 0; c < ra; ++c) {
    if (cols[c] < rc) {
      for (std::size_t r = 0; r < rc; ++r) a(r, c) = u(r, cols[c]);
    } else {
      for (std::size_t r = 0; r < rc; ++r) a(r, c) = random_ring_elem(rng, g);
    }
  }
  GRMatrix theta(g, rc, ra + rb);
  for (std::size_t r = 0; r < rc; ++r) {
    for (std::size_t c = 0; c < ra; ++c) theta(r, c) = a(r, c);
    for (std::size_t c = 0; c < rb; ++c) theta(r, ra + c) = random_ring_elem(rng, g);
  }
  return {theta, ra};
}

inline std::vector<GroupPtr> standard_coefficient_groups() {
  return {std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)),
          std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3)),
          std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3())};
}

template <typename Fn>
CriterionResult timed(int index, const std::string& name, Fn&& body) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body(failure);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  r.pass = failure.empty();
  r.detail = failure;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

/// 1. Normal-form oracle equivalence on the tower presentations.
inline CriterionResult criterion_1(std::uint64_t seed = 0) {
  return detail::timed(1, "normal-form oracle equivalence (levels 1-3, 1000 words each)",
                       [&](std::string& failure) {
    const std::vector<std::vector<int>> levels = {{2}, {2, 3}, {2, 3, 5}};
    Rng rng(seed);
    for (const auto& primes : levels) {
      PrimeSeq seq(primes);
      TowerPresentationData data = tower_presentation_data(seq);
      std::vector<std::string> alphabet = data.sd.k_gens;
      alphabet.push_back(data.z_name);
      TowerGroupModel model{seq};
      for (int trial = 0; trial < 1000; ++trial) {
        GenWord w = random_gen_word(rng, alphabet, 30);
        TowerElement direct = evaluate_word(model, w, data.images);
        GenWord nf = normal_form(w, data.sd);
        TowerElement via_nf = evaluate_word(model, nf, data.images);
        detail::require(direct == via_nf, "normal form changed the element", failure);
        // shape: every k-letter precedes every q-letter
        bool seen_q = false;
        for (const auto& l : nf.letters()) {
          if (data.sd.is_q(l.gen)) seen_q = true;
          else detail::require(!seen_q, "normal form is not k-then-q shaped", failure);
        }
        detail::require(nf.exponent_sum(data.z_name) == w.exponent_sum(data.z_name),
                        "q-exponent sum not preserved", failure);
        if (!failure.empty()) return;
      }
    }
  });
}

/// 2. Torsion orders and the exact tuple-automorphism order for (2,3).
inline CriterionResult criterion_2(std::uint64_t /*seed*/ = 0) {
  return detail::timed(2, "torsion orders (first 8 primes) and tuple automorphism order 6",
                       [&](std::string& failure) {
    const int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    for (int p : primes) {
      auto ord = TreePair::element_of_order(p).order(p + 1);
      detail::require(ord.has_value() && *ord == p,
                      "element_of_order(" + std::to_string(p) + ") has wrong order", failure);
    }
    PrimeSeq seq({2, 3});
    OuterOrderResult r = outer_action_order(seq, default_order_witnesses(seq));
    detail::require(r.order == 6, "tuple automorphism order is not 6", failure);
    detail::require(r.ok(), "order certificate failed: " + r.diagnostic, failure);
  });
}

/// 3. Decision-procedure/oracle agreement over primes <= 29, lengths <= 4.
inline CriterionResult criterion_3(std::uint64_t seed = 0) {
  return detail::timed(3, "pro_distinct vs ladder_search sweep; iso/epi on equal pairs",
                       [&](std::string& failure) {
    const std::vector<int> pool = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<PrimeSeq> seqs = detail::all_sequences(pool, 4);
    for (const auto& a : seqs) {
      for (const auto& b : seqs) {
        const bool incompat = detail::incompatible(a, b);
        ProDistinctResult pd = pro_distinct(a, b);
        detail::require(pd.distinct == incompat, "pro_distinct disagrees with compatibility",
                        failure);
        LadderResult lr = ladder_search(a, b, std::min(a.length(), b.length()));
        detail::require(lr.found == !incompat,
                        "ladder_search disagrees with the combinatorial criterion", failure);
        if (incompat) {
          detail::require(pd.witness.has_value(), "missing witness prime", failure);
          if (pd.witness) {
            const int w = *pd.witness;
            const bool in_a = a.contains(w), in_b = b.contains(w);
            detail::require(in_a != in_b, "witness must lie in exactly one sequence", failure);
            const PrimeSeq& other = in_a ? b : a;
            detail::require(other.length() > 0 && w < other.at(other.length() - 1),
                            "witness does not block the other sequence's tail", failure);
          }
        }
        if (!failure.empty()) return;
      }
    }
    // equal pairs: explicit isomorphism-level maps, verified both ways
    for (const auto& a : seqs) {
      IsoResult iso = iso_decide(a, a);
      detail::require(iso.isomorphic, "iso_decide false on an equal pair", failure);
      BuildEpiResult fwd = build_epi(a, a, 60, seed);
      BuildEpiResult bwd = build_epi(a, a, 60, seed + 1);
      detail::require(fwd.exists && fwd.hom_verified && bwd.exists && bwd.hom_verified,
                      "identity-level epi failed verification", failure);
      if (!failure.empty()) return;
    }
  });
}

/// 4. Epi construction soundness and bonding/section identities.
inline CriterionResult criterion_4(std::uint64_t seed = 0) {
  return detail::timed(4, "build_epi on 50 subset pairs (500 pairs each); bonding∘section = id",
                       [&](std::string& failure) {
    Rng rng(seed);
    const std::vector<int> pool = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int inst = 0; inst < 50; ++inst) {
      // random source of length 2..4, random nonempty target subset
      std::size_t n = 2 + rng.below(3);
      std::vector<int> shuffled = pool;
      for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
      std::vector<int> av(shuffled.begin(), shuffled.begin() + static_cast<long>(n));
      std::sort(av.begin(), av.end());
      std::vector<int> bv;
      for (int p : av)
        if (rng.flip()) bv.push_back(p);
      if (bv.empty()) bv.push_back(av[0]);
      PrimeSeq a(av), b(bv);
      BuildEpiResult r = build_epi(a, b, 500, rng.next());
      detail::require(r.exists, "subset pair rejected", failure);
      detail::require(r.hom_verified && r.pairs_checked == 500,
                      "homomorphism law failed on a subset pair", failure);
      if (!failure.empty()) return;
    }
    PrimeSeq seq3({2, 3, 5});
    PrimeSeq seq2({2, 3});
    for (int i = 0; i < 1000; ++i) {
      TowerElement b = random_tower_element(rng, seq2);
      detail::require(bonding_map(section(b), seq3) == b, "bonding∘section != id", failure);
      if (!failure.empty()) return;
    }
  });
}

/// 5. Lemma-kernel splitting and the equivariant free-kernel lift.
inline CriterionResult criterion_5(std::uint64_t seed = 0) {
  return detail::timed(5, "kernel_split on 100 instances; equivariant lift rank on 50",
                       [&](std::string& failure) {
    Rng rng(seed);
    auto groups = detail::standard_coefficient_groups();
    for (int inst = 0; inst < 100; ++inst) {
      const GroupPtr& g = groups[static_cast<std::size_t>(inst) % groups.size()];
      std::size_t rc = 1 + rng.below(2);
      std::size_t extra = rng.below(2);
      std::size_t rb = 1 + rng.below(2);
      auto [theta, split] = detail::random_split_instance(rng, g, rc, extra, rb);
      KernelSplitResult r = kernel_split(theta, split);
      detail::require(r.verification.ok(),
                      "kernel_split verification failed on instance " + std::to_string(inst),
                      failure);
      if (!failure.empty()) return;
    }
    for (int inst = 0; inst < 50; ++inst) {
      const GroupPtr& g = groups[static_cast<std::size_t>(inst) % groups.size()];
      std::size_t rows = 1 + rng.below(3);
      std::size_t cols = 1 + rng.below(4);
      IntMatrix d(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) d(r, c) = rng.range(-3, 3);
      EquivariantLift lift = equivariant_kernel_lift(d, g);
      detail::require(lift.rank_equality,
                      "flattened kernel rank != |Q|·a on instance " + std::to_string(inst),
                      failure);
      detail::require(lift.independence && lift.generation,
                      "lift basis is not a free ZQ-basis on instance " + std::to_string(inst),
                      failure);
      if (!failure.empty()) return;
    }
  });
}

/// 6. Chain/cochain checks on kernel_split-derived complexes.
inline CriterionResult criterion_6(std::uint64_t seed = 0) {
  return detail::timed(6, "kernel_split-derived complexes: acyclicity and dual checks",
                       [&](std::string& failure) {
    Rng rng(seed);
    auto groups = detail::standard_coefficient_groups();
    for (int inst = 0; inst < 18; ++inst) {
      const GroupPtr& g = groups[static_cast<std::size_t>(inst) % groups.size()];
      // Θ|_A square unimodular so that ker(Θ) = φ(B) exactly
      std::size_t rc = 1 + rng.below(2);
      std::size_t rb = 1 + rng.below(2);
      auto [theta, split] = detail::random_split_instance(rng, g, rc, 0, rb);
      KernelSplitResult ks = kernel_split(theta, split);
      const std::size_t ra = split;
      GRMatrix d3(g, ra + rb, rb);
      for (std::size_t r = 0; r < ra; ++r)
        for (std::size_t c = 0; c < rb; ++c) d3(r, c) = -ks.split.alpha(r, c);
      for (std::size_t c = 0; c < rb; ++c) d3(ra + c, c) = GroupRingElem::one(g);
      ChainReport chain = chain_check({theta, d3});
      detail::require(chain.boundaries_compose_to_zero, "∂₂∂₃ != 0", failure);
      detail::require(chain.acyclic, "derived complex is not acyclic", failure);
      DualReport dual = cocompact_dual_check(theta, d3);
      detail::require(dual.ok(),
                      "dual checks failed (δ₂ injective / δ₃ surjective / exactness)", failure);
      if (!failure.empty()) return;
    }
  });
}

/// 7. Finite-group lemmas over the complete order ≤ 24 catalogue + A5, S5, A5xA5.
inline CriterionResult criterion_7(std::uint64_t /*seed*/ = 0) {
  return detail::timed(7, "finite-group lemmas on the fixture set (every normal subgroup)",
                       [&](std::string& failure) {
    std::vector<NamedGroup> fixtures = fixture_set();
    for (const auto& f : fixtures) {
      auto series = f.group.derived_series();
      for (std::size_t i = 1; i < series.size(); ++i)
        detail::require(series[i].order() < series[i - 1].order() &&
                            series[i].is_subgroup_of(series[i - 1]),
                        f.name + ": derived series is not strictly descending", failure);
      const PermGroup& core = series.back();
      detail::require(core.is_perfect(), f.name + ": series did not stabilize at a perfect group",
                      failure);
      detail::require(f.group.is_hypo_abelian() == core.is_trivial(),
                      f.name + ": hypo-Abelian <-> trivial perfect core failed", failure);
      for (const auto& n : f.group.normal_subgroups()) {
        ExtensionReport rep = check_extension_lemmas(f.group, n);
        detail::require(rep.perfect_lemma_holds,
                        f.name + ": perfect-by-perfect extension lemma failed", failure);
        detail::require(rep.hypo_lemma_holds,
                        f.name + ": hypo-by-hypo extension lemma failed", failure);
        if (!failure.empty()) return;
      }
      if (!failure.empty()) return;
    }
  });
}

/// 8. The BS(1,2) matrix model and the tower epimorphisms.
inline CriterionResult criterion_8(std::uint64_t seed = 0) {
  return detail::timed(8, "BS(1,2) relator/projection; gt_tower_epi images reduce to empty",
                       [&](std::string& failure) {
    const BSElement t = BSElement::t(), x = BSElement::x();
    detail::require(t * (x * x) * t.inverse() == x, "relator x = t x² t⁻¹ fails in the model",
                    failure);
    BSGroupModel model;
    std::map<std::string, BSElement> images{{"t", t}, {"x", x}};
    auto check = verify_hom(bs12_presentation(), model, images);
    detail::require(check.verified, "BS(1,2) presentation does not verify in the model", failure);
    // bs_project: homomorphism, surjective, kernel exactly {k = 0}
    Rng rng(seed);
    auto random_bs = [&rng, &t, &x]() {
      BSElement e = BSElement::identity();
      const int len = 1 + static_cast<int>(rng.below(8));
      for (int i = 0; i < len; ++i) {
        BSElement g = rng.flip() ? t : x;
        if (rng.flip()) g = g.inverse();
        e = e * g;
      }
      return e;
    };
    for (int i = 0; i < 2000; ++i) {
      BSElement a = random_bs(), b = random_bs();
      detail::require(bs_project(a * b) == bs_project(a) + bs_project(b),
                      "bs_project is not a homomorphism", failure);
      BSElement k = a * BSElement{-bs_project(a), Dyadic()};
      detail::require(bs_project(k) == 0, "projection-killed element left the kernel", failure);
      if (!failure.empty()) return;
    }
    for (long k = -5; k <= 5; ++k)
      detail::require(bs_project(BSElement{k, Dyadic()}) == k, "bs_project misses an integer",
                      failure);
    // tower epimorphisms: t_j-relator image freely reduces to the empty word
    Presentation g0;
    g0.generators = {"t0"};
    for (int j = 1; j <= 5; ++j) {
      TowerEpi epi = gt_tower_epi(g0, "t0", j);
      detail::require(epi.verified, "tower epi relator verification failed at level " +
                                        std::to_string(j), failure);
      Presentation gj = gt_tower_presentation(g0, "t0", j);
      GenWord img = gj.relators.back().substitute(epi.images).free_reduce();
      detail::require(img.empty(), "t_j-relator image does not reduce to the empty word",
                      failure);
    }
  });
}

/// 9. Randomized group-axiom suites for V and the free product.
inline CriterionResult criterion_9(std::uint64_t seed = 0) {
  return detail::timed(9, "V and free-product axioms; reduction and phi_u properties",
                       [&](std::string& failure) {
    Rng rng(seed);
    const TreePair id = TreePair::identity();
    for (int i = 0; i < 1000; ++i) {
      TreePair a = random_tree_pair(rng), b = random_tree_pair(rng), c = random_tree_pair(rng);
      detail::require((a * b) * c == a * (b * c), "V associativity failed", failure);
      detail::require(a * id == a && id * a == a, "V identity law failed", failure);
      detail::require((a * a.inverse()).is_identity() && (a.inverse() * a).is_identity(),
                      "V inverse law failed", failure);
      detail::require(a.inverse().inverse() == a, "V double inverse failed", failure);
      if (!failure.empty()) return;
    }
    for (int i = 0; i < 1000; ++i) {
      // idempotence and confluence of reduction on raw pairs
      const int n = 2 + static_cast<int>(rng.below(6));
      TreePair raw(random_tree(rng, n), random_tree(rng, n),
                   random_permutation(rng, static_cast<std::size_t>(n)));
      TreePair r1 = raw.reduce();
      detail::require(r1.reduce() == r1, "reduction is not idempotent", failure);
      TreePair r2 = raw.reduce_with([&rng](std::size_t k) { return rng.below(k); });
      detail::require(r1 == r2, "reduction is not confluent", failure);
      if (!failure.empty()) return;
    }
    const TreePair u = TreePair::element_of_order(3);
    for (int i = 0; i < 1000; ++i) {
      FPElement a = random_fp_element(rng), b = random_fp_element(rng);
      FPElement c = random_fp_element(rng);
      detail::require((a * b) * c == a * (b * c), "free product associativity failed", failure);
      detail::require(a * FPElement::empty_word() == a, "free product identity law failed",
                      failure);
      detail::require((a * a.inverse()).is_empty(), "free product inverse law failed", failure);
      detail::require(partial_conjugation(u, a * b) ==
                          partial_conjugation(u, a) * partial_conjugation(u, b),
                      "phi_u is not a homomorphism", failure);
      detail::require(partial_conjugation(u.inverse(), partial_conjugation(u, a)) == a,
                      "phi_u ∘ phi_{u^{-1}} != id", failure);
      if (!failure.empty()) return;
    }
    for (int i = 0; i < 200; ++i) {
      // phi_u fixes pure-P1 words
      std::vector<Syllable> sylls;
      const int len = static_cast<int>(rng.below(4));
      for (int s = 0; s < len; ++s)
        sylls.push_back({1, random_nonidentity_tree_pair(rng)});
      FPElement p1(std::move(sylls));
      detail::require(partial_conjugation(u, p1) == p1, "phi_u moved a pure-P1 word", failure);
      if (!failure.empty()) return;
    }
  });
}

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0) {
  return {criterion_1(seed), criterion_2(seed), criterion_3(seed),
          criterion_4(seed), criterion_5(seed), criterion_6(seed),
          criterion_7(seed), criterion_8(seed), criterion_9(seed)};
}

}  // namespace acceptance
}  // namespace collar
