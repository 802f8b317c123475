#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "collar/gen_word.hpp"

namespace collar {

/// A finite group presentation: ordered generator names plus relator words.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<GenWord> relators;

  void validate() const {
    std::set<std::string> names(generators.begin(), generators.end());
    if (names.size() != generators.size())
      throw ValidationError("duplicate generator names");
    for (const auto& r : relators)
      for (const auto& l : r.letters())
        if (!names.count(l.gen))
          throw ValidationError("relator mentions undeclared generator: " + l.gen);
  }

  bool has_generator(const std::string& g) const {
    return std::find(generators.begin(), generators.end(), g) != generators.end();
  }
};

/// Data for K ⋊ Q: disjoint generator name lists and the action
/// ψ(q-gen)(k-gen) as a word over the k-gens. The inverse action ψ(q)⁻¹ must
/// be supplied per pair before inverse q-letters can cross k-letters in
/// rewriting (the paper's proof only treats positive letters).
struct SemidirectData {
  std::vector<std::string> k_gens;
  std::vector<std::string> q_gens;
  std::map<std::string, std::map<std::string, GenWord>> action;
  std::map<std::string, std::map<std::string, GenWord>> inverse_action;

  bool is_k(const std::string& g) const {
    return std::find(k_gens.begin(), k_gens.end(), g) != k_gens.end();
  }
  bool is_q(const std::string& g) const {
    return std::find(q_gens.begin(), q_gens.end(), g) != q_gens.end();
  }

  const GenWord& act(const std::string& q, const std::string& k) const {
    auto qa = action.find(q);
    if (qa == action.end() || !qa->second.count(k))
      throw ValidationError("missing action entry for (" + q + ", " + k + ")");
    return qa->second.at(k);
  }

  const GenWord& act_inverse(const std::string& q, const std::string& k) const {
    auto qa = inverse_action.find(q);
    if (qa == inverse_action.end() || !qa->second.count(k))
      throw PreconditionError("action not invertible: inverse q-letter must cross (" + q +
                              ", " + k + ") but no inverse action was supplied");
    return qa->second.at(k);
  }

  void validate() const {
    std::set<std::string> ks(k_gens.begin(), k_gens.end());
    std::set<std::string> qs(q_gens.begin(), q_gens.end());
    if (ks.size() != k_gens.size() || qs.size() != q_gens.size())
      throw ValidationError("duplicate generator names in semidirect data");
    for (const auto& k : k_gens)
      if (qs.count(k)) throw ValidationError("k and q generator names must be disjoint");
    for (const auto& [q, m] : action) {
      if (!qs.count(q)) throw ValidationError("action keyed by unknown q-generator " + q);
      for (const auto& [k, w] : m) {
        if (!ks.count(k)) throw ValidationError("action keyed by unknown k-generator " + k);
        for (const auto& l : w.letters())
          if (!ks.count(l.gen))
            throw ValidationError("action word leaves the k-generators: " + l.gen);
      }
    }
  }
};

/// Presentation of K ⋊ Q from presentations of the pieces: generators are the
/// union, relators are relK ∪ relQ plus one slide relator
/// β α β⁻¹ (ψ(β)(α))⁻¹ per (q-gen, k-gen) pair.
inline Presentation semidirect_presentation(const Presentation& pres_k,
                                            const Presentation& pres_q,
                                            const SemidirectData& sd) {
  pres_k.validate();
  pres_q.validate();
  sd.validate();
  if (pres_k.generators != sd.k_gens || pres_q.generators != sd.q_gens)
    throw ValidationError("semidirect data does not match the given presentations");
  Presentation out;
  out.generators = sd.k_gens;
  out.generators.insert(out.generators.end(), sd.q_gens.begin(), sd.q_gens.end());
  out.relators = pres_k.relators;
  out.relators.insert(out.relators.end(), pres_q.relators.begin(), pres_q.relators.end());
  for (const auto& q : sd.q_gens)
    for (const auto& k : sd.k_gens) {
      GenWord slide = GenWord::gen(q) * GenWord::gen(k) * GenWord::gen(q, -1) *
                      sd.act(q, k).inverse();
      out.relators.push_back(slide.free_reduce());
    }
  out.validate();
  return out;
}

/// Normal form for words over kGens ∪ qGens: all k-letters first, then all
/// q-letters. Implements the rewriting rule β·α → ψ(β)(α)·β (and
/// β⁻¹·α → ψ(β)⁻¹(α)·β⁻¹) by a single right-to-left pass, so it terminates on
/// every input. The q-part is the freely reduced q-subsequence of the input,
/// i.e. the image under the retraction killing the k-generators.
inline GenWord normal_form(const GenWord& w, const SemidirectData& sd) {
  GenWord kpart, qpart;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const Letter& l = *it;
    if (sd.is_k(l.gen)) {
      kpart = (GenWord::gen(l.gen, l.exp) * kpart).free_reduce();
    } else if (sd.is_q(l.gen)) {
      // push the q-letter through the accumulated k-part
      std::vector<Letter> rewritten;
      for (const auto& kl : kpart.letters()) {
        const GenWord& img = l.exp == 1 ? sd.act(l.gen, kl.gen) : sd.act_inverse(l.gen, kl.gen);
        GenWord piece = kl.exp == 1 ? img : img.inverse();
        rewritten.insert(rewritten.end(), piece.letters().begin(), piece.letters().end());
      }
      kpart = GenWord(std::move(rewritten)).free_reduce();
      qpart = (GenWord::gen(l.gen, l.exp) * qpart).free_reduce();
    } else {
      throw ValidationError("word mentions a generator outside kGens ∪ qGens: " + l.gen);
    }
  }
  return kpart * qpart;
}

// --- generator-image homomorphism verification ------------------------------

/// Result of verifying a generator-image map against a presentation.
template <typename Element>
struct HomCheck {
  bool verified = false;
  std::optional<GenWord> failing_relator;
  std::optional<Element> failing_value;
};

/// Evaluate a word in a concrete group model. The model supplies
/// multiply/inverse/identity and an identity test.
template <typename Model>
typename Model::Element evaluate_word(const Model& m, const GenWord& w,
                                      const std::map<std::string, typename Model::Element>& images) {
  typename Model::Element acc = m.identity();
  for (const auto& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw ValidationError("unmapped generator: " + l.gen);
    acc = m.multiply(acc, l.exp == 1 ? it->second : m.inverse(it->second));
  }
  return acc;
}

/// Every relator must evaluate to the identity of the target model; the first
/// failing relator is reported otherwise.
template <typename Model>
HomCheck<typename Model::Element> verify_hom(
    const Presentation& pres, const Model& m,
    const std::map<std::string, typename Model::Element>& images) {
  pres.validate();
  for (const auto& g : pres.generators)
    if (!images.count(g)) throw ValidationError("unmapped generator: " + g);
  HomCheck<typename Model::Element> out;
  for (const auto& r : pres.relators) {
    auto v = evaluate_word(m, r, images);
    if (!m.is_identity(v)) {
      out.failing_relator = r;
      out.failing_value = v;
      return out;
    }
  }
  out.verified = true;
  return out;
}

// --- the Chapter-5 tower presentations ---------------------------------------

/// G_j = ⟨A₀, t₁..t_j | R₀, t_i⁻¹[t_i,t_{i-1}] (1 ≤ i ≤ j)⟩, with
/// [a,b] = a⁻¹b⁻¹ab and t_0 the designated infinite-order generator of G₀.
inline Presentation gt_tower_presentation(const Presentation& pres0, const std::string& t0,
                                          int j) {
  pres0.validate();
  if (!pres0.has_generator(t0)) throw ValidationError("unknown base generator: " + t0);
  if (j < 1) throw ValidationError("tower level must be >= 1");
  Presentation out = pres0;
  std::string prev = t0;
  for (int i = 1; i <= j; ++i) {
    std::string ti = "t" + std::to_string(i);
    if (out.has_generator(ti))
      throw ValidationError("tower generator name collides with existing generator: " + ti);
    out.generators.push_back(ti);
    // t_i = [t_i, t_{i-1}] stored as the freely reduced relator
    // t_i⁻¹ t_i⁻¹ t_{i-1}⁻¹ t_i t_{i-1}
    GenWord rel = GenWord::gen(ti, -1) * GenWord::gen(ti, -1) * GenWord::gen(prev, -1) *
                  GenWord::gen(ti) * GenWord::gen(prev);
    out.relators.push_back(rel.free_reduce());
    prev = ti;
  }
  out.validate();
  return out;
}

/// The bonding epimorphism r_j: G_j → G_{j-1} (t_j ↦ empty word, all other
/// generators fixed), with a symbolic verification: each relator's image must
/// freely reduce to the empty word or coincide with a relator of the target.
struct TowerEpi {
  std::map<std::string, GenWord> images;
  bool verified = false;
  std::optional<GenWord> failing_relator;
};

inline TowerEpi gt_tower_epi(const Presentation& pres0, const std::string& t0, int j) {
  if (j < 1) throw ValidationError("tower level must be >= 1");
  Presentation gj = gt_tower_presentation(pres0, t0, j);
  Presentation gjm1 = j == 1 ? pres0 : gt_tower_presentation(pres0, t0, j - 1);
  TowerEpi out;
  const std::string tj = "t" + std::to_string(j);
  for (const auto& g : gj.generators)
    out.images[g] = g == tj ? GenWord() : GenWord::gen(g);
  std::vector<GenWord> target_relators;
  for (const auto& r : gjm1.relators) target_relators.push_back(r.free_reduce());
  out.verified = true;
  for (const auto& r : gj.relators) {
    GenWord img = r.substitute(out.images).free_reduce();
    if (img.empty()) continue;
    if (std::find(target_relators.begin(), target_relators.end(), img) != target_relators.end())
      continue;
    out.verified = false;
    out.failing_relator = r;
    break;
  }
  return out;
}

/// Composite of generator-image maps: apply `second` after `first`.
inline std::map<std::string, GenWord> compose_images(
    const std::map<std::string, GenWord>& first, const std::map<std::string, GenWord>& second) {
  std::map<std::string, GenWord> out;
  for (const auto& [g, w] : first) out[g] = w.substitute(second).free_reduce();
  return out;
}

}  // namespace collar
