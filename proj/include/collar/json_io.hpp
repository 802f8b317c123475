#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "collar/chain_complex.hpp"
#include "collar/free_product.hpp"
#include "collar/kernel_split.hpp"
#include "collar/perm_group.hpp"
#include "collar/presentation.hpp"
#include "collar/tower.hpp"
#include "collar/tree_pair.hpp"

namespace collar {

using Json = nlohmann::json;

// --- permutations -----------------------------------------------------------

inline Json to_json(const Permutation& p) { return Json(p.images()); }

inline Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("permutation must be a JSON array of images");
  return Permutation(j.get<std::vector<int>>());
}

inline Json to_json(const PermGroup& g) {
  Json out;
  out["degree"] = g.degree();
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  out["generators"] = gens;
  return out;
}

inline PermGroup perm_group_from_json(const Json& j, std::size_t cap = kDefaultClosureCap) {
  if (!j.contains("degree") || !j.contains("generators"))
    throw ValidationError("group JSON needs degree and generators");
  std::vector<Permutation> gens;
  for (const auto& p : j.at("generators")) gens.push_back(permutation_from_json(p));
  return PermGroup::generate(j.at("degree").get<int>(), std::move(gens), cap);
}

// --- Thompson's group V -------------------------------------------------------

inline Json to_json(const TreePair& t) {
  Json out;
  out["domain"] = t.domain().to_bracket();
  out["range"] = t.range().to_bracket();
  out["perm"] = t.perm();
  return out;
}

inline TreePair tree_pair_from_json(const Json& j) {
  if (!j.contains("domain") || !j.contains("range") || !j.contains("perm"))
    throw ValidationError("tree pair JSON needs domain, range, perm");
  return TreePair(BinTree::from_bracket(j.at("domain").get<std::string>()),
                  BinTree::from_bracket(j.at("range").get<std::string>()),
                  j.at("perm").get<std::vector<int>>());
}

// --- free product -------------------------------------------------------------

inline Json to_json(const FPElement& w) {
  Json out = Json::array();
  for (const auto& s : w.syllables()) {
    Json js;
    js["factor"] = s.factor;
    js["element"] = to_json(s.element);
    out.push_back(js);
  }
  return out;
}

inline FPElement fp_element_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("free product word must be a JSON array");
  std::vector<Syllable> sylls;
  for (const auto& s : j)
    sylls.push_back({s.at("factor").get<int>(), tree_pair_from_json(s.at("element"))});
  return FPElement(std::move(sylls));
}

inline Json to_json(const TupleElement& t) {
  Json out = Json::array();
  for (const auto& c : t.components) out.push_back(to_json(c));
  return out;
}

inline TupleElement tuple_from_json(const Json& j) {
  TupleElement t;
  for (const auto& c : j) t.components.push_back(fp_element_from_json(c));
  return t;
}

// --- presentations -------------------------------------------------------------

inline Json to_json(const GenWord& w) {
  Json out = Json::array();
  for (const auto& l : w.letters()) out.push_back(Json::array({l.gen, l.exp}));
  return out;
}

inline GenWord gen_word_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("word must be a JSON array of [gen, exp] pairs");
  std::vector<Letter> ls;
  for (const auto& l : j) ls.push_back(Letter{l.at(0).get<std::string>(), l.at(1).get<int>()});
  return GenWord(std::move(ls));
}

inline Json to_json(const Presentation& p) {
  Json out;
  out["generators"] = p.generators;
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(to_json(r));
  out["relators"] = rels;
  return out;
}

inline Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relators")) p.relators.push_back(gen_word_from_json(r));
  p.validate();
  return p;
}

inline Json to_json(const SemidirectData& sd) {
  Json out;
  out["kgens"] = sd.k_gens;
  out["qgens"] = sd.q_gens;
  Json act = Json::object(), inv = Json::object();
  for (const auto& [q, m] : sd.action) {
    Json row = Json::object();
    for (const auto& [k, w] : m) row[k] = to_json(w);
    act[q] = row;
  }
  for (const auto& [q, m] : sd.inverse_action) {
    Json row = Json::object();
    for (const auto& [k, w] : m) row[k] = to_json(w);
    inv[q] = row;
  }
  out["action"] = act;
  out["inverse_action"] = inv;
  return out;
}

inline SemidirectData semidirect_from_json(const Json& j) {
  SemidirectData sd;
  sd.k_gens = j.at("kgens").get<std::vector<std::string>>();
  sd.q_gens = j.at("qgens").get<std::vector<std::string>>();
  for (const auto& [q, row] : j.at("action").items())
    for (const auto& [k, w] : row.items()) sd.action[q][k] = gen_word_from_json(w);
  if (j.contains("inverse_action"))
    for (const auto& [q, row] : j.at("inverse_action").items())
      for (const auto& [k, w] : row.items()) sd.inverse_action[q][k] = gen_word_from_json(w);
  sd.validate();
  return sd;
}

// --- tower ----------------------------------------------------------------------

inline Json to_json(const PrimeSeq& s) { return Json(s.primes()); }

inline PrimeSeq prime_seq_from_json(const Json& j) {
  return PrimeSeq(j.get<std::vector<int>>());
}

inline Json to_json(const TowerElement& e) {
  Json out;
  out["tuple"] = to_json(e.tuple);
  out["z"] = e.z;
  return out;
}

inline TowerElement tower_element_from_json(const Json& j) {
  TowerElement e;
  e.tuple = tuple_from_json(j.at("tuple"));
  e.z = j.at("z").get<long>();
  return e;
}

// --- group ring -------------------------------------------------------------------

inline Json to_json(const FiniteGroup& g) {
  Json out;
  out["table"] = g.table();
  return out;
}

inline GroupPtr finite_group_from_json(const Json& j) {
  return std::make_shared<const FiniteGroup>(j.at("table").get<std::vector<std::vector<int>>>());
}

inline Json to_json(const GroupRingElem& e) {
  Json out = Json::array();
  for (const auto& c : e.coeffs()) out.push_back(c.str());
  return out;
}

inline Json to_json(const GRMatrix& m) {
  Json out;
  out["group"] = to_json(*m.group());
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(row);
  }
  out["entries"] = entries;
  return out;
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  return BigInt(j.get<std::string>());
}

inline GRMatrix gr_matrix_from_json(const Json& j) {
  GroupPtr g = finite_group_from_json(j.at("group"));
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  GRMatrix m(g, rows, cols);
  const Json& entries = j.at("entries");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<BigInt> coeffs;
      for (const auto& v : entries.at(r).at(c)) coeffs.push_back(bigint_from_json(v));
      m(r, c) = GroupRingElem(g, std::move(coeffs));
    }
  return m;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("integer matrix must be a nonempty array");
  const std::size_t rows = j.size();
  const std::size_t cols = j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw ValidationError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = bigint_from_json(j.at(r).at(c));
  }
  return m;
}

// --- reports ---------------------------------------------------------------------

inline Json to_json(const ExtensionReport& r) {
  Json out;
  out["group_order"] = r.group_order;
  out["kernel_order"] = r.kernel_order;
  out["quotient_order"] = r.quotient_order;
  out["kernel_perfect"] = r.kernel_perfect;
  out["quotient_perfect"] = r.quotient_perfect;
  out["group_perfect"] = r.group_perfect;
  out["kernel_hypo_abelian"] = r.kernel_hypo;
  out["quotient_hypo_abelian"] = r.quotient_hypo;
  out["group_hypo_abelian"] = r.group_hypo;
  out["perfect_lemma_applicable"] = r.perfect_lemma_applicable;
  out["perfect_lemma_holds"] = r.perfect_lemma_holds;
  out["hypo_lemma_applicable"] = r.hypo_lemma_applicable;
  out["hypo_lemma_holds"] = r.hypo_lemma_holds;
  return out;
}

inline Json to_json(const ChainReport& r) {
  Json out;
  out["boundaries_compose_to_zero"] = r.boundaries_compose_to_zero;
  out["acyclic"] = r.acyclic;
  Json degrees = Json::array();
  for (const auto& h : r.homology) {
    Json d;
    d["kernel_rank"] = h.kernel_rank;
    d["image_rank"] = h.image_rank;
    d["free_rank"] = h.free_rank;
    Json tors = Json::array();
    for (const auto& t : h.torsion) tors.push_back(t.str());
    d["torsion"] = tors;
    degrees.push_back(d);
  }
  out["homology"] = degrees;
  return out;
}

inline Json to_json(const DualReport& r) {
  Json out;
  out["section_found"] = r.section_found;
  out["direct_sum"] = r.direct_sum;
  out["delta2_injective"] = r.delta2_injective;
  out["delta3_surjective"] = r.delta3_surjective;
  out["image_equals_kernel"] = r.image_equals_kernel;
  out["ok"] = r.ok();
  return out;
}

inline Json to_json(const KernelSplitVerification& v) {
  Json out;
  out["phi_psi_identity"] = v.phi_psi_identity;
  out["phi_lands_in_kernel"] = v.phi_lands_in_kernel;
  out["psi_lands_in_kernel_a"] = v.psi_lands_in_kernel_a;
  out["kernel_rank"] = v.kernel_rank;
  out["ok"] = v.ok();
  return out;
}

inline Json to_json(const StraighteningPattern& p) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : p.nontrivial) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rows.push_back(r);
  }
  out["pattern"] = rows;
  out["classification"] = to_string(p.shape);
  return out;
}

}  // namespace collar
