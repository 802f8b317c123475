// collar — command-line front end for the collar-algebra library.
// Every verb reads/writes canonical JSON (sorted keys, integers only).
// Exit codes: 0 success/true, 1 decision false, 2 input error,
// 3 internal verification failure.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "collar/acceptance.hpp"
#include "collar/json_io.hpp"

namespace {

using collar::Json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

Json read_input(const std::string& path) {
  if (path.empty()) throw collar::ValidationError("this verb requires --input <file|->");
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw collar::ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

collar::PrimeSeq parse_seq(const std::string& csv) {
  std::vector<int> primes;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    primes.push_back(std::stoi(tok));
  }
  return collar::PrimeSeq(primes);
}

struct Options {
  std::string input;
  std::string seq_a, seq_b;
  std::uint64_t seed = 0;
  long cap = 20000;
  long order_cap = 64;
  int level = 1;
  long depth = -1;
  std::size_t verify_pairs = 500;
};

int run_perm(const std::string& verb, const Options& opt) {
  Json in = read_input(opt.input);
  if (verb == "derived-series") {
    collar::PermGroup g = collar::perm_group_from_json(
        in, static_cast<std::size_t>(opt.cap));
    Json orders = Json::array();
    for (const auto& t : g.derived_series(static_cast<std::size_t>(opt.cap)))
      orders.push_back(t.order());
    emit(Json{{"orders", orders}});
    return kExitTrue;
  }
  if (verb == "perfect-core") {
    collar::PermGroup g = collar::perm_group_from_json(
        in, static_cast<std::size_t>(opt.cap));
    collar::PermGroup core = g.perfect_core(static_cast<std::size_t>(opt.cap));
    emit(Json{{"core_order", core.order()},
              {"is_perfect", g.is_perfect()},
              {"is_hypo_abelian", g.is_hypo_abelian()}});
    return kExitTrue;
  }
  if (verb == "extension-check") {
    collar::PermGroup g = collar::perm_group_from_json(in.at("group"),
                                                       static_cast<std::size_t>(opt.cap));
    collar::PermGroup n = collar::perm_group_from_json(in.at("normal"),
                                                       static_cast<std::size_t>(opt.cap));
    collar::ExtensionReport rep = collar::check_extension_lemmas(g, n);
    emit(collar::to_json(rep));
    return rep.all_ok() ? kExitTrue : kExitVerification;
  }
  throw collar::ValidationError("unknown perm verb");
}

int run_thompson(const std::string& verb, const Options& opt) {
  Json in = read_input(opt.input);
  if (verb == "order") {
    collar::TreePair t = collar::tree_pair_from_json(in);
    auto ord = t.order(static_cast<int>(opt.order_cap));
    Json out;
    if (ord)
      out["order"] = *ord;
    else
      out["order"] = "exceeds cap";
    emit(out);
    return kExitTrue;
  }
  if (verb == "multiply") {
    collar::TreePair a = collar::tree_pair_from_json(in.at("a"));
    collar::TreePair b = collar::tree_pair_from_json(in.at("b"));
    emit(collar::to_json(a * b));
    return kExitTrue;
  }
  throw collar::ValidationError("unknown thompson verb");
}

int run_freeprod(const std::string& verb, const Options& opt) {
  Json in = read_input(opt.input);
  if (verb == "partial-conj") {
    collar::TreePair u = collar::tree_pair_from_json(in.at("u"));
    collar::FPElement w = collar::fp_element_from_json(in.at("w"));
    emit(collar::to_json(collar::partial_conjugation(u, w)));
    return kExitTrue;
  }
  if (verb == "pattern") {
    collar::FactorHom hom;
    hom.domain_factors = in.at("domain_factors").get<std::size_t>();
    hom.target_factors = in.at("target_factors").get<std::size_t>();
    for (const auto& fac : in.at("images")) {
      std::vector<collar::TupleElement> imgs;
      for (const auto& t : fac) imgs.push_back(collar::tuple_from_json(t));
      hom.images.push_back(std::move(imgs));
    }
    emit(collar::to_json(collar::straightening_pattern(hom)));
    return kExitTrue;
  }
  throw collar::ValidationError("unknown freeprod verb");
}

int run_presentation(const std::string& verb, const Options& opt) {
  Json in = read_input(opt.input);
  if (verb == "normal-form") {
    collar::SemidirectData sd = collar::semidirect_from_json(in.at("sd"));
    collar::GenWord w = collar::gen_word_from_json(in.at("word"));
    emit(Json{{"normal_form", collar::to_json(collar::normal_form(w, sd))}});
    return kExitTrue;
  }
  if (verb == "semidirect") {
    collar::Presentation k = collar::presentation_from_json(in.at("k"));
    collar::Presentation q = collar::presentation_from_json(in.at("q"));
    collar::SemidirectData sd = collar::semidirect_from_json(in.at("sd"));
    emit(collar::to_json(collar::semidirect_presentation(k, q, sd)));
    return kExitTrue;
  }
  if (verb == "gt-tower") {
    collar::Presentation p0 = collar::presentation_from_json(in.at("pres0"));
    const std::string t0 = in.at("t0").get<std::string>();
    const int j = in.contains("j") ? in.at("j").get<int>() : opt.level;
    collar::Presentation pj = collar::gt_tower_presentation(p0, t0, j);
    collar::TowerEpi epi = collar::gt_tower_epi(p0, t0, j);
    Json imgs = Json::object();
    for (const auto& [g, w] : epi.images) imgs[g] = collar::to_json(w);
    emit(Json{{"presentation", collar::to_json(pj)},
              {"epi_images", imgs},
              {"epi_verified", epi.verified}});
    return epi.verified ? kExitTrue : kExitVerification;
  }
  throw collar::ValidationError("unknown presentation verb");
}

int run_tower(const std::string& verb, const Options& opt) {
  collar::PrimeSeq a = parse_seq(opt.seq_a);
  if (verb == "order") {
    collar::OuterOrderResult r =
        collar::outer_action_order(a, collar::default_order_witnesses(a));
    emit(Json{{"order", r.order}, {"certified", r.ok()}, {"diagnostic", r.diagnostic}});
    return r.ok() ? kExitTrue : kExitVerification;
  }
  collar::PrimeSeq b = parse_seq(opt.seq_b);
  if (verb == "iso") {
    collar::IsoResult r = collar::iso_decide(a, b);
    Json out{{"iso", r.isomorphic}};
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    emit(out);
    return r.isomorphic ? kExitTrue : kExitFalse;
  }
  if (verb == "epi") {
    collar::BuildEpiResult r = collar::build_epi(a, b, opt.verify_pairs, opt.seed);
    Json out{{"epi", r.exists}};
    if (r.missing_prime) out["missing_prime"] = *r.missing_prime;
    if (r.exists) out["hom_verified"] = r.hom_verified;
    emit(out);
    if (!r.exists) return kExitFalse;
    return r.hom_verified ? kExitTrue : kExitVerification;
  }
  if (verb == "pro-distinct") {
    collar::ProDistinctResult r = collar::pro_distinct(a, b);
    const std::size_t depth = opt.depth >= 0 ? static_cast<std::size_t>(opt.depth)
                                             : std::min(a.length(), b.length());
    collar::LadderResult lr = collar::ladder_search(a, b, depth);
    Json out{{"distinct", r.distinct}};
    if (r.witness) out["witness"] = *r.witness;
    out["ladder_exhausted"] = !lr.found;
    emit(out);
    if (r.distinct == lr.found) return kExitVerification;  // oracle disagreement
    return r.distinct ? kExitTrue : kExitFalse;
  }
  if (verb == "ladder-search") {
    const std::size_t depth = opt.depth >= 0 ? static_cast<std::size_t>(opt.depth)
                                             : std::min(a.length(), b.length());
    collar::LadderResult r = collar::ladder_search(a, b, depth);
    emit(Json{{"found", r.found}, {"cuts_a", r.cuts_a}, {"cuts_b", r.cuts_b}});
    return r.found ? kExitTrue : kExitFalse;
  }
  throw collar::ValidationError("unknown tower verb");
}

int run_groupring(const std::string& verb, const Options& opt) {
  Json in = read_input(opt.input);
  if (verb == "kernel-split") {
    collar::GRMatrix theta = collar::gr_matrix_from_json(in.at("theta"));
    const std::size_t split = in.at("split_index").get<std::size_t>();
    collar::KernelSplitResult r = collar::kernel_split(theta, split);
    emit(Json{{"alpha", collar::to_json(r.split.alpha)},
              {"verification", collar::to_json(r.verification)}});
    return r.verification.ok() ? kExitTrue : kExitVerification;
  }
  if (verb == "lift") {
    collar::GroupPtr g = collar::finite_group_from_json(in.at("group"));
    collar::IntMatrix d = collar::int_matrix_from_json(in.at("d"));
    collar::EquivariantLift r = collar::equivariant_kernel_lift(d, g);
    emit(Json{{"downstairs_rank", r.downstairs_rank},
              {"flattened_kernel_rank", r.flattened_kernel_rank},
              {"rank_equality", r.rank_equality},
              {"independence", r.independence},
              {"generation", r.generation}});
    return r.ok() ? kExitTrue : kExitVerification;
  }
  if (verb == "chain-check") {
    std::vector<collar::GRMatrix> boundaries;
    for (const auto& b : in.at("boundaries"))
      boundaries.push_back(collar::gr_matrix_from_json(b));
    collar::ChainReport r = collar::chain_check(boundaries);
    emit(collar::to_json(r));
    return r.acyclic ? kExitTrue : kExitFalse;
  }
  if (verb == "dual-check") {
    collar::GRMatrix d2 = collar::gr_matrix_from_json(in.at("d2"));
    collar::GRMatrix d3 = collar::gr_matrix_from_json(in.at("d3"));
    std::optional<collar::IntMatrix> iota;
    if (in.contains("iota")) iota = collar::int_matrix_from_json(in.at("iota"));
    collar::DualReport r = collar::cocompact_dual_check(d2, d3, iota);
    emit(collar::to_json(r));
    return r.ok() ? kExitTrue : kExitFalse;
  }
  throw collar::ValidationError("unknown groupring verb");
}

int run_suite(const Options& opt) {
  auto results = collar::acceptance::run_all(opt.seed);
  Json arr = Json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.index << ": " << r.name
              << (r.detail.empty() ? "" : " — " + r.detail) << "\n";
    Json c{{"index", r.index}, {"name", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    arr.push_back(c);
    all_pass = all_pass && r.pass;
  }
  emit(Json{{"criteria", arr}, {"all_pass", all_pass}});
  return all_pass ? kExitTrue : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collar — exact computational group theory toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("--input", opt.input, "input JSON file or - for stdin");
    cmd->add_flag("--json", "emit canonical JSON (always on)");
    cmd->add_option("--seed", opt.seed, "seed for randomized verifications");
    cmd->add_option("--cap", opt.cap, "group closure cap");
  };

  std::string verb;
  auto* perm = app.add_subcommand("perm", "finite permutation groups");
  perm->add_option("verb", verb, "derived-series|perfect-core|extension-check")->required();
  add_common(perm, true);

  auto* thompson = app.add_subcommand("thompson", "Thompson's group V");
  thompson->add_option("verb", verb, "order|multiply")->required();
  add_common(thompson, true);
  thompson->add_option("--order-cap", opt.order_cap, "order search cap");

  auto* freeprod = app.add_subcommand("freeprod", "free product of two copies of V");
  freeprod->add_option("verb", verb, "partial-conj|pattern")->required();
  add_common(freeprod, true);

  auto* presentation = app.add_subcommand("presentation", "presentations and rewriting");
  presentation->add_option("verb", verb, "normal-form|semidirect|gt-tower")->required();
  add_common(presentation, true);
  presentation->add_option("--level", opt.level, "tower level j");

  auto* tower = app.add_subcommand("tower", "the groups G_(omega,n)");
  tower->add_option("verb", verb, "iso|epi|pro-distinct|ladder-search|order")->required();
  add_common(tower, false);
  tower->add_option("--a", opt.seq_a, "first prime sequence, comma separated");
  tower->add_option("--b", opt.seq_b, "second prime sequence, comma separated");
  tower->add_option("--depth", opt.depth, "ladder depth (default: min prefix length)");
  tower->add_option("--verify-pairs", opt.verify_pairs, "random pairs for epi verification");

  auto* groupring = app.add_subcommand("groupring", "exact ZQ linear algebra");
  groupring->add_option("verb", verb, "kernel-split|lift|chain-check|dual-check")->required();
  add_common(groupring, true);

  auto* suite = app.add_subcommand("suite", "verification batteries");
  suite->add_option("verb", verb, "all")->required();
  add_common(suite, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (perm->parsed()) return run_perm(verb, opt);
    if (thompson->parsed()) return run_thompson(verb, opt);
    if (freeprod->parsed()) return run_freeprod(verb, opt);
    if (presentation->parsed()) return run_presentation(verb, opt);
    if (tower->parsed()) return run_tower(verb, opt);
    if (groupring->parsed()) return run_groupring(verb, opt);
    if (suite->parsed()) {
      if (verb != "all") throw collar::ValidationError("unknown suite verb");
      return run_suite(opt);
    }
  } catch (const Json::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const collar::ValidationError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const collar::PreconditionError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const collar::SizeLimitError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}
