/* twistkit: twisted Alexander invariants of links in S^3 from PD codes.

   Exit codes: 0 success / PASS, 1 certify FAIL, 2 input parse error,
   3 invalid representation, 4 budget exhaustion (partial output emitted). */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <twistkit/twistkit.hpp>

namespace tk = twistkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitBadRep = 3;
constexpr int kExitBudget = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct PdInput {
  tk::LinkDiagram diagram;
  tk::GroupPresentation pres;
};

PdInput load_pd(const std::string& path) {
  PdInput in;
  in.diagram = tk::parse_pd(slurp(path));
  in.pres = tk::wirtinger(in.diagram);
  return in;
}

void print_report_text(const tk::InvariantReport& r) {
  std::cout << "rep: " << r.rep_id << "\n";
  std::cout << "  k: " << r.k << "\n";
  std::cout << "  delta0: " << r.delta0.render() << "  (deg " << r.deg0 << ")\n";
  std::cout << "  delta1: " << r.delta1.render();
  if (r.deg1) std::cout << "  (deg " << *r.deg1 << ")";
  std::cout << "\n";
  std::cout << "  torsion_delta: " << r.torsion_delta.render() << "\n";
  std::cout << "  rank: " << r.rank << "\n";
  if (r.tau)
    std::cout << "  tau: (" << r.tau->num.render() << ") / (" << r.tau->den.render() << ")"
              << (r.tau->integral ? "  [integral]" : "") << "\n";
  if (r.norm_lower_bound)
    std::cout << "  norm_lower_bound: " << tk::rat_to_string(*r.norm_lower_bound) << "\n";
}

int cmd_invariants(const std::string& pd_path, const std::string& rep_source, int k,
                   int perm_degree, long node_budget, bool keep_relators, bool json) {
  PdInput in = load_pd(pd_path);
  std::vector<tk::LabeledRep> family;
  bool truncated = false;
  if (perm_degree > 0) {
    tk::EnumOptions opt;
    opt.node_budget = node_budget;
    tk::EnumResult res = tk::enumerate_perm_reps(in.pres, perm_degree, opt);
    truncated = res.truncated;
    for (const auto& a : res.reps) family.push_back({tk::perm_assignment_id(a), a.to_matrix_rep()});
  } else if (rep_source == "trivial") {
    family.push_back({"trivial k=" + std::to_string(k), tk::trivial_rep(in.pres, k)});
  } else {
    family.push_back({std::filesystem::path(rep_source).filename().string(),
                      tk::parse_rep_file(slurp(rep_source), in.pres.gens)});
  }
  auto reports = tk::family_reports(in.pres, family, !keep_relators);
  if (json) {
    tk::ordered_json arr = tk::ordered_json::array();
    for (const auto& r : reports) arr.push_back(tk::report_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(r);
  }
  return truncated ? kExitBudget : kExitPass;
}

int cmd_search_reps(const std::string& pd_path, int degree, bool transpositions_only,
                    bool surjective_only, long limit, long node_budget, bool distinct,
                    bool list_ids) {
  PdInput in = load_pd(pd_path);
  tk::EnumOptions opt;
  opt.transpositions_only = transpositions_only;
  opt.surjective_only = surjective_only;
  opt.limit = limit;
  opt.node_budget = node_budget;
  opt.distinct_up_to_conjugacy = distinct;
  tk::EnumResult res = tk::enumerate_perm_reps(in.pres, degree, opt);
  long surjective = 0;
  for (const auto& a : res.reps) {
    std::vector<tk::Perm> gens(a.images.begin(), a.images.end());
    if (tk::detail::subgroup_is_full(gens, a.n)) ++surjective;
  }
  std::cout << "total " << res.reps.size() << "\n";
  std::cout << "surjective " << surjective << "\n";
  std::cout << "truncated " << (res.truncated ? "true" : "false") << "\n";
  if (list_ids)
    for (const auto& a : res.reps) std::cout << tk::perm_assignment_id(a) << "\n";
  return kExitPass;
}

int cmd_certify(const std::string& pd_path, const std::string& claim, int budget,
                long node_budget) {
  PdInput in = load_pd(pd_path);
  auto [family, truncated] = tk::family_trivial_and_perms(in.pres, budget, node_budget);
  tk::ordered_json out;
  bool pass = false;
  if (claim == "unknot") {
    auto v = tk::unknot_audit(in.pres, family);
    pass = v.pass;
    out = tk::verdict_json(v);
  } else if (claim == "trefoil-or-fig8") {
    auto v = tk::certify_genus1_fibered(in.pres, family);
    pass = v.pass;
    out = tk::verdict_json(v);
  } else if (claim == "hopf") {
    auto v = tk::hopf_audit(in.pres, family);
    pass = v.pass;
    out = tk::verdict_json(v);
  } else if (claim == "trivial-link") {
    auto v = tk::trivial_link_audit(in.pres, family);
    pass = v.pass;
    out = tk::verdict_json(v);
  } else if (claim.rfind("split:", 0) == 0) {
    int s = 0;
    try {
      s = std::stoi(claim.substr(6));
    } catch (...) {
      throw std::invalid_argument("bad split claim '" + claim + "'");
    }
    auto v = tk::split_rank_audit(in.pres, family, s);
    pass = v.pass;
    out = tk::verdict_json(v);
  } else {
    throw std::invalid_argument("unknown claim '" + claim + "'");
  }
  out["claim"] = claim;
  out["budget_exhausted"] = truncated;
  std::cout << out.dump(2) << "\n";
  if (truncated) return kExitBudget;
  return pass ? kExitPass : kExitFail;
}

int cmd_norm(const std::string& pd_path, int budget, long node_budget) {
  PdInput in = load_pd(pd_path);
  auto [family, truncated] = tk::family_trivial_and_perms(in.pres, budget, node_budget);
  auto reports = tk::family_reports(in.pres, family);
  tk::ordered_json out;
  bool any_bound = false;
  tk::Rational best;
  for (const auto& r : reports)
    if (r.norm_lower_bound && (!any_bound || *r.norm_lower_bound > best)) {
      best = *r.norm_lower_bound;
      any_bound = true;
    }
  if (any_bound)
    out["lower_bound"] = tk::rat_to_string(best);
  else
    out["lower_bound"] = nullptr;
  tk::VanishingSearch s;
  s.family_size = int(family.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (reports[i].delta1.is_zero()) {
      s.found = true;
      s.witness_id = reports[i].rep_id;
      s.message = "delta1 vanishes at " + reports[i].rep_id;
      break;
    }
  if (!s.found) s.message = tk::kNoVanishingWitness;
  out["vanishing"] = tk::search_json(s);
  out["family_size"] = int(family.size());
  out["budget_exhausted"] = truncated;
  std::cout << out.dump(2) << "\n";
  return truncated ? kExitBudget : kExitPass;
}

tk::ordered_json corpus_json(const tk::CorpusEntry& e) {
  tk::ordered_json j;
  j["name"] = e.name;
  j["pd"] = e.pd_path;
  j["components"] = {{"value", e.components.value}, {"provenance", e.components.provenance}};
  if (e.genus)
    j["genus"] = {{"value", e.genus->value}, {"provenance", e.genus->provenance}};
  if (e.fibered)
    j["fibered"] = {{"value", e.fibered->value}, {"provenance", e.fibered->provenance}};
  if (e.alexander)
    j["alexander"] = {{"value", e.alexander->value.render()},
                      {"provenance", e.alexander->provenance}};
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

int cmd_corpus(const std::string& dir, const std::string& name, bool json) {
  if (!name.empty()) {
    tk::CorpusEntry e = tk::load_corpus_entry(dir, name);
    if (json) {
      std::cout << corpus_json(e).dump(2) << "\n";
    } else {
      std::cout << corpus_json(e).dump(2) << "\n" << e.pd_text;
    }
    return kExitPass;
  }
  auto entries = tk::load_corpus(dir);
  if (json) {
    tk::ordered_json arr = tk::ordered_json::array();
    for (const auto& e : entries) arr.push_back(corpus_json(e));
    std::cout << arr.dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& e : entries) {
    std::cout << e.name << "  m=" << e.components.value;
    if (e.genus) std::cout << "  genus=" << e.genus->value;
    if (e.fibered) std::cout << "  fibered=" << (e.fibered->value ? "yes" : "no");
    if (e.alexander) std::cout << "  alexander=" << e.alexander->value.render();
    std::cout << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted Alexander invariants of links in S^3 from PD codes"};
  app.require_subcommand(1);

  std::string pd_path, rep_source = "trivial", claim, corpus_dir = "corpus", corpus_name;
  int k = 1, perm_degree = 0, degree = 3, budget = 4;
  long limit = -1, node_budget = 1000000;
  bool json = false, keep_relators = false;
  bool transpositions_only = false, surjective_only = false, distinct = false, list_ids = false;

  auto* inv = app.add_subcommand("invariants", "invariant report(s) for one diagram");
  inv->add_option("--pd", pd_path, "PD code file")->required();
  inv->add_option("--rep", rep_source, "'trivial' or a representation file");
  inv->add_option("--k", k, "dimension of the trivial representation")->check(CLI::PositiveNumber);
  inv->add_option("--perm-degree", perm_degree,
                  "report every permutation representation of this degree")
      ->check(CLI::PositiveNumber);
  inv->add_option("--node-budget", node_budget, "search node budget");
  inv->add_flag("--keep-relators", keep_relators, "do not drop the redundant relator");
  inv->add_flag("--json", json, "emit JSON");

  auto* sr = app.add_subcommand("search-reps", "enumerate symmetric-group representations");
  sr->add_option("--pd", pd_path, "PD code file")->required();
  sr->add_option("--degree", degree, "symmetric group degree")->required()->check(CLI::PositiveNumber);
  sr->add_flag("--transpositions-only", transpositions_only, "restrict images to transpositions");
  sr->add_flag("--surjective-only", surjective_only, "keep only surjections onto S_n");
  sr->add_option("--limit", limit, "stop after this many results");
  sr->add_option("--node-budget", node_budget, "search node budget");
  sr->add_flag("--distinct-up-to-conjugacy", distinct, "prune conjugate assignments");
  sr->add_flag("--list", list_ids, "print each assignment");

  auto* ce = app.add_subcommand("certify", "audit a detection claim over a representation family");
  ce->add_option("--pd", pd_path, "PD code file")->required();
  ce->add_option("--claim", claim, "unknot | trefoil-or-fig8 | hopf | split:<s> | trivial-link")
      ->required();
  ce->add_option("--budget", budget, "max symmetric group degree")->check(CLI::PositiveNumber);
  ce->add_option("--node-budget", node_budget, "search node budget");

  auto* no = app.add_subcommand("norm", "certified Thurston-norm lower bound over a family");
  no->add_option("--pd", pd_path, "PD code file")->required();
  no->add_option("--budget", budget, "max symmetric group degree")->check(CLI::PositiveNumber);
  no->add_option("--node-budget", node_budget, "search node budget");

  auto* co = app.add_subcommand("corpus", "list or show bundled example links");
  co->add_option("--dir", corpus_dir, "corpus directory");
  co->add_option("--name", corpus_name, "show one entry in full");
  co->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (inv->parsed())
      return cmd_invariants(pd_path, rep_source, k, perm_degree, node_budget, keep_relators, json);
    if (sr->parsed())
      return cmd_search_reps(pd_path, degree, transpositions_only, surjective_only, limit,
                             node_budget, distinct, list_ids);
    if (ce->parsed()) return cmd_certify(pd_path, claim, budget, node_budget);
    if (no->parsed()) return cmd_norm(pd_path, budget, node_budget);
    if (co->parsed()) return cmd_corpus(corpus_dir, corpus_name, json);
  } catch (const tk::pd_parse_error& e) {
    std::cerr << "PD parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tk::rep_error& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return kExitBadRep;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
