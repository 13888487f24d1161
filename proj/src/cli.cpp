#include "knotdom/cli.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "knotdom/alexander.hpp"
#include "knotdom/domination.hpp"
#include "knotdom/poset.hpp"

#ifndef KNOTDOM_DEFAULT_CORPUS
#define KNOTDOM_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace knotdom {

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const KnotRecord& need(const Corpus& c, const std::string& name) {
  const KnotRecord* r = c.find(name);
  if (!r) throw CorpusError("fixture record '" + name + "' is missing from the corpus");
  return *r;
}

LaurentPoly delta_from_diagram(const KnotRecord& r) {
  auto pd = r.planar_diagram();
  if (!pd) throw CorpusError("fixture record '" + r.name + "' has no diagram");
  return alexander_polynomial(*pd);
}

CheckResult check_alexander(const Corpus& c) {
  CheckResult out{"alexander_reproduction", true, "", "trefoil, figure-eight and 5_2 Alexander polynomials"};
  const std::pair<const char*, const char*> expected[] = {
      {"3_1", "1 - t + t^2"}, {"4_1", "1 - 3t + t^2"}, {"5_2", "2 - 3t + 2t^2"}};
  for (const auto& [name, text] : expected) {
    const LaurentPoly got = delta_from_diagram(need(c, name));
    out.pass = out.pass && got == P(text);
    out.detail += std::string(out.detail.empty() ? "" : "; ") + name + ": " + got.to_string();
  }
  return out;
}

CheckResult check_band_sum(const Corpus& c) {
  CheckResult out{"band_sum_nondivisibility", false, "", "band connected sum of trefoils"};
  const bool divides = exact_div(P("1 - t^2 + t^4"), P("1 - t + t^2")).has_value();
  const Verdict v = evaluate_pair(need(c, "band_sum_3_1"), need(c, "3_1"));
  out.pass = !divides && v.kind == Verdict::Kind::Obstructed && v.has_rule("O1");
  out.detail = "1 - t^2 + t^4 divisible by 1 - t + t^2: " + yes_no(divides) + "; band_sum_3_1 vs 3_1: " +
               kind_name(v.kind) + (v.has_rule("O1") ? " (O1)" : "");
  return out;
}

CheckResult check_murasugi(const Corpus&) {
  CheckResult out{"murasugi_sum_nondivisibility", false, "", "Murasugi sum of 5_2 and 4_1"};
  const LaurentPoly sum = P("2 - 3t + 3t^2 - 3t^3 + 2t^4");
  const bool by41 = exact_div(sum, P("1 - 3t + t^2")).has_value();
  const bool by52 = exact_div(sum, P("2 - 3t + 2t^2")).has_value();
  out.pass = !by41 && !by52;
  out.detail = sum.to_string() + " divisible by Delta(4_1): " + yes_no(by41) + ", by Delta(5_2): " + yes_no(by52);
  return out;
}

CheckResult check_cable(const Corpus& c) {
  CheckResult out{"cable_satellite_formula", false, "", "(2,3)-cable pattern on the figure-eight"};
  const LaurentPoly d31 = delta_from_diagram(need(c, "3_1"));
  const LaurentPoly d41 = delta_from_diagram(need(c, "4_1"));
  const LaurentPoly sat = satellite_delta(d31, d41, 2);
  const LaurentPoly product = normalize(P("1 - t - t^2") * P("1 - t + t^2") * P("1 + t - t^2"));
  const bool by31 = exact_div(sat, d31).has_value();
  const bool by41 = exact_div(sat, d41).has_value();
  const auto& ks = need(c, "ks_cable23_of_4_1");
  const bool record = ks.delta && normalize(*ks.delta) == sat;
  out.pass = sat == product && by31 && !by41 && record;
  out.detail = "satellite delta " + sat.to_string() + (sat == product ? " equals" : " differs from") +
               " the expanded product; divisible by Delta(3_1): " + yes_no(by31) + ", by Delta(4_1): " +
               yes_no(by41) + "; matches ks_cable23_of_4_1: " + yes_no(record);
  return out;
}

CheckResult check_jones(const Corpus& c) {
  CheckResult out{"jones_nondivisibility", false, "", "Jones polynomial of the cable versus the trefoil"};
  const auto& ks = need(c, "ks_cable23_of_4_1");
  if (!ks.jones) throw CorpusError("fixture record 'ks_cable23_of_4_1' has no jones polynomial");
  auto pd = need(c, "3_1").planar_diagram();
  const LaurentPoly v31 = jones_polynomial(*pd);
  const LaurentPoly v31m = jones_polynomial(mirror(*pd));
  const bool d1 = exact_div(*ks.jones, v31).has_value();
  const bool d2 = exact_div(*ks.jones, v31m).has_value();
  out.pass = !d1 && !d2;
  out.detail = "V(ks) = " + ks.jones->to_string() + "; divisible by " + v31.to_string() + ": " + yes_no(d1) +
               ", by mirror " + v31m.to_string() + ": " + yes_no(d2);
  return out;
}

CheckResult check_winding_zero(const Corpus& c) {
  CheckResult out{"winding_zero_satellite", true, "", "winding-zero satellites with equal classical invariants"};
  const LaurentPoly d31 = delta_from_diagram(need(c, "3_1"));
  for (const char* companion : {"4_1", "5_2", "6_2", "granny"}) {
    const bool same = satellite_delta(d31, *need(c, companion).delta, 0) == d31;
    out.pass = out.pass && same;
  }
  const auto& sat = need(c, "sat_of_double_of_3_1");
  const auto& pat = need(c, "double_of_3_1");
  const bool equal_delta = sat.delta && pat.delta && *sat.delta == *pat.delta;
  const bool equal_genus = sat.genus_exact && pat.genus_exact && *sat.genus_exact == *pat.genus_exact;
  const bool equal_volume = sat.volume && pat.volume && *sat.volume == *pat.volume;
  const Verdict v = evaluate_pair(sat, pat);
  const bool certified = v.kind == Verdict::Kind::Certified && v.certificate->rule_id == "C2";
  const bool r1_silent = rigidity_scan(sat, pat).empty();
  out.pass = out.pass && equal_delta && equal_genus && equal_volume && certified && r1_silent;
  out.detail = "satellite_delta(Delta(3_1), *, 0) = Delta(3_1); sat_of_double_of_3_1 vs double_of_3_1: equal delta " +
               yes_no(equal_delta) + ", equal genus " + yes_no(equal_genus) + ", equal volume " +
               yes_no(equal_volume) + ", verdict " + kind_name(v.kind) +
               (v.certificate ? " (" + v.certificate->rule_id + ")" : "") + ", rigidity silent " + yes_no(r1_silent);
  return out;
}

CheckResult check_pairs(const Corpus& c) {
  CheckResult out{"pair_verdicts", true, "", "cable, connected sum and mutant pairs"};
  struct Expect {
    const char* a;
    const char* b;
    Verdict::Kind kind;
    const char* rule;
  };
  const Expect expected[] = {
      {"ks_cable23_of_4_1", "4_1", Verdict::Kind::Obstructed, "O1"},
      {"granny", "3_1", Verdict::Kind::Certified, "C1"},
      {"KT_mutant", "Conway_mutant", Verdict::Kind::Obstructed, "R5"},
  };
  for (const auto& e : expected) {
    const Verdict v = evaluate_pair(need(c, e.a), need(c, e.b));
    out.pass = out.pass && v.kind == e.kind && v.has_rule(e.rule);
    std::string ids;
    for (const auto& id : v.rule_ids()) ids += (ids.empty() ? "" : ",") + id;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + e.a + " vs " + e.b + ": " + kind_name(v.kind) + "[" +
                  ids + "]";
  }
  return out;
}

CheckResult check_chain_bounds(const Corpus& c) {
  CheckResult out{"chain_bounds", false, "", "chain length bounds from free genus and alternating degree"};
  const auto b31 = chain_length_bound(need(c, "3_1"));
  const auto b52 = chain_length_bound(need(c, "5_2"));
  const std::vector<ChainBound> want31{{1, "free_ghat", "total_length"}};
  const std::vector<ChainBound> want52{{1, "free_ghat", "total_length"}, {2, "alternating_degree", "alternating_count"}};
  const DominationGraph g = build_graph(c);
  const auto chain = longest_chain(g, "3_1");
  const auto audit = audit_chains(g, c);
  out.pass = b31 == want31 && b52 == want52 && chain.size() == 2 && audit.violations.empty();
  out.detail = "3_1: free_ghat " + std::to_string(b31.empty() ? -1 : b31[0].value.value_or(-1)) +
               ", longest chain length " + std::to_string(chain.size() - 1) + "; 5_2: alternating_degree " +
               std::to_string(b52.size() < 2 ? -1 : b52[1].value.value_or(-1)) + "; " +
               std::to_string(audit.chains_checked) + " chains checked, " + std::to_string(audit.violations.size()) +
               " violations";
  return out;
}

KnotRecord resolve_target(const Corpus* corpus, const std::string& target) {
  if (corpus)
    if (const KnotRecord* r = corpus->find(target)) return *r;
  KnotRecord r;
  r.name = target;
  const auto first = target.find_first_not_of(" \t");
  if (first != std::string::npos && target[first] == 'B' && target.find(':') != std::string::npos)
    r.braid = parse_braid(target);
  else if (first == std::string::npos || target.compare(first, 2, "X(") == 0)
    r.diagram = parse_pd(target);
  else
    throw CorpusError("unknown knot '" + target + "' (not a corpus name, PD code or braid word)");
  return enrich_record(std::move(r));
}

std::string tri_text(Tri t) { return t == Tri::True ? "true" : t == Tri::False ? "false" : "unknown"; }

void print_record(const KnotRecord& r, std::ostream& out) {
  out << "name: " << r.name << "\n";
  if (r.same_knot_as) out << "same knot as: " << *r.same_knot_as << "\n";
  if (auto pd = r.planar_diagram()) {
    out << "crossings: " << pd->crossing_count() << "\n";
    out << "writhe: " << pd->writhe() << "\n";
    out << "seifert circles: " << seifert_circles(*pd).circle_count << "\n";
  }
  out << "alexander: " << r.delta->to_string() << "\n";
  out << "determinant: " << r.determinant->get_str() << "\n";
  if (r.jones) out << "jones: " << r.jones->to_string() << "\n";
  const auto g = genus_interval(r);
  out << "genus: [" << g.lower << ", " << (g.upper ? std::to_string(*g.upper) : "inf") << "]\n";
  if (r.ghat) out << "ghat: " << *r.ghat << "\n";
  if (r.volume) out << "volume: " << r.volume->str() << "\n";
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    const Tri t = r.flags.get(static_cast<Flag>(i));
    if (t != Tri::Unknown) out << "flag " << flag_name(static_cast<Flag>(i)) << ": " << tri_text(t) << "\n";
  }
}

void print_verdict(const std::string& a, const std::string& b, const Verdict& v, std::ostream& out) {
  out << a << " >= " << b << ": " << kind_name(v.kind) << "\n";
  switch (v.kind) {
    case Verdict::Kind::Obstructed:
      for (const auto& r : v.reports) out << "  " << r.rule_id << " [" << r.reference << "] " << r.detail << "\n";
      break;
    case Verdict::Kind::Certified: {
      const auto& c = *v.certificate;
      out << "  " << c.rule_id << " [" << c.reference << "] " << c.detail << "\n  witnesses:";
      for (const auto& w : c.witnesses) out << " " << w;
      out << "\n";
      break;
    }
    case Verdict::Kind::Unknown: {
      out << "  no rule decides this pair; obstructions checked and passed:";
      for (const auto& id : v.passed) out << " " << id;
      out << "\n";
      break;
    }
    case Verdict::Kind::Equal:
      out << "  same knot\n";
      break;
  }
}

nlohmann::json poset_json(const DominationGraph& g, const Corpus& corpus) {
  nlohmann::json j = graph_to_json(g);
  nlohmann::json chains = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::object();
  for (const auto& n : g.nodes) {
    chains[n] = longest_chain(g, n);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& b : chain_length_bound(corpus.at(n))) list.push_back(chain_bound_to_json(b));
    bounds[n] = std::move(list);
  }
  const auto audit = audit_chains(g, corpus);
  j["longest_chains"] = std::move(chains);
  j["chain_bounds"] = std::move(bounds);
  j["chain_audit"] = {{"chains_checked", audit.chains_checked},
                      {"refined_checks", audit.refined_checks},
                      {"violations", audit.violations}};
  j["note"] = "chains use certified edges only; longest chains are lower bounds";
  return j;
}

}  // namespace

std::vector<CheckResult> run_example_checks(const Corpus& corpus) {
  using Fn = CheckResult (*)(const Corpus&);
  const Fn checks[] = {check_alexander, check_band_sum, check_murasugi,     check_cable,
                       check_jones,     check_winding_zero, check_pairs, check_chain_bounds};
  std::vector<CheckResult> out;
  for (Fn f : checks) out.push_back(f(corpus));
  return out;
}

nlohmann::json run_report_json(const std::vector<CheckResult>& checks) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    list.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}, {"reference", c.reference}});
    passed += c.pass;
  }
  return {{"checks", list},
          {"passed", passed},
          {"total", checks.size()},
          {"exit_code", passed == checks.size() ? kExitOk : kExitError}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knot 1-domination toolkit", "knotdom"};
  app.require_subcommand(1);
  std::string corpus_path = KNOTDOM_DEFAULT_CORPUS;
  bool json = false;
  unsigned threads = 1;
  app.add_option("--corpus", corpus_path, "corpus JSON file");
  app.add_flag("--json", json, "machine-readable output with sorted keys");
  app.add_option("--threads", threads, "worker threads for pair evaluation")->check(CLI::Range(1U, 256U));

  std::string target;
  auto* inv = app.add_subcommand("invariants", "invariants of a corpus knot, PD code or braid word");
  inv->add_option("target", target)->required();
  std::string k1, k2;
  auto* chk = app.add_subcommand("check", "decide whether k1 1-dominates k2");
  chk->add_option("k1", k1)->required();
  chk->add_option("k2", k2)->required();
  std::string poset_corpus;
  auto* pos = app.add_subcommand("poset", "certified domination graph of a corpus");
  pos->add_option("corpus", poset_corpus, "corpus JSON file (defaults to --corpus)");
  std::string bound_name;
  auto* cb = app.add_subcommand("chain-bound", "chain length bounds and longest certified chain");
  cb->add_option("name", bound_name)->required();
  auto* vp = app.add_subcommand("verify-paper", "run the worked-example checks");
  for (auto* sub : {inv, chk, pos, cb, vp}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    auto load = [&](const std::string& path) {
      if (!std::filesystem::exists(path)) throw CorpusError("corpus file not found: " + path);
      return load_corpus(path, threads);
    };

    if (inv->parsed()) {
      std::optional<Corpus> corpus;
      if (std::filesystem::exists(corpus_path)) corpus = load(corpus_path);
      const KnotRecord r = resolve_target(corpus ? &*corpus : nullptr, target);
      if (json)
        out << record_to_json(r).dump(2) << "\n";
      else
        print_record(r, out);
      return kExitOk;
    }
    if (chk->parsed()) {
      const Corpus corpus = load(corpus_path);
      for (const auto& n : {k1, k2})
        if (!corpus.contains(n)) throw CorpusError("unknown knot '" + n + "'");
      const Verdict v = evaluate_pair(corpus.at(k1), corpus.at(k2));
      if (json)
        out << verdict_to_json(k1, k2, v).dump(2) << "\n";
      else
        print_verdict(k1, k2, v, out);
      return verdict_exit_code(v);
    }
    if (pos->parsed()) {
      const Corpus corpus = load(poset_corpus.empty() ? corpus_path : poset_corpus);
      const DominationGraph g = build_graph(corpus, threads);
      if (json) {
        out << poset_json(g, corpus).dump(2) << "\n";
      } else {
        out << g.nodes.size() << " knots, " << g.pairs_evaluated << " ordered pairs, " << g.edges.size()
            << " certified edges\n";
        for (const auto& [key, cert] : g.edges) out << "  " << key.first << " > " << key.second << "  " << cert.rule_id << "\n";
        out << "audit log: " << (g.audit_log.empty() ? "empty" : std::to_string(g.audit_log.size()) + " findings") << "\n";
        for (const auto& line : g.audit_log) out << "  " << line << "\n";
        out << "longest certified chains (lower bounds):\n";
        for (const auto& n : g.nodes) {
          const auto chain = longest_chain(g, n);
          out << "  " << n << ": " << chain.size() - 1 << " [";
          for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " > " : "") << chain[i];
          out << "]\n";
        }
      }
      return g.audit_log.empty() ? kExitOk : kExitError;
    }
    if (cb->parsed()) {
      const Corpus corpus = load(corpus_path);
      if (!corpus.contains(bound_name)) throw CorpusError("unknown knot '" + bound_name + "'");
      const auto bounds = chain_length_bound(corpus.at(bound_name));
      const DominationGraph g = build_graph(corpus, threads);
      const auto chain = longest_chain(g, bound_name);
      if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& b : bounds) list.push_back(chain_bound_to_json(b));
        out << nlohmann::json{{"name", bound_name}, {"bounds", list}, {"longest_chain", chain},
                              {"longest_chain_length", chain.size() - 1}}
                   .dump(2)
            << "\n";
      } else {
        out << bound_name << ":\n";
        if (bounds.empty()) out << "  no chain bound applies\n";
        for (const auto& b : bounds)
          out << "  " << b.rule << " <= " << (b.value ? std::to_string(*b.value) : "unbounded") << " (" << b.scope
              << ")\n";
        out << "  longest certified chain (lower bound): " << chain.size() - 1 << " [";
        for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " > " : "") << chain[i];
        out << "]\n";
      }
      return kExitOk;
    }
    if (vp->parsed()) {
      const Corpus corpus = load(corpus_path);
      const auto checks = run_example_checks(corpus);
      const auto report = run_report_json(checks);
      if (json) {
        out << report.dump(2) << "\n";
      } else {
        for (const auto& c : checks)
          out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " (" << c.reference << "): " << c.detail << "\n";
        out << report["passed"].get<std::size_t>() << "/" << checks.size() << " checks passed\n";
      }
      return report["exit_code"].get<int>();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace knotdom
