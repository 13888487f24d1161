#include "knotdom/domination.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "knotdom/alexander.hpp"

namespace knotdom {

namespace {

constexpr ObstructionRule kObstructions[] = {
    ObstructionRule::O1_alexander,  ObstructionRule::O2_genus,         ObstructionRule::O3_determinant,
    ObstructionRule::O4_volume,     ObstructionRule::O5_two_bridge,    ObstructionRule::O6_montesinos,
    ObstructionRule::O7_ap_class,   ObstructionRule::O8_free,          ObstructionRule::O9_ghat,
    ObstructionRule::O10_orderability, ObstructionRule::O11_mutation,
};

constexpr RigidityRule kRigidities[] = {
    RigidityRule::R1_genus_volume, RigidityRule::R2_fibred_genus,   RigidityRule::R3_nilpotent_degree,
    RigidityRule::R4_free_ghat,    RigidityRule::R5_double_cover,   RigidityRule::R6_hyperbolic_volume,
};

void require_enriched(const KnotRecord& k) {
  if (!k.enriched) throw std::invalid_argument("record '" + k.name + "' has not been enriched");
  if (!k.delta) throw std::invalid_argument("record '" + k.name + "' has no Alexander polynomial");
}

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

std::string interval_str(const GenusInterval& g) {
  return "[" + std::to_string(g.lower) + ", " + (g.upper ? std::to_string(*g.upper) : std::string("inf")) + "]";
}

std::optional<int> definite_genus(const KnotRecord& k) {
  const auto g = genus_interval(k);
  if (g.upper && *g.upper == g.lower) return g.lower;
  return std::nullopt;
}

bool definitely_nontrivial(const KnotRecord& k) {
  if (is_false(k.flag(Flag::unknot))) return true;
  if (k.delta && *k.delta != LaurentPoly(1)) return true;
  return genus_interval(k).lower > 0;
}

Integer determinant_of(const KnotRecord& k) {
  return k.determinant ? *k.determinant : determinant_invariant(*k.delta);
}

// Status of "if k1 has P then k2 has Q" on three-valued inputs, with an
// optional exemption for k2.
RuleOutcome flag_implication(ObstructionRule rule, const KnotRecord& k1, const KnotRecord& k2, Tri p1, Tri q2,
                             const std::string& p_name, const std::string& q_name, bool k2_exempt) {
  const std::string values = p_name + "(" + k1.name + ") = " + tri_str(p1) + ", " + q_name + "(" + k2.name +
                             ") = " + tri_str(q2);
  if (is_false(p1) || is_true(q2) || k2_exempt) return {rule, RuleStatus::Passed, values};
  if (is_true(p1) && is_false(q2)) return {rule, RuleStatus::Fired, values};
  return {rule, RuleStatus::Silent, values};
}

RuleOutcome evaluate(ObstructionRule rule, const KnotRecord& k1, const KnotRecord& k2) {
  switch (rule) {
    case ObstructionRule::O1_alexander: {
      const auto q = exact_div(*k1.delta, *k2.delta);
      const std::string values = "Delta(" + k1.name + ") = " + normalize(*k1.delta).to_string() + ", Delta(" +
                                 k2.name + ") = " + normalize(*k2.delta).to_string();
      if (!q) return {rule, RuleStatus::Fired, values + ": not divisible"};
      return {rule, RuleStatus::Passed, values + ": quotient " + q->to_string()};
    }
    case ObstructionRule::O2_genus: {
      const auto g1 = genus_interval(k1);
      const auto g2 = genus_interval(k2);
      const std::string values =
          "genus(" + k1.name + ") in " + interval_str(g1) + ", genus(" + k2.name + ") in " + interval_str(g2);
      if (g1.upper && *g1.upper < g2.lower) return {rule, RuleStatus::Fired, values};
      if (g2.upper && g1.lower >= *g2.upper) return {rule, RuleStatus::Passed, values};
      return {rule, RuleStatus::Silent, values};
    }
    case ObstructionRule::O3_determinant: {
      const Integer d1 = determinant_of(k1);
      const Integer d2 = determinant_of(k2);
      const std::string values = "det(" + k1.name + ") = " + d1.get_str() + ", det(" + k2.name + ") = " + d2.get_str();
      if (d2 == 0) return {rule, d1 == 0 ? RuleStatus::Passed : RuleStatus::Fired, values};
      const Integer r = d1 % d2;
      return {rule, r == 0 ? RuleStatus::Passed : RuleStatus::Fired, values};
    }
    case ObstructionRule::O4_volume: {
      if (!k1.volume || !k2.volume) {
        return {rule, RuleStatus::Silent,
                "vol(" + k1.name + ") = " + (k1.volume ? k1.volume->str() : std::string("unknown")) + ", vol(" +
                    k2.name + ") = " + (k2.volume ? k2.volume->str() : std::string("unknown"))};
      }
      const std::string values = "vol(" + k1.name + ") = " + k1.volume->str() + ", vol(" + k2.name +
                                 ") = " + k2.volume->str();
      Integer one;
      mpz_ui_pow_ui(one.get_mpz_t(), 10, Volume::kDecimals);
      const bool fired = k1.volume->scaled() + one < k2.volume->scaled();
      return {rule, fired ? RuleStatus::Fired : RuleStatus::Passed, values};
    }
    case ObstructionRule::O5_two_bridge:
      return flag_implication(rule, k1, k2, k1.flag(Flag::two_bridge), k2.flag(Flag::two_bridge), "two_bridge",
                              "two_bridge", is_true(k2.flag(Flag::unknot)));
    case ObstructionRule::O6_montesinos:
      return flag_implication(rule, k1, k2, k1.flag(Flag::montesinos), k2.flag(Flag::montesinos), "montesinos",
                              "montesinos", is_true(k2.flag(Flag::unknot)));
    case ObstructionRule::O7_ap_class:
      return flag_implication(rule, k1, k2, k1.flag(Flag::toroidally_alternating), k2.sum_of_simple,
                              "toroidally_alternating", "sum_of_simple", false);
    case ObstructionRule::O8_free:
      return flag_implication(rule, k1, k2, k1.flag(Flag::free), k2.flag(Flag::free), "free", "free", false);
    case ObstructionRule::O9_ghat: {
      const std::string values = "ghat(" + k1.name + ") = " + (k1.ghat ? std::to_string(*k1.ghat) : "unknown") +
                                 ", ghat(" + k2.name + ") = " + (k2.ghat ? std::to_string(*k2.ghat) : "unknown");
      if (!k1.ghat || !k2.ghat) return {rule, RuleStatus::Silent, values};
      return {rule, *k1.ghat < *k2.ghat ? RuleStatus::Fired : RuleStatus::Passed, values};
    }
    case ObstructionRule::O10_orderability: {
      const Tri lo1 = k1.flag(Flag::lo_double_cover);
      const Tri lo2 = k2.flag(Flag::lo_double_cover);
      const std::string values = "lo_double_cover(" + k1.name + ") = " + tri_str(lo1) + ", lo_double_cover(" +
                                 k2.name + ") = " + tri_str(lo2);
      if (is_false(lo1) && is_true(lo2)) return {rule, RuleStatus::Fired, values};
      if (is_true(lo1) || is_false(lo2)) return {rule, RuleStatus::Passed, values};
      return {rule, RuleStatus::Silent, values};
    }
    case ObstructionRule::O11_mutation: {
      const std::string values = "mutant_class(" + k1.name + ") = " + k1.mutant_class.value_or("none") +
                                 ", mutant_class(" + k2.name + ") = " + k2.mutant_class.value_or("none");
      if (!k1.mutant_class || !k2.mutant_class) return {rule, RuleStatus::Silent, values};
      const bool fired = *k1.mutant_class == *k2.mutant_class && k1.canonical_name() != k2.canonical_name();
      return {rule, fired ? RuleStatus::Fired : RuleStatus::Passed, values};
    }
  }
  throw std::logic_error("unhandled obstruction rule");
}

// Returns a detail string when the rigidity rule applies.
std::optional<std::string> rigidity_detail(RigidityRule rule, const KnotRecord& k1, const KnotRecord& k2) {
  const auto g1 = definite_genus(k1);
  const auto g2 = definite_genus(k2);
  const bool same_genus = g1 && g2 && *g1 == *g2;
  const std::string genus_values = same_genus ? "genus(" + k1.name + ") = genus(" + k2.name + ") = " +
                                                    std::to_string(*g1)
                                              : std::string();
  switch (rule) {
    case RigidityRule::R1_genus_volume: {
      if (!is_true(k1.flag(Flag::no_winding_zero_companion)) || !definitely_nontrivial(k1)) return std::nullopt;
      if (!same_genus || !k1.volume || !k2.volume || !(*k1.volume == *k2.volume)) return std::nullopt;
      return genus_values + ", vol(" + k1.name + ") = vol(" + k2.name + ") = " + k1.volume->str() +
             ", no winding-zero companion in " + k1.name;
    }
    case RigidityRule::R2_fibred_genus:
      if (!same_genus || !is_true(k1.flag(Flag::fibred))) return std::nullopt;
      return genus_values + ", " + k1.name + " fibred";
    case RigidityRule::R3_nilpotent_degree: {
      const LaurentPoly d1 = normalize(*k1.delta);
      const LaurentPoly d2 = normalize(*k2.delta);
      std::string why;
      if (is_true(k1.flag(Flag::two_bridge)))
        why = k1.name + " two-bridge";
      else if (is_true(k1.flag(Flag::fibred)))
        why = k1.name + " fibred";
      else if (is_true(k1.flag(Flag::alternating)) && is_prime_power(abs(d1.leading_coefficient())))
        why = k1.name + " alternating with leading coefficient " + d1.leading_coefficient().get_str();
      else
        return std::nullopt;
      if (d1.max_degree() != d2.max_degree()) return std::nullopt;
      return why + ", deg Delta(" + k1.name + ") = deg Delta(" + k2.name + ") = " + std::to_string(d1.max_degree());
    }
    case RigidityRule::R4_free_ghat:
      if (!is_true(k1.flag(Flag::free)) || !k1.ghat || !k2.ghat || *k1.ghat != *k2.ghat) return std::nullopt;
      return k1.name + " free, ghat(" + k1.name + ") = ghat(" + k2.name + ") = " + std::to_string(*k1.ghat);
    case RigidityRule::R5_double_cover:
      if (!k1.mutant_class || !k2.mutant_class || *k1.mutant_class != *k2.mutant_class) return std::nullopt;
      return "mutant_class(" + k1.name + ") = mutant_class(" + k2.name + ") = " + *k1.mutant_class;
    case RigidityRule::R6_hyperbolic_volume:
      if (!is_true(k1.flag(Flag::hyperbolic)) || !is_true(k2.flag(Flag::hyperbolic))) return std::nullopt;
      if (!k1.volume || !k2.volume || !(*k1.volume == *k2.volume)) return std::nullopt;
      return "both hyperbolic, vol(" + k1.name + ") = vol(" + k2.name + ") = " + k1.volume->str();
  }
  return std::nullopt;
}

std::vector<std::string> summands(const KnotRecord& k) {
  if (k.connected_sum_of) return *k.connected_sum_of;
  return {k.canonical_name()};
}

// Kuhn's augmenting-path matching of dominated summands into dominating ones.
std::optional<std::vector<std::string>> match_summands(const std::vector<std::string>& top,
                                                       const std::vector<std::string>& bottom,
                                                       const KnownDominations& known) {
  auto dominates = [&known](const std::string& a, const std::string& b) {
    return a == b || known.count({a, b}) > 0;
  };
  std::vector<int> owner(top.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t j, std::vector<bool>& seen) {
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (seen[i] || !dominates(top[i], bottom[j])) continue;
      seen[i] = true;
      if (owner[i] < 0 || augment(static_cast<std::size_t>(owner[i]), seen)) {
        owner[i] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t j = 0; j < bottom.size(); ++j) {
    std::vector<bool> seen(top.size(), false);
    if (!augment(j, seen)) return std::nullopt;
  }
  std::vector<std::string> used;
  for (std::size_t i = 0; i < top.size(); ++i)
    if (owner[i] >= 0) used.push_back(top[i]);
  return used;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string rule_id(ObstructionRule r) { return "O" + std::to_string(static_cast<int>(r) + 1); }
std::string rule_id(RigidityRule r) { return "R" + std::to_string(static_cast<int>(r) + 1); }
std::string rule_id(CertificateRule r) { return "C" + std::to_string(static_cast<int>(r)); }

std::string anchor(ObstructionRule r) {
  switch (r) {
    case ObstructionRule::O1_alexander: return "Alexander polynomial divisibility under degree-one maps";
    case ObstructionRule::O2_genus: return "Seifert genus monotonicity";
    case ObstructionRule::O3_determinant: return "double branched cover homology order divisibility";
    case ObstructionRule::O4_volume: return "Gromov simplicial volume monotonicity";
    case ObstructionRule::O5_two_bridge: return "two-bridge knots dominate only two-bridge knots";
    case ObstructionRule::O6_montesinos: return "Montesinos knots dominate only Montesinos knots";
    case ObstructionRule::O7_ap_class: return "toroidally alternating knots dominate only sums of simple knots";
    case ObstructionRule::O8_free: return "free knots dominate only free knots";
    case ObstructionRule::O9_ghat: return "maximal free Seifert genus monotonicity";
    case ObstructionRule::O10_orderability: return "left-orderability of double branched covers";
    case ObstructionRule::O11_mutation: return "distinct mutants are incomparable";
  }
  return {};
}

std::string anchor(RigidityRule r) {
  switch (r) {
    case RigidityRule::R1_genus_volume: return "equal genus and volume rigidity";
    case RigidityRule::R2_fibred_genus: return "fibred knot genus rigidity";
    case RigidityRule::R3_nilpotent_degree: return "transfinitely nilpotent Alexander degree rigidity";
    case RigidityRule::R4_free_ghat: return "free knot maximal genus rigidity";
    case RigidityRule::R5_double_cover: return "double branched cover rigidity";
    case RigidityRule::R6_hyperbolic_volume: return "hyperbolic volume rigidity";
  }
  return {};
}

std::string anchor(CertificateRule r) {
  switch (r) {
    case CertificateRule::C0_unknot: return "every knot dominates the unknot";
    case CertificateRule::C1_connected_sum: return "connected sums dominate their summands";
    case CertificateRule::C2_satellite_pattern: return "satellites dominate their patterns";
    case CertificateRule::C3_winding_one_companion: return "winding-one satellites dominate their companions";
    case CertificateRule::C4_reflexive: return "reflexivity";
    case CertificateRule::C5_transitive: return "transitivity";
  }
  return {};
}

std::string anchor_for_id(const std::string& id) {
  if (id.size() < 2) throw std::invalid_argument("unknown rule id '" + id + "'");
  int n = 0;
  try {
    n = std::stoi(id.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown rule id '" + id + "'");
  }
  if (id[0] == 'O' && n >= 1 && n <= kObstructionRuleCount) return anchor(static_cast<ObstructionRule>(n - 1));
  if (id[0] == 'R' && n >= 1 && n <= kRigidityRuleCount) return anchor(static_cast<RigidityRule>(n - 1));
  if (id[0] == 'C' && n >= 0 && n <= 5) return anchor(static_cast<CertificateRule>(n));
  throw std::invalid_argument("unknown rule id '" + id + "'");
}

std::vector<RuleOutcome> evaluate_obstruction_rules(const KnotRecord& k1, const KnotRecord& k2) {
  require_enriched(k1);
  require_enriched(k2);
  std::vector<RuleOutcome> out;
  for (auto rule : kObstructions) out.push_back(evaluate(rule, k1, k2));
  return out;
}

std::vector<ObstructionReport> obstruction_scan(const KnotRecord& k1, const KnotRecord& k2) {
  std::vector<ObstructionReport> reports;
  for (const auto& o : evaluate_obstruction_rules(k1, k2))
    if (o.status == RuleStatus::Fired) reports.push_back({rule_id(o.rule), o.detail, anchor(o.rule)});
  return reports;
}

std::vector<ObstructionReport> rigidity_scan(const KnotRecord& k1, const KnotRecord& k2) {
  require_enriched(k1);
  require_enriched(k2);
  std::vector<ObstructionReport> reports;
  if (k1.canonical_name() == k2.canonical_name()) return reports;
  for (auto rule : kRigidities)
    if (auto d = rigidity_detail(rule, k1, k2))
      reports.push_back({rule_id(rule), *d + ", but " + k1.name + " and " + k2.name + " are distinct", anchor(rule)});
  return reports;
}

std::optional<Certificate> certificate_search(const KnotRecord& k1, const KnotRecord& k2,
                                              const KnownDominations& known) {
  auto make = [](CertificateRule r, std::vector<std::string> w, std::string detail) {
    return Certificate{rule_id(r), std::move(w), std::move(detail), anchor(r)};
  };
  const std::string& c1 = k1.canonical_name();
  const std::string& c2 = k2.canonical_name();
  if (c1 == c2) return make(CertificateRule::C4_reflexive, {k1.name, k2.name}, k1.name + " and " + k2.name + " are the same knot");
  if (is_true(k2.flag(Flag::unknot)))
    return make(CertificateRule::C0_unknot, {k1.name, k2.name}, k2.name + " is the unknot");
  if (k1.satellite_of) {
    const auto& s = *k1.satellite_of;
    const std::string construction = k1.name + " is the satellite with pattern " + s.pattern + ", companion " +
                                     s.companion + ", winding number " + std::to_string(s.winding);
    if (s.pattern == c2) return make(CertificateRule::C2_satellite_pattern, {k1.name, s.pattern}, construction);
    if (s.winding == 1 && s.companion == c2)
      return make(CertificateRule::C3_winding_one_companion, {k1.name, s.companion}, construction);
  }
  const auto top = summands(k1);
  if (top.size() >= 2) {
    if (auto used = match_summands(top, summands(k2), known)) {
      std::vector<std::string> witnesses{k1.name};
      witnesses.insert(witnesses.end(), used->begin(), used->end());
      return make(CertificateRule::C1_connected_sum, std::move(witnesses),
                  k1.name + " = " + join(top, " # ") + " has summands dominating " + join(summands(k2), " # "));
    }
  }
  return std::nullopt;
}

std::vector<std::string> Verdict::rule_ids() const {
  std::vector<std::string> ids;
  switch (kind) {
    case Kind::Obstructed:
      for (const auto& r : reports) ids.push_back(r.rule_id);
      break;
    case Kind::Certified:
      if (certificate) ids.push_back(certificate->rule_id);
      break;
    case Kind::Unknown:
      ids = passed;
      break;
    case Kind::Equal:
      break;
  }
  return ids;
}

bool Verdict::has_rule(const std::string& id) const {
  const auto ids = rule_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string kind_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Equal: return "Equal";
    case Verdict::Kind::Certified: return "Certified";
    case Verdict::Kind::Obstructed: return "Obstructed";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return {};
}

Verdict evaluate_pair(const KnotRecord& k1, const KnotRecord& k2, const KnownDominations& known) {
  require_enriched(k1);
  require_enriched(k2);
  Verdict v;
  if (k1.canonical_name() == k2.canonical_name()) {
    v.kind = Verdict::Kind::Equal;
    return v;
  }
  const auto outcomes = evaluate_obstruction_rules(k1, k2);
  for (const auto& o : outcomes)
    if (o.status == RuleStatus::Fired) v.reports.push_back({rule_id(o.rule), o.detail, anchor(o.rule)});
  for (auto& r : rigidity_scan(k1, k2)) v.reports.push_back(std::move(r));
  if (!v.reports.empty()) {
    v.kind = Verdict::Kind::Obstructed;
    return v;
  }
  if (auto c = certificate_search(k1, k2, known)) {
    v.kind = Verdict::Kind::Certified;
    v.certificate = std::move(c);
    return v;
  }
  v.kind = Verdict::Kind::Unknown;
  for (const auto& o : outcomes)
    if (o.status == RuleStatus::Passed) v.passed.push_back(rule_id(o.rule));
  return v;
}

nlohmann::json verdict_to_json(const std::string& name1, const std::string& name2, const Verdict& v) {
  nlohmann::json j;
  j["pair"] = {name1, name2};
  j["verdict"] = kind_name(v.kind);
  auto ids = v.rule_ids();
  j["rules"] = ids;
  nlohmann::json anchors = nlohmann::json::array();
  for (const auto& id : ids) anchors.push_back(anchor_for_id(id));
  j["anchors"] = anchors;
  nlohmann::json details = nlohmann::json::array();
  if (v.kind == Verdict::Kind::Obstructed)
    for (const auto& r : v.reports) details.push_back(r.detail);
  if (v.kind == Verdict::Kind::Certified && v.certificate) {
    details.push_back(v.certificate->detail);
    j["witnesses"] = v.certificate->witnesses;
  }
  if (v.kind == Verdict::Kind::Equal) details.push_back(name1 + " and " + name2 + " are the same knot");
  j["details"] = details;
  return j;
}

int verdict_exit_code(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Equal:
    case Verdict::Kind::Certified: return 0;
    case Verdict::Kind::Obstructed: return 2;
    case Verdict::Kind::Unknown: return 3;
  }
  return 3;
}

}  // namespace knotdom
