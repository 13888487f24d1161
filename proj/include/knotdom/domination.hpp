#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotdom/knotbase.hpp"

namespace knotdom {

/// Necessary conditions for k1 >= k2. A violated condition obstructs the pair.
enum class ObstructionRule {
  O1_alexander,
  O2_genus,
  O3_determinant,
  O4_volume,
  O5_two_bridge,
  O6_montesinos,
  O7_ap_class,
  O8_free,
  O9_ghat,
  O10_orderability,
  O11_mutation,
};

/// Conditions under which k1 >= k2 forces k1 = k2.
enum class RigidityRule { R1_genus_volume, R2_fibred_genus, R3_nilpotent_degree, R4_free_ghat, R5_double_cover, R6_hyperbolic_volume };

/// Constructions that produce a degree-one map.
enum class CertificateRule { C0_unknot, C1_connected_sum, C2_satellite_pattern, C3_winding_one_companion, C4_reflexive, C5_transitive };

inline constexpr int kObstructionRuleCount = 11;
inline constexpr int kRigidityRuleCount = 6;

std::string rule_id(ObstructionRule r);
std::string rule_id(RigidityRule r);
std::string rule_id(CertificateRule r);
std::string anchor(ObstructionRule r);
std::string anchor(RigidityRule r);
std::string anchor(CertificateRule r);
/// Anchor for any id produced by rule_id ("O3", "R5", "C1", ...).
std::string anchor_for_id(const std::string& id);

/// A fired obstruction or rigidity rule. `detail` quotes both compared values.
struct ObstructionReport {
  std::string rule_id;
  std::string detail;
  std::string reference;
};

struct Certificate {
  std::string rule_id;
  /// Record names forming the construction, dominating knot first.
  std::vector<std::string> witnesses;
  std::string detail;
  std::string reference;
};

enum class RuleStatus { Fired, Passed, Silent };

struct RuleOutcome {
  ObstructionRule rule;
  RuleStatus status;
  std::string detail;
};

/// Ordered pairs (dominating, dominated) of canonical names already certified.
using KnownDominations = std::set<std::pair<std::string, std::string>>;

/// Every obstruction rule with its status. A rule fires only on definite inputs.
std::vector<RuleOutcome> evaluate_obstruction_rules(const KnotRecord& k1, const KnotRecord& k2);
std::vector<ObstructionReport> obstruction_scan(const KnotRecord& k1, const KnotRecord& k2);
std::vector<ObstructionReport> rigidity_scan(const KnotRecord& k1, const KnotRecord& k2);

/// First matching construction in the order C4, C0, C2, C3, C1.
std::optional<Certificate> certificate_search(const KnotRecord& k1, const KnotRecord& k2,
                                              const KnownDominations& known = {});

struct Verdict {
  enum class Kind { Equal, Certified, Obstructed, Unknown };

  Kind kind = Kind::Unknown;
  std::optional<Certificate> certificate;
  std::vector<ObstructionReport> reports;  // Obstructed
  std::vector<std::string> passed;         // Unknown

  /// Fired rule ids for Obstructed, the certificate id for Certified, passed ids for Unknown.
  std::vector<std::string> rule_ids() const;
  bool has_rule(const std::string& id) const;
};

std::string kind_name(Verdict::Kind kind);

Verdict evaluate_pair(const KnotRecord& k1, const KnotRecord& k2, const KnownDominations& known = {});

/// {"anchors", "details", "pair", "rules", "verdict"[, "witnesses"]}; keys sorted.
nlohmann::json verdict_to_json(const std::string& name1, const std::string& name2, const Verdict& v);

/// Exit status of `check`: 0 equal/certified, 2 obstructed, 3 unknown.
int verdict_exit_code(const Verdict& v);

}  // namespace knotdom
