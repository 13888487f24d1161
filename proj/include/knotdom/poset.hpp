#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotdom/domination.hpp"
#include "knotdom/knotbase.hpp"

namespace knotdom {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

struct DominationGraph {
  std::vector<std::string> nodes;  // sorted
  /// (dominator, dominated) -> certificate. C5 witnesses hold the full path.
  std::map<std::pair<std::string, std::string>, Certificate> edges;
  std::vector<std::string> audit_log;
  /// Number of ordered pairs evaluated.
  std::size_t pairs_evaluated = 0;

  bool has_edge(const std::string& from, const std::string& to) const { return edges.count({from, to}) > 0; }
  std::vector<std::string> successors(const std::string& from) const;
  EdgeSet edge_set() const;
};

/// Evaluates every ordered pair (across `threads` workers), adds Certified
/// edges, then alternates summand matching against known edges with
/// transitive closure until nothing changes. Conflicts go to audit_log.
DominationGraph build_graph(const Corpus& corpus, unsigned threads = 1);

/// Maximum-length chain of edges from start; ties go to the lexicographically
/// smallest name sequence. Throws std::out_of_range for an unknown start.
std::vector<std::string> longest_chain(const DominationGraph& g, const std::string& start);

/// Every maximal and non-maximal chain from start, including [start].
std::vector<std::vector<std::string>> all_chains(const DominationGraph& g, const std::string& start);

struct ChainBound {
  std::optional<int> value;  // nullopt = unbounded
  std::string rule;          // free_ghat | alternating_degree
  std::string scope;         // total_length | alternating_count
  friend bool operator==(const ChainBound&, const ChainBound&) = default;
};

std::vector<ChainBound> chain_length_bound(const KnotRecord& r);

struct ChainAudit {
  std::size_t chains_checked = 0;
  std::size_t refined_checks = 0;  // chains where both end ghat values are known
  std::vector<std::string> violations;
};

/// Checks every chain against its start's bounds and the refined
/// n + ghat(k_n) <= ghat(k_0) inequality.
ChainAudit audit_chains(const DominationGraph& g, const Corpus& corpus);

EdgeSet transitive_closure(const std::vector<std::string>& nodes, EdgeSet edges);
EdgeSet transitive_reduction(const std::vector<std::string>& nodes, const EdgeSet& closed);

nlohmann::json chain_bound_to_json(const ChainBound& b);
/// Nodes sorted by name, edges sorted by (from, to).
nlohmann::json graph_to_json(const DominationGraph& g);

}  // namespace knotdom
