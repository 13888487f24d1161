#include "knotdom/poset.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>

namespace knotdom {

std::vector<std::string> DominationGraph::successors(const std::string& from) const {
  std::vector<std::string> out;
  for (auto it = edges.lower_bound({from, std::string()}); it != edges.end() && it->first.first == from; ++it)
    out.push_back(it->first.second);
  return out;
}

EdgeSet DominationGraph::edge_set() const {
  EdgeSet out;
  for (const auto& [key, cert] : edges) out.insert(key);
  return out;
}

namespace {

using Pair = std::pair<const KnotRecord*, const KnotRecord*>;

std::vector<Verdict> evaluate_all(const std::vector<Pair>& pairs, const KnownDominations& known, unsigned threads) {
  std::vector<Verdict> out(pairs.size());
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) out[i] = evaluate_pair(*pairs[i].first, *pairs[i].second, known);
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size()))));
  if (threads == 1) {
    work(0, pairs.size());
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < threads; ++w)
    tasks.push_back(std::async(std::launch::async, work, pairs.size() * w / threads, pairs.size() * (w + 1) / threads));
  for (auto& t : tasks) t.get();
  return out;
}

KnownDominations known_from(const DominationGraph& g, const Corpus& corpus) {
  KnownDominations known;
  for (const auto& [key, cert] : g.edges)
    known.insert({corpus.at(key.first).canonical_name(), corpus.at(key.second).canonical_name()});
  return known;
}

std::vector<std::string> path_of(const DominationGraph& g, const std::string& from, const std::string& to) {
  const auto& c = g.edges.at({from, to});
  if (c.rule_id == "C5") return c.witnesses;
  return {from, to};
}

// One Floyd-Warshall sweep. Returns true when an edge was added.
bool close_transitively(DominationGraph& g) {
  bool changed = false;
  for (const auto& k : g.nodes)
    for (const auto& i : g.nodes) {
      if (i == k || !g.has_edge(i, k)) continue;
      for (const auto& j : g.nodes) {
        if (j == i || j == k || !g.has_edge(k, j) || g.has_edge(i, j)) continue;
        auto chain = path_of(g, i, k);
        auto tail = path_of(g, k, j);
        chain.insert(chain.end(), tail.begin() + 1, tail.end());
        g.edges[{i, j}] = Certificate{"C5", std::move(chain), "composition of certified dominations",
                                      anchor(CertificateRule::C5_transitive)};
        changed = true;
      }
    }
  return changed;
}

}  // namespace

DominationGraph build_graph(const Corpus& corpus, unsigned threads) {
  DominationGraph g;
  g.nodes = corpus.names();
  std::vector<Pair> pairs;
  for (const auto& a : g.nodes)
    for (const auto& b : g.nodes)
      if (a != b) pairs.emplace_back(&corpus.at(a), &corpus.at(b));
  g.pairs_evaluated = pairs.size();

  // Certified edges, then closure; repeat while summand matching finds more.
  for (;;) {
    const auto verdicts = evaluate_all(pairs, known_from(g, corpus), threads);
    bool added = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (verdicts[i].kind != Verdict::Kind::Certified) continue;
      const auto key = std::make_pair(pairs[i].first->name, pairs[i].second->name);
      if (g.edges.count(key)) continue;
      g.edges.emplace(key, *verdicts[i].certificate);
      added = true;
    }
    while (close_transitively(g)) added = true;
    if (!added) break;
  }

  // Audit: certificates independent of the verdict order, and every edge.
  const auto known = known_from(g, corpus);
  for (const auto& [k1, k2] : pairs) {
    const auto fired = [&] {
      auto r = obstruction_scan(*k1, *k2);
      for (auto& x : rigidity_scan(*k1, *k2)) r.push_back(std::move(x));
      return r;
    }();
    if (fired.empty()) continue;
    std::string ids;
    for (const auto& r : fired) ids += (ids.empty() ? "" : ",") + r.rule_id;
    if (auto c = certificate_search(*k1, *k2, known))
      g.audit_log.push_back("conflict: " + k1->name + " -> " + k2->name + " certified by " + c->rule_id +
                            " and obstructed by " + ids);
    else if (g.has_edge(k1->name, k2->name))
      g.audit_log.push_back("conflict: edge " + k1->name + " -> " + k2->name + " (" +
                            g.edges.at({k1->name, k2->name}).rule_id + ") obstructed by " + ids);
  }
  for (const auto& [key, cert] : g.edges)
    if (key.first < key.second && g.has_edge(key.second, key.first))
      g.audit_log.push_back("cycle: " + key.first + " <-> " + key.second);
  return g;
}

std::vector<std::string> longest_chain(const DominationGraph& g, const std::string& start) {
  if (!std::binary_search(g.nodes.begin(), g.nodes.end(), start))
    throw std::out_of_range("unknown knot '" + start + "'");
  std::map<std::string, std::vector<std::string>> memo;
  std::set<std::string> on_stack;
  std::function<const std::vector<std::string>&(const std::string&)> best = [&](const std::string& node)
      -> const std::vector<std::string>& {
    if (auto it = memo.find(node); it != memo.end()) return it->second;
    if (!on_stack.insert(node).second) throw std::logic_error("domination graph has a cycle through " + node);
    std::vector<std::string> result{node};
    for (const auto& next : g.successors(node)) {
      std::vector<std::string> candidate{node};
      const auto& rest = best(next);
      candidate.insert(candidate.end(), rest.begin(), rest.end());
      if (candidate.size() > result.size() || (candidate.size() == result.size() && candidate < result))
        result = std::move(candidate);
    }
    on_stack.erase(node);
    return memo.emplace(node, std::move(result)).first->second;
  };
  return best(start);
}

std::vector<std::vector<std::string>> all_chains(const DominationGraph& g, const std::string& start) {
  if (!std::binary_search(g.nodes.begin(), g.nodes.end(), start))
    throw std::out_of_range("unknown knot '" + start + "'");
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> path{start};
  std::function<void()> walk = [&] {
    out.push_back(path);
    for (const auto& next : g.successors(path.back())) {
      if (std::find(path.begin(), path.end(), next) != path.end())
        throw std::logic_error("domination graph has a cycle through " + next);
      path.push_back(next);
      walk();
      path.pop_back();
    }
  };
  walk();
  return out;
}

std::vector<ChainBound> chain_length_bound(const KnotRecord& r) {
  std::vector<ChainBound> out;
  if (is_true(r.flag(Flag::free)) && r.ghat) out.push_back({*r.ghat, "free_ghat", "total_length"});
  if (is_true(r.flag(Flag::alternating)) && r.delta) {
    const LaurentPoly d = normalize(*r.delta);
    if (is_prime_power(abs(d.leading_coefficient())))
      out.push_back({d.max_degree(), "alternating_degree", "alternating_count"});
  }
  return out;
}

ChainAudit audit_chains(const DominationGraph& g, const Corpus& corpus) {
  ChainAudit audit;
  for (const auto& start : g.nodes) {
    const auto& k0 = corpus.at(start);
    const auto bounds = chain_length_bound(k0);
    for (const auto& chain : all_chains(g, start)) {
      ++audit.chains_checked;
      const int n = static_cast<int>(chain.size()) - 1;
      const auto& kn = corpus.at(chain.back());
      auto describe = [&chain] {
        std::string s;
        for (const auto& c : chain) s += (s.empty() ? "" : " > ") + c;
        return s;
      };
      if (k0.ghat && kn.ghat) {
        ++audit.refined_checks;
        if (n + *kn.ghat > *k0.ghat)
          audit.violations.push_back(describe() + ": " + std::to_string(n) + " + " + std::to_string(*kn.ghat) +
                                     " > ghat " + std::to_string(*k0.ghat));
      }
      for (const auto& b : bounds) {
        if (!b.value) continue;
        int measured = n;
        if (b.scope == "alternating_count")
          measured = static_cast<int>(std::count_if(chain.begin(), chain.end(), [&corpus](const std::string& c) {
            return is_true(corpus.at(c).flag(Flag::alternating));
          }));
        if (measured > *b.value)
          audit.violations.push_back(describe() + ": " + b.scope + " " + std::to_string(measured) + " exceeds " +
                                     b.rule + " bound " + std::to_string(*b.value));
      }
    }
  }
  return audit;
}

EdgeSet transitive_closure(const std::vector<std::string>& nodes, EdgeSet edges) {
  for (const auto& k : nodes)
    for (const auto& i : nodes)
      if (edges.count({i, k}))
        for (const auto& j : nodes)
          if (i != j && edges.count({k, j})) edges.insert({i, j});
  return edges;
}

EdgeSet transitive_reduction(const std::vector<std::string>& nodes, const EdgeSet& closed) {
  EdgeSet out;
  for (const auto& [a, b] : closed) {
    bool implied = false;
    for (const auto& m : nodes)
      if (m != a && m != b && closed.count({a, m}) && closed.count({m, b})) {
        implied = true;
        break;
      }
    if (!implied) out.insert({a, b});
  }
  return out;
}

nlohmann::json chain_bound_to_json(const ChainBound& b) {
  nlohmann::json j;
  j["rule"] = b.rule;
  j["scope"] = b.scope;
  j["value"] = b.value ? nlohmann::json(*b.value) : nlohmann::json("unbounded");
  return j;
}

nlohmann::json graph_to_json(const DominationGraph& g) {
  nlohmann::json j;
  j["nodes"] = g.nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [key, cert] : g.edges) {
    nlohmann::json e;
    e["from"] = key.first;
    e["to"] = key.second;
    e["rule"] = cert.rule_id;
    e["witnesses"] = cert.witnesses;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  j["audit_log"] = g.audit_log;
  j["pairs_evaluated"] = g.pairs_evaluated;
  return j;
}

}  // namespace knotdom
