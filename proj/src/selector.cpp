#include "edgelease/selector.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace edgelease {

const char* to_string(Semantics semantics) {
  return semantics == Semantics::reference ? "reference" : "subset";
}

SplitRequirements split_requirements(const Request& request,
                                     const Registry& registry) {
  SplitRequirements split;
  for (const Requirement& req : request.requirements) {
    const CapabilitySchema& schema = registry.schema(req.capability);
    if (schema.is_global()) {
      split.global_reqs.push_back(req);
    } else if (schema.target == Target::link) {
      split.link_reqs.push_back(req);
    } else {
      split.node_reqs.push_back(req);
    }
  }
  return split;
}

bool satisfies_node_reqs(const NodeId& node,
                         const std::vector<Requirement>& node_reqs,
                         const Infrastructure& infra,
                         const Registry& registry) {
  const NodeRecord* record = infra.find_node(node);
  if (!record) throw Error("unknown node '" + node + "'");
  for (const Requirement& req : node_reqs) {
    auto it = record->caps.find(req.capability);
    if (it == record->caps.end()) return false;  // missing fact: clause fails
    const CapabilitySchema& schema = registry.schema(req.capability);
    if (!registry.compare(it->second, schema.comparator, req.target)) {
      return false;
    }
  }
  return true;
}

bool satisfies_link_reqs(const NodeId& candidate, const NodeId& source,
                         const std::vector<Requirement>& link_reqs,
                         const Infrastructure& infra,
                         const Registry& registry) {
  if (link_reqs.empty()) return true;
  const LinkRecord* link = infra.find_link(candidate, source);
  if (!link) return false;
  for (const Requirement& req : link_reqs) {
    auto it = link->caps.find(req.capability);
    if (it == link->caps.end()) return false;
    const CapabilitySchema& schema = registry.schema(req.capability);
    if (!registry.compare(it->second, schema.comparator, req.target)) {
      return false;
    }
  }
  return true;
}

bool satisfies_global_reqs(const std::vector<Requirement>& global_reqs,
                           const std::vector<NodeId>& portion_members,
                           const Infrastructure& infra,
                           const Registry& registry, bool strict_globals) {
  if (portion_members.empty()) return false;
  std::vector<NodeId> members = portion_members;
  std::sort(members.begin(), members.end());
  for (const Requirement& req : global_reqs) {
    const CapabilitySchema& schema = registry.schema(req.capability);
    std::vector<double> values;
    values.reserve(members.size());
    for (const NodeId& m : members) {
      const NodeRecord* record = infra.find_node(m);
      if (!record) throw Error("unknown node '" + m + "'");
      auto it = record->caps.find(req.capability);
      if (it == record->caps.end()) {
        if (strict_globals) return false;
        continue;  // findall silently skips members lacking the capability
      }
      values.push_back(it->second.number());
    }
    double aggregated = registry.aggregate(values, *schema.aggregator);
    // Globals compare requested vs aggregated, not the other way around.
    if (!registry.compare(req.target, schema.comparator,
                          CapabilityValue(aggregated))) {
      return false;
    }
  }
  return true;
}

double portion_profit(const Portion& portion, const Infrastructure& infra) {
  double profit = 0.0;
  for (const NodeId& m : portion.members) {  // members are already sorted
    const NodeRecord* record = infra.find_node(m);
    if (!record) throw Error("unknown node '" + m + "'");
    profit += record->profit;
  }
  return profit;
}

namespace {

struct Search {
  const Infrastructure& infra;
  const Registry& registry;
  const SplitRequirements& split;
  const SolveOptions& options;
  std::vector<NodeId> candidates;  // ascending NodeId
  std::size_t max_size = 0;
  std::set<std::vector<NodeId>> visited;
  std::set<std::vector<NodeId>> eligible;
  std::uint64_t expansions = 0;

  bool globals_pass(const std::vector<NodeId>& members) {
    return satisfies_global_reqs(split.global_reqs, members, infra, registry,
                                 options.strict_globals);
  }

  // Depth-first extension mirroring the reference recursion: a state that
  // satisfies the globals is eligible and is never extended further.
  void extend(std::vector<NodeId>& members) {
    ++expansions;
    if (globals_pass(members)) {
      eligible.insert(members);
      return;
    }
    if (members.size() >= max_size) return;
    for (const NodeId& m : candidates) {
      auto pos = std::lower_bound(members.begin(), members.end(), m);
      if (pos != members.end() && *pos == m) continue;
      members.insert(pos, m);
      if (!visited.contains(members)) {
        visited.insert(members);
        extend(members);
      }
      members.erase(std::find(members.begin(), members.end(), m));
    }
  }
};

}  // namespace

std::vector<PortionResult> enumerate_portions(const Request& request,
                                              const Infrastructure& infra,
                                              const Registry& registry,
                                              const SolveOptions& options,
                                              SolveStats* stats) {
  if (!infra.find_node(request.source)) {
    throw Error("request '" + request.id + "': unknown source node '" +
                request.source + "'");
  }
  SplitRequirements split = split_requirements(request, registry);

  std::vector<NodeId> candidates;
  for (const auto& [id, node] : infra.nodes) {
    if (id == request.source) continue;
    if (satisfies_node_reqs(id, split.node_reqs, infra, registry) &&
        satisfies_link_reqs(id, request.source, split.link_reqs, infra,
                            registry)) {
      candidates.push_back(id);
    }
  }

  Search search{infra, registry, split, options};
  search.candidates = std::move(candidates);
  search.max_size = static_cast<std::size_t>(request.max_extra_nodes) + 1;

  std::vector<NodeId> members{request.source};
  if (options.semantics == Semantics::reference) {
    search.visited.insert(members);
    search.extend(members);
  } else {
    // Plain-subset semantics: every locally-feasible, globally-satisfying
    // source-containing set of admissible size is eligible.
    std::vector<NodeId> picked;
    auto visit = [&](auto&& self, std::size_t next_index) -> void {
      ++search.expansions;
      std::vector<NodeId> s = picked;
      s.push_back(request.source);
      std::sort(s.begin(), s.end());
      if (search.globals_pass(s)) search.eligible.insert(s);
      if (s.size() >= search.max_size) return;
      for (std::size_t i = next_index; i < search.candidates.size(); ++i) {
        picked.push_back(search.candidates[i]);
        self(self, i + 1);
        picked.pop_back();
      }
    };
    visit(visit, 0);
  }

  std::vector<PortionResult> results;
  results.reserve(search.eligible.size());
  for (const auto& members_set : search.eligible) {
    Portion portion = canonicalize(members_set);
    double profit = portion_profit(portion, infra);
    results.push_back({std::move(portion), profit});
  }
  std::sort(results.begin(), results.end());
  if (stats) stats->expansions = search.expansions;
  return results;
}

std::vector<PortionResult> best_portions(
    const std::vector<PortionResult>& candidates) {
  if (candidates.empty()) return {};
  double best = candidates.front().profit;
  for (const PortionResult& c : candidates) best = std::max(best, c.profit);
  std::vector<PortionResult> out;
  for (const PortionResult& c : candidates) {
    if (c.profit == best) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const PortionResult& a, const PortionResult& b) {
              return a.portion < b.portion;
            });
  return out;
}

SolveResult solve(const Request& request, const Infrastructure& infra,
                  const Registry& registry, const SolveOptions& options) {
  SolveResult result;
  auto start = std::chrono::steady_clock::now();
  std::vector<PortionResult> eligible =
      enumerate_portions(request, infra, registry, options, &result.stats);
  result.eligible_count = eligible.size();
  result.optimal = best_portions(eligible);
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace edgelease
