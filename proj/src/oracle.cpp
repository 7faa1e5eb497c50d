#include "edgelease/oracle.hpp"

#include <algorithm>

namespace edgelease::oracle {

namespace {

constexpr std::size_t kMaxNodes = 12;

bool locals_ok(const NodeId& member, const Request& request,
               const SplitRequirements& split, const Infrastructure& infra,
               const Registry& registry) {
  return satisfies_node_reqs(member, split.node_reqs, infra, registry) &&
         satisfies_link_reqs(member, request.source, split.link_reqs, infra,
                             registry);
}

// Some permutation of the extras makes every proper prefix fail the globals
// while the full set passes them.
bool reachable(const std::vector<NodeId>& extras, const Request& request,
               const SplitRequirements& split, const Infrastructure& infra,
               const Registry& registry, bool strict) {
  std::vector<NodeId> perm = extras;
  std::sort(perm.begin(), perm.end());
  do {
    bool all_prefixes_fail = true;
    std::vector<NodeId> prefix{request.source};
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (satisfies_global_reqs(split.global_reqs, prefix, infra, registry,
                                strict)) {
        all_prefixes_fail = false;
        break;
      }
      prefix.push_back(perm[i]);
    }
    if (all_prefixes_fail) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<PortionResult> brute_force_enumerate(const Request& request,
                                                 const Infrastructure& infra,
                                                 const Registry& registry,
                                                 const SolveOptions& options) {
  if (infra.nodes.size() > kMaxNodes) {
    throw Error("oracle limited to " + std::to_string(kMaxNodes) + " nodes");
  }
  if (!infra.find_node(request.source)) {
    throw Error("request '" + request.id + "': unknown source node '" +
                request.source + "'");
  }
  SplitRequirements split = split_requirements(request, registry);

  std::vector<NodeId> others;
  for (const auto& [id, node] : infra.nodes) {
    if (id != request.source) others.push_back(id);
  }

  std::vector<PortionResult> results;
  // Every subset of the non-source nodes, by bitmask.
  for (std::uint64_t mask = 0; mask < (1ull << others.size()); ++mask) {
    std::vector<NodeId> extras;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1ull << i)) extras.push_back(others[i]);
    }
    if (extras.size() > request.max_extra_nodes) continue;
    bool ok = true;
    for (const NodeId& m : extras) {
      if (!locals_ok(m, request, split, infra, registry)) ok = false;
    }
    if (!ok) continue;
    std::vector<NodeId> full = extras;
    full.push_back(request.source);
    if (!satisfies_global_reqs(split.global_reqs, full, infra, registry,
                               options.strict_globals)) {
      continue;
    }
    if (options.semantics == Semantics::reference &&
        !reachable(extras, request, split, infra, registry,
                   options.strict_globals)) {
      continue;
    }
    Portion portion = canonicalize(full);
    double profit = portion_profit(portion, infra);
    results.push_back({std::move(portion), profit});
  }
  std::sort(results.begin(), results.end());
  return results;
}

std::vector<PortionResult> brute_force_best(const Request& request,
                                            const Infrastructure& infra,
                                            const Registry& registry,
                                            const SolveOptions& options) {
  std::vector<PortionResult> all =
      brute_force_enumerate(request, infra, registry, options);
  if (all.empty()) return {};
  double best = all.front().profit;
  for (const PortionResult& r : all) best = std::max(best, r.profit);
  std::vector<PortionResult> out;
  for (const PortionResult& r : all) {
    if (r.profit == best) out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const PortionResult& a, const PortionResult& b) {
              return a.portion < b.portion;
            });
  return out;
}

}  // namespace edgelease::oracle
