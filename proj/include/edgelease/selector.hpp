#pragma once

#include <vector>

#include "edgelease/model.hpp"
#include "edgelease/registry.hpp"

namespace edgelease {

// reference: a portion is eligible iff some insertion order exists in which
// global requirements first become satisfied exactly at the full set.
// subset: any source-containing set passing all checks is eligible.
enum class Semantics { reference, subset };

const char* to_string(Semantics semantics);

struct SolveOptions {
  Semantics semantics = Semantics::reference;
  // When set, a member lacking a globally-required capability fails the
  // requirement instead of being skipped during aggregation.
  bool strict_globals = false;
};

struct SplitRequirements {
  std::vector<Requirement> node_reqs;
  std::vector<Requirement> link_reqs;
  std::vector<Requirement> global_reqs;
};

// Partitions by schema target/aggregator, preserving relative order.
// Unknown capability names are an error.
SplitRequirements split_requirements(const Request& request,
                                     const Registry& registry);

// True iff the node declares every required capability and
// compare(featured, op, requested) holds. Missing capability -> false.
bool satisfies_node_reqs(const NodeId& node,
                         const std::vector<Requirement>& node_reqs,
                         const Infrastructure& infra, const Registry& registry);

// Checks only the directed link candidate -> source. Missing link or
// capability -> false.
bool satisfies_link_reqs(const NodeId& candidate, const NodeId& source,
                         const std::vector<Requirement>& link_reqs,
                         const Infrastructure& infra, const Registry& registry);

// Aggregates each global capability over the members that declare it
// (ascending NodeId fold order) and evaluates compare(requested, op,
// aggregated). Empty member set -> false.
bool satisfies_global_reqs(const std::vector<Requirement>& global_reqs,
                           const std::vector<NodeId>& portion_members,
                           const Infrastructure& infra,
                           const Registry& registry,
                           bool strict_globals = false);

// Sum of member profits (ascending NodeId fold order), source included.
double portion_profit(const Portion& portion, const Infrastructure& infra);

// All eligible portions, canonical and sorted. Stats, when given, record
// the number of search-state expansions.
std::vector<PortionResult> enumerate_portions(const Request& request,
                                              const Infrastructure& infra,
                                              const Registry& registry,
                                              const SolveOptions& options = {},
                                              SolveStats* stats = nullptr);

// All candidates tied at the maximum profit, sorted by portion; ties are
// compared exactly. Empty in -> empty out.
std::vector<PortionResult> best_portions(
    const std::vector<PortionResult>& candidates);

SolveResult solve(const Request& request, const Infrastructure& infra,
                  const Registry& registry, const SolveOptions& options = {});

}  // namespace edgelease
