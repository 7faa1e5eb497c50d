#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edgelease/model.hpp"
#include "edgelease/registry.hpp"

namespace edgelease {

// One directed-pair template: matching ordered node pairs get latency and
// bandwidth records (forward = from_class side toward to_class side).
struct LinkRule {
  std::string from_class;
  std::string to_class;
  bool same_location = true;
  double latency_ms = 0.0;
  double bandwidth_mbps_forward = 0.0;
  double bandwidth_mbps_reverse = 0.0;
};

struct Scenario {
  Registry registry;
  Infrastructure infrastructure;
  std::vector<Request> requests;

  const Request* find_request(const std::string& id) const;
};

// Parses the four-section scenario document (schemas/nodes/link_rules/
// links/requests), expands link rules, and validates the result.
// Parse or schema problems raise ParseError with location info.
Scenario load_scenario(const std::string& path);
Scenario load_scenario(std::istream& in, const std::string& origin = "<stream>");

std::string serialize_scenario(const Scenario& scenario);

// Generates directed latency/bandwidth records for every ordered node pair
// matching exactly one rule; two rules matching the same ordered pair is an
// ambiguity error. Pairs matching no rule get no link.
std::vector<LinkRecord> expand_link_rules(
    const std::map<NodeId, NodeRecord>& nodes,
    const std::vector<LinkRule>& rules);

struct GeneratorProfile {
  std::string name = "default";
  double link_density = 0.6;  // probability an ordered pair gets a link
};

// Deterministic per seed; every generated value passes validation.
Infrastructure generate_random_infrastructure(std::uint64_t seed,
                                              std::size_t n_nodes,
                                              const GeneratorProfile& profile,
                                              const Registry& registry);

}  // namespace edgelease
