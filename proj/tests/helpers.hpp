#pragma once

#include <random>
#include <string>
#include <vector>

#include "edgelease/model.hpp"
#include "edgelease/registry.hpp"
#include "edgelease/scenario.hpp"

namespace edgelease::testing {

inline std::string fixture(const std::string& name) {
  return std::string(EDGELEASE_FIXTURE_DIR) + "/" + name;
}

// Small hand-built infrastructure helper.
class InfraBuilder {
 public:
  InfraBuilder& node(const NodeId& id, double profit,
                     std::map<std::string, CapabilityValue> caps = {}) {
    NodeRecord n;
    n.id = id;
    n.profit = profit;
    n.caps = std::move(caps);
    infra_.nodes.emplace(id, std::move(n));
    return *this;
  }

  InfraBuilder& link(const NodeId& from, const NodeId& to, double latency,
                     double bandwidth) {
    LinkRecord l{from, to, {}};
    l.caps.emplace("latency", CapabilityValue(latency));
    l.caps.emplace("bandwidth", CapabilityValue(bandwidth));
    infra_.links.emplace(std::make_pair(from, to), std::move(l));
    return *this;
  }

  Infrastructure build() const { return infra_; }

 private:
  Infrastructure infra_;
};

// Deterministic random request against a generated infrastructure, mixing
// local link/node requirements with sum- and product-aggregated globals.
inline Request random_request(std::mt19937_64& rng,
                              const Infrastructure& infra) {
  std::vector<NodeId> ids;
  for (const auto& [id, n] : infra.nodes) ids.push_back(id);
  Request request;
  request.id = "gen";
  request.source = ids[rng() % ids.size()];
  request.max_extra_nodes = static_cast<std::uint32_t>(rng() % 4);

  request.requirements.push_back(
      {"hardware", CapabilityValue(1.0 + static_cast<double>(rng() % 60))});
  if (rng() % 2) {
    request.requirements.push_back(
        {"latency", CapabilityValue(30.0 + static_cast<double>(rng() % 280))});
    request.requirements.push_back(
        {"bandwidth", CapabilityValue(5.0 + static_cast<double>(rng() % 120))});
  }
  if (rng() % 2) {
    request.requirements.push_back(
        {"availability",
         CapabilityValue(0.5 + 0.005 * static_cast<double>(rng() % 100))});
  }
  if (rng() % 3 == 0) {
    request.requirements.push_back(
        {"sustainability",
         CapabilityValue(0.01 * static_cast<double>(rng() % 60))});
  }
  if (rng() % 3 == 0) {
    LabelSet wanted;
    if (rng() % 2) wanted.insert("antimalware");
    if (rng() % 2) wanted.insert("encryptedStorage");
    request.requirements.push_back({"security", CapabilityValue(wanted)});
  }
  if (rng() % 4 == 0) {
    request.requirements.push_back(
        {"location", CapabilityValue(LabelSet{"eu", "us"})});
  }
  return request;
}

}  // namespace edgelease::testing
