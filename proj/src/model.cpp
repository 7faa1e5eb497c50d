#include "edgelease/model.hpp"

#include <algorithm>
#include <sstream>

#include "edgelease/registry.hpp"

namespace edgelease {

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::number: return "number";
    case ValueKind::label: return "label";
    case ValueKind::label_set: return "label set";
  }
  return "?";
}

std::string CapabilityValue::to_display() const {
  std::ostringstream os;
  switch (kind()) {
    case ValueKind::number: os << number(); break;
    case ValueKind::label: os << label(); break;
    case ValueKind::label_set: {
      os << '[';
      bool first = true;
      for (const auto& l : labels()) {
        if (!first) os << ", ";
        os << l;
        first = false;
      }
      os << ']';
      break;
    }
  }
  return os.str();
}

bool Portion::contains(const NodeId& id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

Portion canonicalize(const std::vector<NodeId>& node_ids) {
  if (node_ids.empty()) throw Error("cannot canonicalize an empty node list");
  Portion p{node_ids};
  std::sort(p.members.begin(), p.members.end());
  p.members.erase(std::unique(p.members.begin(), p.members.end()),
                  p.members.end());
  return p;
}

namespace {

// The value kind a resource must declare for the given comparator to apply
// on the featured side.
ValueKind featured_kind(const Registry& registry,
                        const CapabilitySchema& schema) {
  if (schema.is_global()) return ValueKind::number;  // aggregation needs numbers
  return registry.comparator(schema.comparator).left_kind;
}

void check_caps(const Infrastructure& infra, const Registry& registry,
                const std::string& subject, Target target,
                const std::map<std::string, CapabilityValue>& caps,
                ValidationReport& report) {
  for (const auto& [name, value] : caps) {
    const CapabilitySchema* schema = registry.find_schema(name);
    if (!schema) {
      report.push_back({subject, "undeclared capability '" + name + "'"});
      continue;
    }
    if (schema->target != target) {
      report.push_back({subject, "capability '" + name + "' is declared for " +
                                     (schema->target == Target::node
                                          ? "nodes"
                                          : "links") +
                                     ", not usable here"});
      continue;
    }
    ValueKind want = featured_kind(registry, *schema);
    if (value.kind() != want) {
      report.push_back({subject, "capability '" + name + "' expects a " +
                                     std::string(to_string(want)) + ", got a " +
                                     to_string(value.kind())});
    }
  }
  (void)infra;
}

}  // namespace

ValidationReport validate_infrastructure(const Infrastructure& infra,
                                         const Registry& registry) {
  ValidationReport report;
  for (const auto& [id, node] : infra.nodes) {
    if (!std::isfinite(node.profit)) {
      report.push_back({"node " + id, "profit is not a finite number"});
    }
    check_caps(infra, registry, "node " + id, Target::node, node.caps, report);
  }
  for (const auto& [key, link] : infra.links) {
    std::string subject = "link " + key.first + " -> " + key.second;
    if (key.first == key.second) {
      report.push_back({subject, "link endpoints must differ"});
    }
    for (const NodeId* end : {&key.first, &key.second}) {
      if (!infra.find_node(*end)) {
        report.push_back({subject, "endpoint '" + *end + "' is not a node"});
      }
    }
    check_caps(infra, registry, subject, Target::link, link.caps, report);
  }
  return report;
}

}  // namespace edgelease
