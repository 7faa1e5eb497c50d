#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace edgelease {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on malformed scenario input (maps to CLI exit code 1).
class ParseError : public Error {
 public:
  using Error::Error;
};

using NodeId = std::string;
using LabelSet = std::set<std::string>;

enum class ValueKind { number, label, label_set };

const char* to_string(ValueKind kind);

// A capability value: a finite number, a label, or a set of labels.
class CapabilityValue {
 public:
  CapabilityValue() : data_(0.0) {}
  CapabilityValue(double number) : data_(number) {
    if (!std::isfinite(number)) throw Error("capability value must be finite");
  }
  CapabilityValue(const char* label) : data_(std::string(label)) {}
  CapabilityValue(std::string label) : data_(std::move(label)) {}
  CapabilityValue(LabelSet labels) : data_(std::move(labels)) {}

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
  bool is_number() const { return kind() == ValueKind::number; }

  double number() const { return get<double>("number"); }
  const std::string& label() const { return get<std::string>("label"); }
  const LabelSet& labels() const { return get<LabelSet>("label set"); }

  bool operator==(const CapabilityValue& other) const = default;

  std::string to_display() const;

 private:
  template <class T>
  const T& get(const char* wanted) const {
    if (const T* v = std::get_if<T>(&data_)) return *v;
    throw Error(std::string("expected a ") + wanted + ", got a " +
                to_string(kind()));
  }

  std::variant<double, std::string, LabelSet> data_;
};

enum class Target { node, link };

// Declares a capability: where it lives, how requests compare against it,
// and (for global requirements) how member values are aggregated.
struct CapabilitySchema {
  std::string name;
  Target target = Target::node;
  std::string comparator;
  std::optional<std::string> aggregator;  // present <=> global requirement

  bool is_global() const { return aggregator.has_value(); }
  bool operator==(const CapabilitySchema&) const = default;
};

struct NodeRecord {
  NodeId id;
  double profit = 0.0;  // EUR/hour
  std::optional<std::string> node_class;  // access_point | edge | cloud
  std::optional<std::string> location;    // annotation used by link rules
  std::map<std::string, CapabilityValue> caps;

  bool operator==(const NodeRecord&) const = default;
};

// Links are directed: (from, to) and (to, from) are independent records.
struct LinkRecord {
  NodeId from;
  NodeId to;
  std::map<std::string, CapabilityValue> caps;

  bool operator==(const LinkRecord&) const = default;
};

struct Requirement {
  std::string capability;
  CapabilityValue target;

  bool operator==(const Requirement&) const = default;
};

struct Request {
  std::string id;
  NodeId source;
  std::uint32_t max_extra_nodes = 0;
  std::vector<Requirement> requirements;
};

class Registry;  // registry.hpp

// Immutable after load; safe to share read-only across workers.
struct Infrastructure {
  std::map<NodeId, NodeRecord> nodes;
  std::map<std::pair<NodeId, NodeId>, LinkRecord> links;

  const NodeRecord* find_node(const NodeId& id) const {
    auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
  }
  const LinkRecord* find_link(const NodeId& from, const NodeId& to) const {
    auto it = links.find({from, to});
    return it == links.end() ? nullptr : &it->second;
  }

  bool operator==(const Infrastructure&) const = default;
};

// Canonical (sorted, duplicate-free) node set containing the request source.
struct Portion {
  std::vector<NodeId> members;

  bool contains(const NodeId& id) const;
  auto operator<=>(const Portion&) const = default;
};

// Throws on empty input; otherwise sorts and deduplicates.
Portion canonicalize(const std::vector<NodeId>& node_ids);

struct PortionResult {
  Portion portion;
  double profit = 0.0;

  auto operator<=>(const PortionResult&) const = default;
};

struct SolveStats {
  std::uint64_t expansions = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

struct SolveResult {
  std::vector<PortionResult> optimal;  // all tied at max profit, sorted
  std::uint64_t eligible_count = 0;
  SolveStats stats;
};

struct Violation {
  std::string subject;  // node/link/schema the problem belongs to
  std::string message;
};

using ValidationReport = std::vector<Violation>;

// Checks every declared capability against its schema: undeclared names,
// value-kind mismatches, non-finite profits, dangling link endpoints.
// Violations are data, not failures; an empty report means valid.
ValidationReport validate_infrastructure(const Infrastructure& infra,
                                         const Registry& registry);

}  // namespace edgelease
