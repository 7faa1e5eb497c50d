#include "edgelease/registry.hpp"

#include <algorithm>
#include <limits>

namespace edgelease {

namespace {

bool superset_of(const LabelSet& big, const LabelSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Registry Registry::with_defaults() {
  Registry r;
  // Reference comparators: strict inequalities, set containment, membership.
  r.register_comparator({"smaller", ValueKind::number, ValueKind::number,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return a.number() < b.number();
                         }});
  r.register_comparator({"greater", ValueKind::number, ValueKind::number,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return a.number() > b.number();
                         }});
  r.register_comparator({"supset", ValueKind::label_set, ValueKind::label_set,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return superset_of(a.labels(), b.labels());
                         }});
  r.register_comparator({"member", ValueKind::label, ValueKind::label_set,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return b.labels().contains(a.label());
                         }});
  // Inclusive extensions.
  r.register_comparator({"geq", ValueKind::number, ValueKind::number,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return a.number() >= b.number();
                         }});
  r.register_comparator({"leq", ValueKind::number, ValueKind::number,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return a.number() <= b.number();
                         }});
  r.register_comparator({"equal", ValueKind::number, ValueKind::number,
                         [](const CapabilityValue& a, const CapabilityValue& b) {
                           return a.number() == b.number();
                         }});

  r.register_aggregator({"sum", 0.0, [](double x, double y) { return x + y; }});
  r.register_aggregator(
      {"product", 1.0, [](double x, double y) { return x * y; }});
  r.register_aggregator({"min", std::numeric_limits<double>::infinity(),
                         [](double x, double y) { return std::min(x, y); }});
  r.register_aggregator({"max", -std::numeric_limits<double>::infinity(),
                         [](double x, double y) { return std::max(x, y); }});

  r.register_capability({"security", Target::node, "supset", {}});
  r.register_capability({"location", Target::node, "member", {}});
  r.register_capability({"latency", Target::link, "smaller", {}});
  r.register_capability({"bandwidth", Target::link, "greater", {}});
  r.register_capability({"hardware", Target::node, "smaller", "sum"});
  r.register_capability({"availability", Target::node, "smaller", "product"});
  r.register_capability({"sustainability", Target::node, "smaller", "product"});
  return r;
}

void Registry::register_comparator(Comparator cmp) {
  auto [it, inserted] = comparators_.try_emplace(cmp.name, std::move(cmp));
  if (!inserted) throw Error("comparator '" + it->first + "' already registered");
}

void Registry::register_aggregator(Aggregator agg) {
  auto [it, inserted] = aggregators_.try_emplace(agg.name, std::move(agg));
  if (!inserted) throw Error("aggregator '" + it->first + "' already registered");
}

void Registry::register_capability(const CapabilitySchema& schema) {
  if (schema.target == Target::link && schema.is_global()) {
    throw Error("capability '" + schema.name +
                "': link capabilities cannot be aggregated");
  }
  comparator(schema.comparator);  // must exist
  if (schema.aggregator) aggregator(*schema.aggregator);
  auto it = schemas_.find(schema.name);
  if (it != schemas_.end()) {
    if (it->second == schema) return;  // idempotent redeclaration
    throw Error("capability '" + schema.name + "' already registered");
  }
  schemas_.emplace(schema.name, schema);
}

const Comparator& Registry::comparator(const std::string& name) const {
  auto it = comparators_.find(name);
  if (it == comparators_.end()) throw Error("unknown comparator '" + name + "'");
  return it->second;
}

const Aggregator& Registry::aggregator(const std::string& name) const {
  auto it = aggregators_.find(name);
  if (it == aggregators_.end()) throw Error("unknown aggregator '" + name + "'");
  return it->second;
}

const CapabilitySchema& Registry::schema(const std::string& name) const {
  const CapabilitySchema* s = find_schema(name);
  if (!s) throw Error("unknown capability '" + name + "'");
  return *s;
}

const CapabilitySchema* Registry::find_schema(const std::string& name) const {
  auto it = schemas_.find(name);
  return it == schemas_.end() ? nullptr : &it->second;
}

bool Registry::compare(const CapabilityValue& left,
                       const std::string& comparator_name,
                       const CapabilityValue& right) const {
  const Comparator& cmp = comparator(comparator_name);
  if (left.kind() != cmp.left_kind) {
    throw Error("comparator '" + cmp.name + "': left operand " +
                left.to_display() + " is a " + to_string(left.kind()) +
                ", expected a " + to_string(cmp.left_kind));
  }
  if (right.kind() != cmp.right_kind) {
    throw Error("comparator '" + cmp.name + "': right operand " +
                right.to_display() + " is a " + to_string(right.kind()) +
                ", expected a " + to_string(cmp.right_kind));
  }
  return cmp.apply(left, right);
}

double Registry::aggregate(const std::vector<double>& values,
                           const std::string& aggregator_name) const {
  const Aggregator& agg = aggregator(aggregator_name);
  double acc = agg.identity;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    acc = agg.apply(*it, acc);
  }
  return acc;
}

}  // namespace edgelease
