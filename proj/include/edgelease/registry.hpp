#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "edgelease/model.hpp"

namespace edgelease {

// A binary predicate relating a featured value to a requested value.
// Local checks evaluate compare(featured, op, requested); global checks
// evaluate compare(requested, op, aggregated) -- the argument order
// asymmetry is part of the reference semantics.
struct Comparator {
  std::string name;
  ValueKind left_kind;
  ValueKind right_kind;
  std::function<bool(const CapabilityValue&, const CapabilityValue&)> apply;
};

// A commutative monoid folding member capability values into one number.
struct Aggregator {
  std::string name;
  double identity;
  std::function<double(double, double)> apply;
};

class Registry {
 public:
  // Comparators smaller/greater/supset/member plus the geq/leq/equal
  // extensions; aggregators sum/product plus min/max; capability schemas
  // security, location, latency, bandwidth, hardware, availability,
  // sustainability.
  static Registry with_defaults();

  void register_comparator(Comparator cmp);
  void register_aggregator(Aggregator agg);

  // Re-registering a byte-identical schema is a no-op; a conflicting
  // redefinition or duplicate is an error.
  void register_capability(const CapabilitySchema& schema);

  const Comparator& comparator(const std::string& name) const;
  const Aggregator& aggregator(const std::string& name) const;
  const CapabilitySchema& schema(const std::string& name) const;
  const CapabilitySchema* find_schema(const std::string& name) const;

  const std::map<std::string, CapabilitySchema>& schemas() const {
    return schemas_;
  }

  bool compare(const CapabilityValue& left, const std::string& comparator,
               const CapabilityValue& right) const;

  // Right-fold from the identity; callers pass values pre-sorted by owning
  // NodeId so results are bitwise reproducible. Empty list -> identity.
  double aggregate(const std::vector<double>& values,
                   const std::string& aggregator) const;

 private:
  std::map<std::string, Comparator> comparators_;
  std::map<std::string, Aggregator> aggregators_;
  std::map<std::string, CapabilitySchema> schemas_;
};

}  // namespace edgelease
