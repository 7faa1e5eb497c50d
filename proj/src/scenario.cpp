#include "edgelease/scenario.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace edgelease {

using json = nlohmann::ordered_json;

const Request* Scenario::find_request(const std::string& id) const {
  for (const Request& r : requests) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

CapabilityValue value_from_json(const json& j, const std::string& origin,
                                const std::string& context) {
  if (j.is_number()) return CapabilityValue(j.get<double>());
  if (j.is_string()) return CapabilityValue(j.get<std::string>());
  if (j.is_array()) {
    LabelSet labels;
    for (const auto& e : j) {
      if (!e.is_string()) {
        fail(origin, context + ": label sets may only contain strings");
      }
      labels.insert(e.get<std::string>());
    }
    return CapabilityValue(std::move(labels));
  }
  fail(origin, context + ": expected a number, string or string array");
}

json value_to_json(const CapabilityValue& v) {
  switch (v.kind()) {
    case ValueKind::number: return v.number();
    case ValueKind::label: return v.label();
    case ValueKind::label_set: return json(v.labels());
  }
  return nullptr;
}

std::map<std::string, CapabilityValue> caps_from_json(
    const json& j, const std::string& origin, const std::string& context) {
  std::map<std::string, CapabilityValue> caps;
  for (const auto& [name, value] : j.items()) {
    caps.emplace(name, value_from_json(value, origin, context + ".caps." + name));
  }
  return caps;
}

const json& require_field(const json& j, const char* field,
                          const std::string& origin,
                          const std::string& context) {
  auto it = j.find(field);
  if (it == j.end()) {
    fail(origin, context + ": missing required field '" + field + "'");
  }
  return *it;
}

Target target_from_string(const std::string& s, const std::string& origin,
                          const std::string& context) {
  if (s == "node") return Target::node;
  if (s == "link") return Target::link;
  fail(origin, context + ": target must be \"node\" or \"link\", got \"" + s +
                   "\"");
}

LinkRule rule_from_json(const json& j, const std::string& origin,
                        const std::string& context) {
  LinkRule rule;
  rule.from_class = require_field(j, "from_class", origin, context);
  rule.to_class = require_field(j, "to_class", origin, context);
  rule.same_location = require_field(j, "same_location", origin, context);
  rule.latency_ms = require_field(j, "latency_ms", origin, context);
  rule.bandwidth_mbps_forward =
      require_field(j, "bandwidth_mbps_forward", origin, context);
  rule.bandwidth_mbps_reverse =
      require_field(j, "bandwidth_mbps_reverse", origin, context);
  return rule;
}

}  // namespace

std::vector<LinkRecord> expand_link_rules(
    const std::map<NodeId, NodeRecord>& nodes,
    const std::vector<LinkRule>& rules) {
  std::map<std::pair<NodeId, NodeId>, std::pair<double, double>> expanded;
  auto emit = [&](const NodeId& from, const NodeId& to, double latency,
                  double bandwidth) {
    auto [it, inserted] = expanded.try_emplace({from, to}, latency, bandwidth);
    if (!inserted && it->second != std::make_pair(latency, bandwidth)) {
      throw Error("link rules ambiguous for pair " + from + " -> " + to);
    }
  };
  for (const auto& [from_id, from_node] : nodes) {
    for (const auto& [to_id, to_node] : nodes) {
      if (from_id == to_id) continue;
      if (!from_node.node_class || !to_node.node_class || !from_node.location ||
          !to_node.location) {
        continue;
      }
      bool same = *from_node.location == *to_node.location;
      for (const LinkRule& rule : rules) {
        if (rule.same_location != same) continue;
        if (*from_node.node_class == rule.from_class &&
            *to_node.node_class == rule.to_class) {
          emit(from_id, to_id, rule.latency_ms, rule.bandwidth_mbps_forward);
        }
        if (*from_node.node_class == rule.to_class &&
            *to_node.node_class == rule.from_class) {
          emit(from_id, to_id, rule.latency_ms, rule.bandwidth_mbps_reverse);
        }
      }
    }
  }
  std::vector<LinkRecord> records;
  records.reserve(expanded.size());
  for (const auto& [key, qos] : expanded) {
    LinkRecord record{key.first, key.second, {}};
    record.caps.emplace("latency", CapabilityValue(qos.first));
    record.caps.emplace("bandwidth", CapabilityValue(qos.second));
    records.push_back(std::move(record));
  }
  return records;
}

Scenario load_scenario(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!doc.is_object()) fail(origin, "top level must be an object");

  Scenario scenario;
  scenario.registry = Registry::with_defaults();

  if (auto it = doc.find("schemas"); it != doc.end()) {
    std::size_t i = 0;
    for (const auto& js : *it) {
      std::string context = "schemas[" + std::to_string(i++) + "]";
      CapabilitySchema schema;
      schema.name = require_field(js, "name", origin, context);
      schema.target = target_from_string(
          require_field(js, "target", origin, context), origin, context);
      schema.comparator = require_field(js, "comparator", origin, context);
      if (auto ja = js.find("aggregator"); ja != js.end() && !ja->is_null()) {
        schema.aggregator = ja->get<std::string>();
      }
      try {
        scenario.registry.register_capability(schema);
      } catch (const Error& e) {
        fail(origin, context + ": " + e.what());
      }
    }
  }

  auto& infra = scenario.infrastructure;
  std::size_t i = 0;
  for (const auto& jn : require_field(doc, "nodes", origin, "document")) {
    std::string context = "nodes[" + std::to_string(i++) + "]";
    NodeRecord node;
    node.id = require_field(jn, "id", origin, context).get<std::string>();
    if (node.id.empty()) fail(origin, context + ": node id must be non-empty");
    const json& jp = require_field(jn, "profit", origin, context + " (" + node.id + ")");
    if (!jp.is_number()) {
      fail(origin, context + ": node '" + node.id + "' profit must be a number");
    }
    node.profit = jp.get<double>();
    if (auto jc = jn.find("class"); jc != jn.end()) {
      node.node_class = jc->get<std::string>();
    }
    if (auto jl = jn.find("location"); jl != jn.end()) {
      node.location = jl->get<std::string>();
    }
    if (auto jcaps = jn.find("caps"); jcaps != jn.end()) {
      node.caps = caps_from_json(*jcaps, origin, context);
    }
    if (!infra.nodes.emplace(node.id, node).second) {
      fail(origin, context + ": duplicate node id '" + node.id + "'");
    }
  }

  std::vector<LinkRule> rules;
  if (auto it = doc.find("link_rules"); it != doc.end()) {
    std::size_t r = 0;
    for (const auto& jr : *it) {
      rules.push_back(
          rule_from_json(jr, origin, "link_rules[" + std::to_string(r++) + "]"));
    }
  }
  try {
    for (LinkRecord& record : expand_link_rules(infra.nodes, rules)) {
      infra.links.emplace(std::make_pair(record.from, record.to),
                          std::move(record));
    }
  } catch (const Error& e) {
    fail(origin, e.what());
  }

  if (auto it = doc.find("links"); it != doc.end()) {
    std::size_t l = 0;
    for (const auto& jl : *it) {
      std::string context = "links[" + std::to_string(l++) + "]";
      NodeId from = require_field(jl, "from", origin, context).get<std::string>();
      NodeId to = require_field(jl, "to", origin, context).get<std::string>();
      if (from == to) {
        fail(origin, context + ": link endpoints must differ (" + from + ")");
      }
      auto caps = caps_from_json(require_field(jl, "caps", origin, context),
                                 origin, context);
      // Explicit entries override rule-generated QoS capability by capability.
      auto& record = infra.links[{from, to}];
      record.from = from;
      record.to = to;
      for (auto& [name, value] : caps) {
        record.caps.insert_or_assign(name, value);
      }
    }
  }

  if (auto it = doc.find("requests"); it != doc.end()) {
    std::size_t r = 0;
    for (const auto& jr : *it) {
      std::string context = "requests[" + std::to_string(r++) + "]";
      Request request;
      request.id = require_field(jr, "id", origin, context).get<std::string>();
      request.source =
          require_field(jr, "source", origin, context).get<std::string>();
      const json& jm = require_field(jr, "max_extra_nodes", origin, context);
      if (!jm.is_number_unsigned()) {
        fail(origin, context + ": max_extra_nodes must be a non-negative integer");
      }
      request.max_extra_nodes = jm.get<std::uint32_t>();
      if (!infra.find_node(request.source)) {
        fail(origin, context + ": source node '" + request.source +
                         "' does not exist");
      }
      std::size_t q = 0;
      for (const auto& jq : require_field(jr, "requirements", origin, context)) {
        std::string rc = context + ".requirements[" + std::to_string(q++) + "]";
        Requirement req;
        req.capability = require_field(jq, "capability", origin, rc).get<std::string>();
        req.target = value_from_json(require_field(jq, "target", origin, rc),
                                     origin, rc);
        if (!scenario.registry.find_schema(req.capability)) {
          fail(origin, rc + ": unknown capability '" + req.capability + "'");
        }
        for (const Requirement& prev : request.requirements) {
          if (prev.capability == req.capability) {
            fail(origin, rc + ": duplicate requirement on capability '" +
                             req.capability + "'");
          }
        }
        request.requirements.push_back(std::move(req));
      }
      scenario.requests.push_back(std::move(request));
    }
  }

  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return load_scenario(in, path);
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  doc["schemas"] = json::array();
  for (const auto& [name, schema] : scenario.registry.schemas()) {
    json js{{"name", schema.name},
            {"target", schema.target == Target::node ? "node" : "link"},
            {"comparator", schema.comparator}};
    if (schema.aggregator) js["aggregator"] = *schema.aggregator;
    doc["schemas"].push_back(std::move(js));
  }
  doc["nodes"] = json::array();
  for (const auto& [id, node] : scenario.infrastructure.nodes) {
    json jn{{"id", id}, {"profit", node.profit}};
    if (node.node_class) jn["class"] = *node.node_class;
    if (node.location) jn["location"] = *node.location;
    json jcaps = json::object();
    for (const auto& [name, value] : node.caps) {
      jcaps[name] = value_to_json(value);
    }
    jn["caps"] = std::move(jcaps);
    doc["nodes"].push_back(std::move(jn));
  }
  doc["links"] = json::array();
  for (const auto& [key, link] : scenario.infrastructure.links) {
    json jl{{"from", link.from}, {"to", link.to}};
    json jcaps = json::object();
    for (const auto& [name, value] : link.caps) {
      jcaps[name] = value_to_json(value);
    }
    jl["caps"] = std::move(jcaps);
    doc["links"].push_back(std::move(jl));
  }
  doc["requests"] = json::array();
  for (const Request& request : scenario.requests) {
    json jr{{"id", request.id},
            {"source", request.source},
            {"max_extra_nodes", request.max_extra_nodes}};
    jr["requirements"] = json::array();
    for (const Requirement& req : request.requirements) {
      jr["requirements"].push_back(
          {{"capability", req.capability}, {"target", value_to_json(req.target)}});
    }
    doc["requests"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

Infrastructure generate_random_infrastructure(std::uint64_t seed,
                                              std::size_t n_nodes,
                                              const GeneratorProfile& profile,
                                              const Registry& registry) {
  if (n_nodes < 1) throw Error("generator needs at least one node");
  std::mt19937_64 rng(seed);
  // Draw from fixed integer grids so output is identical across standard
  // library implementations.
  auto pick = [&rng](std::uint64_t n) { return rng() % n; };

  static const std::vector<std::string> kLocations{"us", "eu", "cn"};
  static const std::vector<std::string> kSecurityLabels{
      "antimalware", "encryptedStorage", "audit"};
  static const std::vector<std::string> kClasses{"access_point", "edge",
                                                 "cloud"};

  Infrastructure infra;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    NodeRecord node;
    // Zero-padded so lexicographic NodeId order matches creation order.
    char buf[16];
    std::snprintf(buf, sizeof(buf), "v%03zu", i);
    node.id = buf;
    node.node_class = kClasses[pick(3)];
    node.location = kLocations[pick(3)];
    node.profit = 0.5 + 0.25 * static_cast<double>(pick(39));  // 0.5 .. 10.0
    node.caps.emplace("hardware",
                      CapabilityValue(1.0 + static_cast<double>(pick(24))));
    node.caps.emplace("location", CapabilityValue(*node.location));
    node.caps.emplace(
        "availability",
        CapabilityValue(0.9 + 0.001 * static_cast<double>(pick(100))));
    node.caps.emplace("sustainability",
                      CapabilityValue(0.01 * static_cast<double>(pick(101))));
    LabelSet security;
    for (const auto& label : kSecurityLabels) {
      if (pick(2) == 0) security.insert(label);
    }
    node.caps.emplace("security", CapabilityValue(std::move(security)));
    infra.nodes.emplace(node.id, std::move(node));
  }

  std::uint64_t density_permille =
      static_cast<std::uint64_t>(profile.link_density * 1000.0);
  for (const auto& [from, fn] : infra.nodes) {
    for (const auto& [to, tn] : infra.nodes) {
      if (from == to) continue;
      if (pick(1000) >= density_permille) continue;
      LinkRecord link{from, to, {}};
      link.caps.emplace("latency",
                        CapabilityValue(5.0 + static_cast<double>(pick(296))));
      link.caps.emplace("bandwidth",
                        CapabilityValue(5.0 + static_cast<double>(pick(246))));
      infra.links.emplace(std::make_pair(from, to), std::move(link));
    }
  }

  ValidationReport report = validate_infrastructure(infra, registry);
  if (!report.empty()) {
    throw Error("generated infrastructure failed validation: " +
                report.front().message);
  }
  return infra;
}

}  // namespace edgelease
