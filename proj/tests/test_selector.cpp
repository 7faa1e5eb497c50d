#include <doctest.h>

#include <algorithm>

#include "edgelease/scenario.hpp"
#include "edgelease/selector.hpp"
#include "helpers.hpp"

using namespace edgelease;
using edgelease::testing::fixture;
using edgelease::testing::InfraBuilder;

namespace {

const Scenario& smarttraffic() {
  static Scenario s = load_scenario(fixture("smarttraffic.json"));
  return s;
}

std::vector<NodeId> extras_of(const Portion& p, const NodeId& source) {
  std::vector<NodeId> extras;
  for (const NodeId& m : p.members) {
    if (m != source) extras.push_back(m);
  }
  return extras;
}

// Literal witness search: some ordering of the extras must make every proper
// prefix fail the globals.
bool has_build_order_witness(const Portion& p, const Request& request,
                             const SplitRequirements& split,
                             const Infrastructure& infra,
                             const Registry& registry) {
  std::vector<NodeId> extras = extras_of(p, request.source);
  std::sort(extras.begin(), extras.end());
  do {
    std::vector<NodeId> prefix{request.source};
    bool good = true;
    for (const NodeId& m : extras) {
      if (satisfies_global_reqs(split.global_reqs, prefix, infra, registry)) {
        good = false;
        break;
      }
      prefix.push_back(m);
    }
    if (good) return true;
  } while (std::next_permutation(extras.begin(), extras.end()));
  return false;
}

}  // namespace

TEST_CASE("split_requirements partitions by schema") {
  const Scenario& s = smarttraffic();
  const Request& q3 = *s.find_request("q3");
  SplitRequirements split = split_requirements(q3, s.registry);
  auto names = [](const std::vector<Requirement>& reqs) {
    std::vector<std::string> out;
    for (const auto& r : reqs) out.push_back(r.capability);
    return out;
  };
  CHECK(names(split.node_reqs) ==
        std::vector<std::string>{"security", "location"});
  CHECK(names(split.link_reqs) ==
        std::vector<std::string>{"latency", "bandwidth"});
  CHECK(names(split.global_reqs) ==
        std::vector<std::string>{"hardware", "availability", "sustainability"});
}

TEST_CASE("split_requirements edge cases") {
  Registry registry = Registry::with_defaults();
  Request empty{"r", "x", 0, {}};
  SplitRequirements split = split_requirements(empty, registry);
  CHECK(split.node_reqs.empty());
  CHECK(split.link_reqs.empty());
  CHECK(split.global_reqs.empty());

  Request unknown{"r", "x", 0, {{"jitter", CapabilityValue(5.0)}}};
  CHECK_THROWS_WITH_AS(split_requirements(unknown, registry),
                       doctest::Contains("jitter"), Error);
}

TEST_CASE("satisfies_node_reqs mirrors clause failure on missing facts") {
  const Scenario& s = smarttraffic();
  std::vector<Requirement> reqs{
      {"security", CapabilityValue(LabelSet{"antimalware", "encryptedStorage"})},
      {"location", CapabilityValue(LabelSet{"eu"})}};
  // c1 is in the US: location check fails.
  CHECK_FALSE(satisfies_node_reqs("c1", reqs, s.infrastructure, s.registry));
  CHECK(satisfies_node_reqs("c2", reqs, s.infrastructure, s.registry));
  CHECK(satisfies_node_reqs("c1", {}, s.infrastructure, s.registry));

  Infrastructure bare = InfraBuilder{}.node("a", 1.0).build();
  CHECK_FALSE(satisfies_node_reqs(
      "a", {{"security", CapabilityValue(LabelSet{"antimalware"})}}, bare,
      s.registry));
}

TEST_CASE("satisfies_link_reqs checks only candidate -> source") {
  Registry registry = Registry::with_defaults();
  Infrastructure infra = InfraBuilder{}
                             .node("ap1", 2.5)
                             .node("n1", 4.0)
                             .link("n1", "ap1", 60, 200)
                             .link("ap1", "n1", 60, 30)
                             .build();
  std::vector<Requirement> reqs{{"latency", CapabilityValue(250.0)},
                                {"bandwidth", CapabilityValue(10.0)}};
  CHECK(satisfies_link_reqs("n1", "ap1", reqs, infra, registry));
  CHECK(satisfies_link_reqs("n1", "ap1", {}, infra, registry));
  // No record for the reverse pairing beyond ap1->n1 (30 Mbps passes too).
  CHECK(satisfies_link_reqs("ap1", "n1", reqs, infra, registry));

  // Strict boundary: bandwidth exactly at the floor is rejected.
  Infrastructure exact =
      InfraBuilder{}.node("a", 1).node("s", 1).link("a", "s", 60, 10).build();
  CHECK_FALSE(satisfies_link_reqs(
      "a", "s", {{"bandwidth", CapabilityValue(10.0)}}, exact, registry));
  // Missing link record fails.
  CHECK_FALSE(satisfies_link_reqs(
      "s", "a", {{"bandwidth", CapabilityValue(5.0)}}, exact, registry));
}

TEST_CASE("satisfies_global_reqs aggregates over declaring members") {
  const Scenario& s = smarttraffic();
  std::vector<Requirement> hw20{{"hardware", CapabilityValue(20.0)}};
  CHECK(satisfies_global_reqs(hw20, {"ap3", "ap8", "c1", "c2"},
                              s.infrastructure, s.registry));
  // 3 + 16 = 19 and 20 < 19 is false.
  CHECK_FALSE(
      satisfies_global_reqs(hw20, {"ap3", "c2"}, s.infrastructure, s.registry));
  CHECK(satisfies_global_reqs({}, {"ap3"}, s.infrastructure, s.registry));
  CHECK_FALSE(satisfies_global_reqs({}, {}, s.infrastructure, s.registry));
}

TEST_CASE("strict globals fail on members lacking the capability") {
  Registry registry = Registry::with_defaults();
  Infrastructure infra =
      InfraBuilder{}
          .node("a", 1, {{"hardware", CapabilityValue(30.0)}})
          .node("b", 1, {})
          .build();
  std::vector<Requirement> hw{{"hardware", CapabilityValue(20.0)}};
  CHECK(satisfies_global_reqs(hw, {"a", "b"}, infra, registry, false));
  CHECK_FALSE(satisfies_global_reqs(hw, {"a", "b"}, infra, registry, true));
}

TEST_CASE("portion_profit sums member profits including the source") {
  const Infrastructure& infra = smarttraffic().infrastructure;
  CHECK(portion_profit(canonicalize({"ap3", "ap8", "c1", "c2"}), infra) ==
        doctest::Approx(20.0).epsilon(1e-9));
  CHECK(portion_profit(canonicalize({"ap3", "ap4", "c2", "n2"}), infra) ==
        doctest::Approx(16.75).epsilon(1e-9));
  CHECK(portion_profit(canonicalize({"ap2"}), infra) == 1.0);
}

TEST_CASE("best_portions returns every tie at the maximum") {
  auto p = [](std::vector<NodeId> m, double profit) {
    return PortionResult{canonicalize(m), profit};
  };
  CHECK(best_portions({}).empty());
  auto out = best_portions({p({"a"}, 5), p({"b"}, 7), p({"c"}, 7)});
  REQUIRE(out.size() == 2);
  CHECK(out[0].portion.members == std::vector<NodeId>{"b"});
  CHECK(out[1].portion.members == std::vector<NodeId>{"c"});
}

TEST_CASE("toy scenario enumeration") {
  Scenario s = load_scenario(fixture("toy3.json"));
  SolveResult result =
      solve(*s.find_request("toy"), s.infrastructure, s.registry, {});
  CHECK(result.eligible_count == 2);
  REQUIRE(result.optimal.size() == 1);
  CHECK(result.optimal[0].portion.members == std::vector<NodeId>{"b", "s"});
  CHECK(result.optimal[0].profit == 4.0);
}

TEST_CASE("infeasible hardware target yields empty, not an error") {
  const Scenario& s = smarttraffic();
  Request request = *s.find_request("q1");
  request.requirements[0].target = CapabilityValue(10000.0);
  SolveResult result = solve(request, s.infrastructure, s.registry, {});
  CHECK(result.eligible_count == 0);
  CHECK(result.optimal.empty());
}

TEST_CASE("unknown source node is an error") {
  const Scenario& s = smarttraffic();
  Request request = *s.find_request("q1");
  request.source = "ap99";
  CHECK_THROWS_AS(solve(request, s.infrastructure, s.registry, {}), Error);
}

TEST_CASE("returned portions satisfy every stated invariant") {
  const Scenario& s = smarttraffic();
  for (const char* id : {"q1", "q2", "q3"}) {
    const Request& request = *s.find_request(id);
    SplitRequirements split = split_requirements(request, s.registry);
    std::vector<PortionResult> eligible =
        enumerate_portions(request, s.infrastructure, s.registry);
    double max_profit = 0;
    for (const PortionResult& r : eligible) {
      CHECK(r.portion.contains(request.source));
      CHECK(r.portion.members.size() <= request.max_extra_nodes + 1);
      for (const NodeId& m : r.portion.members) {
        if (m == request.source) continue;
        CHECK(satisfies_node_reqs(m, split.node_reqs, s.infrastructure,
                                  s.registry));
        CHECK(satisfies_link_reqs(m, request.source, split.link_reqs,
                                  s.infrastructure, s.registry));
      }
      CHECK(satisfies_global_reqs(split.global_reqs, r.portion.members,
                                  s.infrastructure, s.registry));
      CHECK(r.profit ==
            doctest::Approx(portion_profit(r.portion, s.infrastructure))
                .epsilon(1e-9));
      max_profit = std::max(max_profit, r.profit);
    }
    std::vector<PortionResult> optimal = best_portions(eligible);
    for (const PortionResult& r : optimal) CHECK(r.profit == max_profit);
  }
}

TEST_CASE("every q2 portion has a build-order witness") {
  const Scenario& s = smarttraffic();
  const Request& q2 = *s.find_request("q2");
  SplitRequirements split = split_requirements(q2, s.registry);
  std::vector<PortionResult> eligible =
      enumerate_portions(q2, s.infrastructure, s.registry);
  CHECK(eligible.size() == 37);
  for (const PortionResult& r : eligible) {
    CHECK(has_build_order_witness(r.portion, q2, split, s.infrastructure,
                                  s.registry));
  }
}

TEST_CASE("solve is deterministic") {
  const Scenario& s = smarttraffic();
  const Request& q1 = *s.find_request("q1");
  SolveResult a = solve(q1, s.infrastructure, s.registry, {});
  SolveResult b = solve(q1, s.infrastructure, s.registry, {});
  CHECK(a.optimal == b.optimal);
  CHECK(a.eligible_count == b.eligible_count);
  CHECK(a.stats.expansions == b.stats.expansions);
}

TEST_CASE("single sum-aggregated global: dropping the witness's last node "
          "fails the floor") {
  Registry registry = Registry::with_defaults();
  Infrastructure infra =
      InfraBuilder{}
          .node("s", 1, {{"hardware", CapabilityValue(5.0)}})
          .node("a", 2, {{"hardware", CapabilityValue(10.0)}})
          .node("b", 3, {{"hardware", CapabilityValue(10.0)}})
          .node("c", 1, {{"hardware", CapabilityValue(2.0)}})
          .build();
  Request request{"r", "s", 3, {{"hardware", CapabilityValue(12.0)}}};
  SplitRequirements split = split_requirements(request, registry);
  for (const PortionResult& r :
       enumerate_portions(request, infra, registry)) {
    bool witnessed = false;
    for (const NodeId& last : extras_of(r.portion, "s")) {
      std::vector<NodeId> rest;
      for (const NodeId& m : r.portion.members) {
        if (m != last) rest.push_back(m);
      }
      if (!satisfies_global_reqs(split.global_reqs, rest, infra, registry)) {
        witnessed = true;
      }
    }
    CHECK(witnessed);
  }
}
