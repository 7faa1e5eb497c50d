#include "edgelease/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "edgelease/model.hpp"
#include "edgelease/scenario.hpp"
#include "edgelease/selector.hpp"

namespace edgelease::cli {

namespace {

using json = nlohmann::ordered_json;

json portion_to_json(const PortionResult& r) {
  return json{{"portion", r.portion.members}, {"profit", r.profit}};
}

json result_to_json(const std::string& request_id, const SolveResult& result,
                    const SolveOptions& options) {
  json out;
  out["request_id"] = request_id;
  out["semantics_mode"] = to_string(options.semantics);
  out["optimal"] = json::array();
  for (const PortionResult& r : result.optimal) {
    out["optimal"].push_back(portion_to_json(r));
  }
  out["eligible_count"] = result.eligible_count;
  out["stats"] = {{"expansions", result.stats.expansions},
                  {"elapsed_ms", result.stats.elapsed.count()}};
  return out;
}

std::string portion_to_text(const Portion& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    if (i) s += ", ";
    s += p.members[i];
  }
  return s + "}";
}

struct CommonFlags {
  std::string scenario_path;
  std::string request_id;
  std::string semantics = "reference";
  bool strict_globals = false;
  bool json_output = false;

  SolveOptions options() const {
    SolveOptions o;
    o.semantics =
        semantics == "subset" ? Semantics::subset : Semantics::reference;
    o.strict_globals = strict_globals;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("scenario", flags.scenario_path, "Scenario file (JSON)")
      ->required();
  cmd->add_option("request", flags.request_id, "Request id within the scenario")
      ->required();
  cmd->add_option("--semantics", flags.semantics,
                  "Eligibility semantics: reference | subset")
      ->check(CLI::IsMember({"reference", "subset"}));
  cmd->add_flag("--strict-globals", flags.strict_globals,
                "Fail a global requirement when a member lacks the capability");
  cmd->add_flag("--json", flags.json_output, "Machine-readable output");
}

int with_request(const CommonFlags& flags, std::ostream& err,
                 const std::function<int(const Scenario&, const Request&)>& fn) {
  Scenario scenario;
  try {
    scenario = load_scenario(flags.scenario_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const Request* request = scenario.find_request(flags.request_id);
  if (!request) {
    err << "error: no request '" << flags.request_id << "' in "
        << flags.scenario_path << "\n";
    return kExitInputError;
  }
  try {
    return fn(scenario, *request);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_solve(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  return with_request(flags, err, [&](const Scenario& s, const Request& req) {
    SolveResult result =
        solve(req, s.infrastructure, s.registry, flags.options());
    if (flags.json_output) {
      out << result_to_json(req.id, result, flags.options()).dump(2) << "\n";
    } else if (result.optimal.empty()) {
      out << "no eligible portion for request " << req.id << "\n";
    } else {
      out << "request " << req.id << ": " << result.optimal.size()
          << " optimal portion(s) at profit " << result.optimal.front().profit
          << " EUR/h (" << result.eligible_count << " eligible)\n";
      for (const PortionResult& r : result.optimal) {
        out << "  " << portion_to_text(r.portion) << "\n";
      }
    }
    return result.optimal.empty() ? kExitInfeasible : kExitOk;
  });
}

int cmd_enumerate(const CommonFlags& flags, bool count_only, std::ostream& out,
                  std::ostream& err) {
  return with_request(flags, err, [&](const Scenario& s, const Request& req) {
    SolveStats stats;
    std::vector<PortionResult> eligible = enumerate_portions(
        req, s.infrastructure, s.registry, flags.options(), &stats);
    if (count_only && !flags.json_output) {
      out << eligible.size() << "\n";
      return eligible.empty() ? kExitInfeasible : kExitOk;
    }
    // Sorted by profit descending, then portion ascending.
    std::stable_sort(eligible.begin(), eligible.end(),
                     [](const PortionResult& a, const PortionResult& b) {
                       if (a.profit != b.profit) return a.profit > b.profit;
                       return a.portion < b.portion;
                     });
    if (flags.json_output) {
      json jout;
      jout["request_id"] = req.id;
      jout["semantics_mode"] = to_string(flags.options().semantics);
      jout["eligible_count"] = eligible.size();
      if (!count_only) {
        jout["eligible"] = json::array();
        for (const PortionResult& r : eligible) {
          jout["eligible"].push_back(portion_to_json(r));
        }
      }
      out << jout.dump(2) << "\n";
    } else {
      for (const PortionResult& r : eligible) {
        out << portion_to_text(r.portion) << " " << r.profit << "\n";
      }
    }
    return eligible.empty() ? kExitInfeasible : kExitOk;
  });
}

int cmd_validate(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  Scenario scenario;
  try {
    scenario = load_scenario(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  ValidationReport report =
      validate_infrastructure(scenario.infrastructure, scenario.registry);
  if (report.empty()) {
    out << "ok: " << scenario.infrastructure.nodes.size() << " node(s), "
        << scenario.infrastructure.links.size() << " link(s), "
        << scenario.requests.size() << " request(s)\n";
    return kExitOk;
  }
  for (const Violation& v : report) {
    out << v.subject << ": " << v.message << "\n";
  }
  return kExitInvalid;
}

struct BenchFlags {
  std::vector<std::size_t> sizes{10, 20, 40};
  std::vector<std::uint32_t> max_nodes{3};
  std::uint64_t seeds = 3;
  std::string profile = "default";
  bool csv = false;
};

GeneratorProfile profile_by_name(const std::string& name) {
  if (name == "dense") return {"dense", 1.0};
  if (name == "sparse") return {"sparse", 0.2};
  return {"default", 0.6};
}

int cmd_bench(const BenchFlags& flags, std::ostream& out) {
  Registry registry = Registry::with_defaults();
  GeneratorProfile profile = profile_by_name(flags.profile);
  if (flags.csv) {
    out << "n,max_nodes,seed,expansions,eligible,elapsed_ms\n";
  } else {
    out << std::left << std::setw(8) << "n" << std::setw(10) << "max_nodes"
        << std::setw(8) << "seed" << std::setw(14) << "expansions"
        << std::setw(10) << "eligible" << "elapsed_ms\n";
  }
  std::map<std::uint32_t, std::vector<std::pair<double, double>>> loglog;
  for (std::uint32_t mn : flags.max_nodes) {
    for (std::size_t n : flags.sizes) {
      double mean_expansions = 0.0;
      for (std::uint64_t seed = 1; seed <= flags.seeds; ++seed) {
        Infrastructure infra =
            generate_random_infrastructure(seed, n, profile, registry);
        double total_hw = 0.0;
        for (const auto& [id, node] : infra.nodes) {
          total_hw += node.caps.at("hardware").number();
        }
        // Unsatisfiable hardware target: the search must visit every state,
        // exposing the worst-case growth.
        Request request;
        request.id = "bench";
        request.source = infra.nodes.begin()->first;
        request.max_extra_nodes = mn;
        request.requirements = {{"hardware", CapabilityValue(total_hw + 1.0)}};
        SolveResult result = solve(request, infra, registry, {});
        mean_expansions += static_cast<double>(result.stats.expansions);
        if (flags.csv) {
          out << n << "," << mn << "," << seed << ","
              << result.stats.expansions << "," << result.eligible_count << ","
              << result.stats.elapsed.count() << "\n";
        } else {
          out << std::left << std::setw(8) << n << std::setw(10) << mn
              << std::setw(8) << seed << std::setw(14)
              << result.stats.expansions << std::setw(10)
              << result.eligible_count << result.stats.elapsed.count() << "\n";
        }
      }
      mean_expansions /= static_cast<double>(flags.seeds);
      loglog[mn].emplace_back(std::log(static_cast<double>(n)),
                              std::log(mean_expansions));
    }
  }
  if (!flags.csv) {
    for (const auto& [mn, points] : loglog) {
      if (points.size() < 2) continue;
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (auto [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      double k = static_cast<double>(points.size());
      double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
      out << "max_nodes=" << mn << " log-log expansion slope vs n: " << slope
          << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cloud-Edge portion broker: select max-profit infrastructure "
               "portions satisfying an operator's request"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Return the max-profit eligible portion(s)");
  add_common(solve_cmd, solve_flags);

  CommonFlags enum_flags;
  bool count_only = false;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "List every eligible portion");
  add_common(enum_cmd, enum_flags);
  enum_cmd->add_flag("--count", count_only, "Print only the number of portions");

  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Load a scenario and report violations");
  validate_cmd->add_option("scenario", validate_path, "Scenario file (JSON)")
      ->required();

  BenchFlags bench_flags;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Scaling benchmark on generated infrastructures");
  bench_cmd->add_option("--n", bench_flags.sizes, "Infrastructure sizes");
  bench_cmd->add_option("--max-nodes", bench_flags.max_nodes,
                        "Extra-node budgets");
  bench_cmd->add_option("--seeds", bench_flags.seeds, "Seeds per size");
  bench_cmd->add_option("--profile", bench_flags.profile,
                        "Generator profile: default | dense | sparse");
  bench_cmd->add_flag("--csv", bench_flags.csv, "CSV output");

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  if (solve_cmd->parsed()) return cmd_solve(solve_flags, out, err);
  if (enum_cmd->parsed()) return cmd_enumerate(enum_flags, count_only, out, err);
  if (validate_cmd->parsed()) return cmd_validate(validate_path, out, err);
  if (bench_cmd->parsed()) return cmd_bench(bench_flags, out);
  return kExitInputError;
}

}  // namespace edgelease::cli
