#pragma once

#include <vector>

#include "edgelease/model.hpp"
#include "edgelease/registry.hpp"
#include "edgelease/selector.hpp"

namespace edgelease {
namespace oracle {

// Test-only brute force sharing no search code with the selector: every
// source-containing subset is checked by literally enumerating the
// permutations of its non-source members. Infrastructures larger than
// 12 nodes are rejected.
std::vector<PortionResult> brute_force_enumerate(
    const Request& request, const Infrastructure& infra,
    const Registry& registry, const SolveOptions& options = {});

std::vector<PortionResult> brute_force_best(const Request& request,
                                            const Infrastructure& infra,
                                            const Registry& registry,
                                            const SolveOptions& options = {});

}  // namespace oracle
}  // namespace edgelease
