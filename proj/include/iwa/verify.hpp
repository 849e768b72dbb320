#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "iwa/parallel.hpp"
#include "iwa/poly.hpp"

namespace iwa {

struct VerifyOptions {
    uint64_t seed = 2024;
    size_t samples = 20;
    ExecMode mode = ExecMode::Parallel;
};

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string name;
    std::function<CheckResult(const VerifyOptions&)> run;
};

// The acceptance criteria, ids C1..C13, in order.
const std::vector<Criterion>& acceptance_registry();
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

// Full dimension tables at a parameter point, for the CLI and the criteria.
struct HodgeGrid {
    std::array<std::array<int, 4>, 4> dolbeault{};  // [p][q]
    std::array<std::array<int, 4>, 4> bott_chern{};
    std::array<std::array<int, 4>, 4> aeppli{};
    std::array<std::array<int, 4>, 4> frolicher_e1{};
    std::array<std::array<int, 4>, 4> frolicher_e2{};
    std::array<int, 7> betti{};
};
HodgeGrid compute_hodge_grid(const ParamPoint& t, bool with_frolicher = true);

}  // namespace iwa
