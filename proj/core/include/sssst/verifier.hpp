// Correctness checks for traces produced by a tileset: exact-strength
// binding, local determinism outside the decision set, the growth rate of the
// decision set, and agreement with the reference model.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sssst/atam.hpp"

namespace sssst {

struct Violation {
    Loc loc;
    std::string condition;  // "min-strength", "unique-fill", "non-terminal"
    std::string detail;
};

struct DeterminismReport {
    std::vector<Violation> violations;
    std::set<Loc> excluded;
    std::string terminal_condition = "truncated";
    bool pass() const { return violations.empty(); }
};

// Throws AssemblyError("corrupt trace") if the trace does not replay.
DeterminismReport check_local_determinism(const Trace& t, const Tileset& ts, const std::set<Loc>& excluded);

struct DecisionLocation {
    Loc loc;
    int stage = 0;
    bool operator==(const DecisionLocation&) const = default;
};
std::vector<DecisionLocation> decision_locations(const Trace& t, const Tileset& ts);

// Sum of (x^2 + y^2)^(-s/2) over points within Euclidean `radius` of the
// origin; the origin itself is skipped. Throws std::invalid_argument if s < 0.
double zeta_partial_sum(const std::vector<Loc>& points, double s, double radius);
// Points with sup-norm at most `radius`.
std::size_t count_within(const std::vector<Loc>& points, double radius);

struct SafetyResult {
    bool pass = false;
    std::optional<Loc> mismatch;
    std::string detail;
};
// Compares the colouring of [1,2^n]^2 with the reference grid for the trace's
// realized decisions. Throws std::invalid_argument if the trace is not a
// completed stage run.
SafetyResult safety_check(const Trace& t, const Tileset& ts);
SafetyResult safety_check_grid(const Grid& observed, const Prefix& decisions);

struct FairnessResult {
    std::vector<std::uint64_t> counts;  // indexed by prefix value in base 3
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 0.0;
    bool pass = false;
};
// Chi-square p-value of the upper tail.
double chi_square_sf(double x, int dof);
FairnessResult chi_square_uniform(const std::vector<std::uint64_t>& counts, double alpha = 1e-3);

// Runs `runs` unforced stage-complete(prefix_len) simulations with seeds
// base_seed, base_seed+1, ... in parallel and tallies realized prefixes.
FairnessResult fairness_test(const Tileset& ts, std::uint64_t runs, int prefix_len, std::uint64_t base_seed,
                             double alpha = 1e-3, unsigned threads = 0);

struct LivenessResult {
    bool pass = true;
    std::vector<std::string> failures;
};
LivenessResult liveness_check(const Tileset& ts, int prefix_len, std::uint64_t seed = 1);

}  // namespace sssst
