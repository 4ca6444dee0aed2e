// Generator for the finite tile program that grows the fractal.
#pragma once

#include <cstddef>
#include <string>

#include "sssst/atam.hpp"

namespace sssst {

struct CompileReport {
    std::size_t tile_types = 0;
    std::size_t glue_tokens = 0;
    std::size_t decision_families = 0;
    std::size_t iterations = 0;  // closure rounds until the fixpoint
    std::string summary() const;
};

class ClosureDiverged : public std::runtime_error {
public:
    ClosureDiverged() : std::runtime_error("closure diverged") {}
};

inline constexpr std::size_t kDefaultClosureCeiling = 50000;

// Builds the tileset by closing the local rule set from the seed until no new
// tile types appear. Throws ClosureDiverged past `ceiling` types.
Tileset generate(CompileReport* report = nullptr, std::size_t ceiling = kDefaultClosureCeiling);

// The column label carried by a north glue of the generated tileset: the trit
// chosen at stage tz(X)+1 for column X (0-based from the seed), or 0 for glues
// that carry none.
int column_trit(const std::string& north_label);

}  // namespace sssst
