// Reference model of the statistically self-similar Sierpinski triangle.
//
// Coordinates are 1-indexed with the origin tile at (1,1). A coding prefix
// s = <s_1 .. s_n> over {1,2,3} selects, at every scale, which of the three
// areas (1 = north, 2 = northeast, 3 = east) of the 2x2 block decomposition is
// masked off.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sssst {

using Prefix = std::vector<int>;

// Parses "1231" into {1,2,3,1}; throws std::invalid_argument on any other
// character.
Prefix parse_prefix(const std::string& text);
std::string prefix_to_string(const Prefix& s);

// Recursive membership test. Throws std::out_of_range("prefix too short") if
// max(x, y) > 2^|s|, std::invalid_argument for non-positive coordinates.
bool member(std::int64_t x, std::int64_t y, const Prefix& s);

// Row-major (y outer, x inner) ON/OFF grid over [1, 2^n]^2.
struct Grid {
    int size = 0;
    std::vector<std::uint8_t> cells;

    Grid() = default;
    explicit Grid(int side) : size(side), cells(static_cast<std::size_t>(side) * side, 0) {}

    bool at(int x, int y) const { return cells[idx(x, y)] != 0; }
    void set(int x, int y, bool on) { cells[idx(x, y)] = on ? 1 : 0; }
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y - 1) * size + static_cast<std::size_t>(x - 1);
    }
    bool operator==(const Grid&) const = default;
};

// Stage grid via the recursive membership predicate.
Grid stage_grid(const Prefix& s);
// Stage grid via the copy-and-mask construction (independent of member()).
Grid stage_grid_copy_mask(const Prefix& s);

std::uint64_t count_on(const Prefix& s);

// Ruler sequence: entry i (1-based) is tz(i) + 1, length 2^n - 1.
std::vector<int> frontier_labels(int n);

}  // namespace sssst
