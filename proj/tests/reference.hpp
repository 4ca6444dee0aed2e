// Independent reference for the tests: membership by the closed bit formula
// instead of the library's recursion. With X = x-1, Y = y-1, a cell is ON iff
// no scale j has (X_j xor [s_j = 1]) and (Y_j xor [s_j = 3]) both set.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sssst/oracle.hpp"

namespace ref {

inline bool member(std::int64_t x, std::int64_t y, const sssst::Prefix& s) {
    std::uint64_t a = 0, c = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == 1) a |= std::uint64_t{1} << j;
        if (s[j] == 3) c |= std::uint64_t{1} << j;
    }
    return ((static_cast<std::uint64_t>(x - 1) ^ a) & (static_cast<std::uint64_t>(y - 1) ^ c)) == 0;
}

inline sssst::Grid grid(const sssst::Prefix& s) {
    sssst::Grid g(1 << s.size());
    for (int y = 1; y <= g.size; ++y)
        for (int x = 1; x <= g.size; ++x) g.set(x, y, member(x, y, s));
    return g;
}

inline sssst::Prefix random_prefix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> trit(1, 3);
    sssst::Prefix s(static_cast<std::size_t>(n));
    for (auto& t : s) t = trit(rng);
    return s;
}

inline std::uint64_t pow3(int n) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 3;
    return v;
}

}  // namespace ref
