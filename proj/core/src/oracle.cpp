#include "sssst/oracle.hpp"

#include <bit>

namespace sssst {

Prefix parse_prefix(const std::string& text) {
    Prefix s;
    s.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '3') throw std::invalid_argument("invalid trit '" + std::string(1, c) + "'");
        s.push_back(c - '0');
    }
    return s;
}

std::string prefix_to_string(const Prefix& s) {
    std::string out;
    for (int t : s) out.push_back(static_cast<char>('0' + t));
    return out;
}

namespace {

// j = 0 for x = 1, otherwise ceil(log2 x).
int scale_of(std::int64_t v) {
    return v == 1 ? 0 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v - 1)));
}

}  // namespace

bool member(std::int64_t x, std::int64_t y, const Prefix& s) {
    if (x < 1 || y < 1) throw std::invalid_argument("coordinates must be positive");
    const int n = static_cast<int>(s.size());
    if (n < 62 && (x > (std::int64_t{1} << n) || y > (std::int64_t{1} << n)))
        throw std::out_of_range("prefix too short");
    while (x != 1 || y != 1) {
        const int j = scale_of(x);
        const int k = scale_of(y);
        const int m = j > k ? j : k;
        const int sm = s[m - 1];
        if (j < k) {
            if (sm == 1) return false;
            y -= std::int64_t{1} << (k - 1);
        } else if (j == k) {
            if (sm == 2) return false;
            x -= std::int64_t{1} << (j - 1);
            y -= std::int64_t{1} << (k - 1);
        } else {
            if (sm == 3) return false;
            x -= std::int64_t{1} << (j - 1);
        }
    }
    return true;
}

Grid stage_grid(const Prefix& s) {
    const int side = 1 << s.size();
    Grid g(side);
    for (int y = 1; y <= side; ++y)
        for (int x = 1; x <= side; ++x) g.set(x, y, member(x, y, s));
    return g;
}

Grid stage_grid_copy_mask(const Prefix& s) {
    Grid g(1);
    g.set(1, 1, true);
    for (int trit : s) {
        const int h = g.size;
        Grid next(2 * h);
        for (int y = 1; y <= h; ++y) {
            for (int x = 1; x <= h; ++x) {
                const bool on = g.at(x, y);
                next.set(x, y, on);
                next.set(x, y + h, on && trit != 1);
                next.set(x + h, y + h, on && trit != 2);
                next.set(x + h, y, on && trit != 3);
            }
        }
        g = std::move(next);
    }
    return g;
}

std::uint64_t count_on(const Prefix& s) {
    std::uint64_t total = 0;
    for (auto c : stage_grid(s).cells) total += c;
    return total;
}

std::vector<int> frontier_labels(int n) {
    if (n < 1) throw std::invalid_argument("stage must be >= 1");
    const std::uint64_t len = (std::uint64_t{1} << n) - 1;
    std::vector<int> out;
    out.reserve(len);
    for (std::uint64_t i = 1; i <= len; ++i) out.push_back(std::countr_zero(i) + 1);
    return out;
}

}  // namespace sssst
