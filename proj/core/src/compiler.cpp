#include "sssst/compiler.hpp"

#include <set>
#include <tuple>

namespace sssst {

std::string CompileReport::summary() const {
    return std::to_string(tile_types) + " tile types, " + std::to_string(glue_tokens) + " glue tokens, " +
           std::to_string(decision_families) + " decision families, fixpoint after " + std::to_string(iterations) +
           " rounds";
}

// Layout, with X = x-1 and Y = y-1 counted from the seed:
//
//   * The lower triangle (Y <= X) grows column by column. Column X holds X in
//     binary, bit j at row j, incremented from column X-1. Above the most
//     significant bit sits a "z-edge" cell, then interior cells up to the
//     diagonal. Incrementing into a z-edge is an overflow: that is where a
//     column 2^k first needs a new bit, and the cell is a decision.
//   * The upper triangle (X < Y) mirrors this row by row, with the row counter
//     running east. Its overflow cells (the gates at (k, 2^k)) are not chosen
//     but unlocked by a crawl signal sent west from the diagonal cell (2^k, 2^k).
//   * Even columns/rows start at the axis and ripple a carry; odd ones start at
//     the carry end of their predecessor and fill the low bits backwards.
//
// Each counter cell holding bit j of its column also relays the trit chosen at
// stage j+1. When the carry stops at row j the new bit is that row's lowest
// changed one, so the cell copies the trit into its column; it is the column's
// label, read back from the north glues of the top row.
//
// Colours are computed from the west and south colours plus the first trit.
// Where one neighbour's colour is only known through a relay (the second
// value carried by the north and east glues) the rule uses it; cells with
// both coordinates even would need the colour of a cell arbitrarily far away
// and use the exclusive or of their west and south neighbours instead.

namespace {

enum Zone { kBits, kZedge, kInterior };
constexpr char kZoneChar[] = {'B', 'Z', 'I'};
enum Start { kNoStart, kEvenRow, kOddRow };

std::string kv(const char* k, int v) { return std::string(";") + k + "=" + std::to_string(v); }

// East glue of the lower triangle (read by the column to the east).
struct LtEast {
    int zone, bit, msb, trit, yodd, y0, diag, color, fwd, s1, strength;
    auto operator<=>(const LtEast&) const = default;
    Glue glue() const {
        return {std::string("le;z=") + kZoneChar[zone] + kv("b", bit) + kv("m", msb) + kv("r", trit) + kv("yo", yodd) +
                    kv("y0", y0) + kv("d", diag) + kv("c", color) + kv("f", fwd) + kv("s", s1),
                strength};
    }
};

// North glue of the lower triangle (read by the cell above in the column).
struct LtNorth {
    int carry, msb, xodd, tcol, pow2, color, fwd, s1, strength;
    auto operator<=>(const LtNorth&) const = default;
    Glue glue() const {
        return {"ln" + kv("k", carry) + kv("m", msb) + kv("xo", xodd) + kv("t", tcol) + kv("p", pow2) +
                    kv("c", color) + kv("f", fwd) + kv("s", s1),
                strength};
    }
};

// North glue of the upper triangle and of the diagonal.
struct UtNorth {
    int zone, bit, msb, tcol, xodd, x0, color, fwd, s1, start;
    auto operator<=>(const UtNorth&) const = default;
    Glue glue() const {
        static constexpr const char* kStart[] = {"", ";st=ev", ";st=od"};
        return {std::string("un;z=") + kZoneChar[zone] + kv("b", bit) + kv("m", msb) + kv("t", tcol) +
                    kv("xo", xodd) + kv("x0", x0) + kv("c", color) + kv("f", fwd) + kv("s", s1) + kStart[start],
                start == kNoStart ? 1 : 2};
    }
};

// East glue of the upper triangle (read by the cell to the east in the row).
struct UtEast {
    int carry, msb, yodd, color, s1;
    auto operator<=>(const UtEast&) const = default;
    Glue glue() const {
        return {"ue" + kv("k", carry) + kv("m", msb) + kv("yo", yodd) + kv("c", color) + kv("s", s1), 1};
    }
};

Glue down_glue(int s1) { return {"ld" + kv("s", s1), 1}; }    // odd column, filled downwards
Glue west_glue(int s1) { return {"uw" + kv("s", s1), 1}; }    // odd row, filled westwards
Glue crawl_glue(int s1) { return {"cr" + kv("s", s1), 1}; }   // crawl from a power-of-two diagonal
const Glue kNull{};

// Colour of cell (X, Y) from its west and south colours. The callers pass the
// best available values; every case except even/even is exact.
int color_rule(int xodd, int yodd, int x0, int y0, int s1, int cw, int cs) {
    if (x0 && y0) return 1;
    if (x0) return yodd ? (cs && s1 != 1) : cs;
    if (y0) return xodd ? (cw && s1 != 3) : cw;
    if (xodd && yodd) return s1 == 1 ? cs : s1 == 3 ? cw : 0;
    if (xodd) return cw && s1 != 3;
    if (yodd) return cs && s1 != 1;
    return cw != cs;
}

struct Sides {
    Glue n, e, s, w;
};

class Closure {
public:
    explicit Closure(std::size_t ceiling) : ceiling_(ceiling) {}

    std::set<LtEast> lt_east;
    std::set<LtNorth> lt_north;
    std::set<int> lt_down;
    std::set<UtNorth> ut_north;
    std::set<UtEast> ut_east;
    std::set<int> ut_west, crawl;

    bool changed = false;

    void add(const std::string& prefix, Role role, int color, const Sides& s, int trit = 0) {
        std::string key = std::string(role_name(role)) + "|" + std::to_string(color) + "|" + std::to_string(trit);
        for (const Glue* g : {&s.n, &s.e, &s.s, &s.w}) key += "|" + g->token + "/" + std::to_string(g->strength);
        if (!seen_.insert(key).second) return;
        TileType t;
        t.id = prefix + std::to_string(tiles_.size());
        t.sides = {s.n, s.e, s.s, s.w};
        t.color = color ? Color::On : Color::Off;
        t.role = role;
        tiles_.push_back(std::move(t));
        changed = true;
        if (tiles_.size() > ceiling_) throw ClosureDiverged();
    }

    // The three variants share the id stem; only the chosen trit differs.
    template <typename F>
    void add_decision(F&& variant) {
        const std::string stem = "dec" + std::to_string(families_);
        bool fresh = false;
        for (int t = 1; t <= 3; ++t) {
            auto [color, sides] = variant(t);
            std::string key = "decision|" + std::to_string(color) + "|" + std::to_string(t);
            for (const Glue* g : {&sides.n, &sides.e, &sides.s, &sides.w})
                key += "|" + g->token + "/" + std::to_string(g->strength);
            if (!seen_.insert(key).second) continue;
            fresh = true;
            TileType tile;
            tile.id = stem + "#" + std::to_string(t);
            tile.sides = {sides.n, sides.e, sides.s, sides.w};
            tile.color = color ? Color::On : Color::Off;
            tile.role = Role::Decision;
            tile.trit = t;
            tiles_.push_back(std::move(tile));
        }
        if (fresh) {
            ++families_;
            changed = true;
        }
        if (tiles_.size() > ceiling_) throw ClosureDiverged();
    }

    template <typename Set, typename V>
    void offer(Set& set, const V& v) {
        if (set.insert(v).second) changed = true;
    }

    std::vector<TileType> take() { return std::move(tiles_); }
    std::size_t families() const { return families_; }

private:
    std::size_t ceiling_;
    std::set<std::string> seen_;
    std::vector<TileType> tiles_;
    std::size_t families_ = 0;
};

// ---------------------------------------------------------- lower triangle

// Counter cell bound by its west and south neighbours.
void lt_west_south(Closure& cl, const LtEast& w, const LtNorth& s) {
    if (w.s1 == 0 || w.s1 != s.s1 || w.strength != 1 || s.strength != 1) return;
    const int s1 = w.s1;
    const int relay = w.diag ? 2 : 1;  // a cell east of the diagonal is the next diagonal's support
    auto fwd_w = [&](int c) { return w.diag ? c : 0; };
    const Sides base{{}, {}, s.glue(), w.glue()};

    if (s.carry && w.zone == kZedge) {
        // Overflow: the column reaches a power of two and needs a new bit.
        cl.add_decision([&](int t) {
            const int c = color_rule(s.xodd, w.yodd, 0, w.y0, s1, w.color, s.color);
            Sides sd = base;
            sd.e = LtEast{kBits, 1, 1, t, w.yodd, w.y0, 0, c, s.xodd ? 0 : s.color, s1, 2}.glue();
            const LtNorth n{0, 1, s.xodd, t, 1, c, w.diag ? w.color : 0, s1, relay};
            sd.n = n.glue();
            cl.offer(cl.lt_east, LtEast{kBits, 1, 1, t, w.yodd, w.y0, 0, c, s.xodd ? 0 : s.color, s1, 2});
            cl.offer(cl.lt_north, n);
            return std::pair{c, sd};
        });
        return;
    }
    if (s.carry && w.zone != kBits) return;

    int zone = kBits, bit = 0, msb = 0, carry = 0, trit = 0, tcol = s.tcol, end = 0;
    if (s.carry) {
        bit = w.bit ^ 1;
        carry = w.bit;
        trit = w.trit;
        end = !carry;
        if (end) tcol = w.trit;
    } else if (w.zone == kBits) {
        bit = w.bit;
        msb = w.msb;
        trit = w.trit;
    } else {
        zone = s.msb ? kZedge : kInterior;
    }
    const int c = color_rule(s.xodd, w.yodd, 0, w.y0, s1, w.color, s.color);
    const LtEast e{zone, bit, msb, trit, w.yodd, w.y0, 0, c, s.xodd ? 0 : s.color, s1, end ? 2 : 1};
    const LtNorth n{carry, zone == kBits ? msb : 0, s.xodd, tcol, s.pow2, c, fwd_w(w.color), s1, relay};
    cl.offer(cl.lt_east, e);
    cl.offer(cl.lt_north, n);
    Sides sd = base;
    sd.e = e.glue();
    sd.n = n.glue();
    cl.add("lt", Role::Filler, c, sd);
}

// Cells bound by a single strength-2 glue from the west: the first decision,
// the bottom cell of an even column, and the first cell of an odd column.
void lt_west_only(Closure& cl, const LtEast& w) {
    if (w.strength != 2) return;
    if (w.s1 == 0) {
        cl.add_decision([&](int t) {
            const int c = color_rule(1, 0, 0, 1, t, w.color, 0);
            const LtEast e{kBits, 1, 1, t, 0, 1, 0, c, 0, t, 2};
            const LtNorth n{0, 1, 1, t, 1, c, w.color, t, 2};
            cl.offer(cl.lt_east, e);
            cl.offer(cl.lt_north, n);
            return std::pair{c, Sides{n.glue(), e.glue(), kNull, w.glue()}};
        });
        return;
    }
    if (w.zone != kBits || w.bit != 1) return;
    const int s1 = w.s1;
    if (w.y0) {
        // Bottom of an even column: clear bit 0 and carry upwards.
        const int c = color_rule(0, 0, 0, 1, s1, w.color, 0);
        const LtEast e{kBits, 0, 0, w.trit, 0, 1, 0, c, 0, s1, 1};
        const LtNorth n{1, 0, 0, 0, 0, c, 0, s1, 1};
        cl.offer(cl.lt_east, e);
        cl.offer(cl.lt_north, n);
        cl.add("lt", Role::Filler, c, {n.glue(), e.glue(), kNull, w.glue()});
        return;
    }
    // First cell of an odd column, at the row where the carry stopped.
    const int c = color_rule(1, w.yodd, 0, 0, s1, w.color, w.fwd && s1 != 3);
    const LtEast e{kBits, 1, w.msb, w.trit, w.yodd, 0, 0, c, 0, s1, 1};
    const LtNorth n{0, w.msb, 1, s1, 0, c, 0, s1, 1};
    cl.offer(cl.lt_east, e);
    cl.offer(cl.lt_north, n);
    cl.offer(cl.lt_down, s1);
    cl.add("lt", Role::Filler, c, {n.glue(), e.glue(), down_glue(s1), w.glue()});
}

// Low bits of an odd column, filled downwards from its first cell.
void lt_north_west(Closure& cl, int s1, const LtEast& w) {
    if (w.strength != 1 || w.s1 != s1 || w.zone != kBits || w.bit != 0 || w.msb || w.diag) return;
    const int c = color_rule(1, w.yodd, 0, w.y0, s1, w.color, w.fwd && s1 != 3);
    const LtEast e{kBits, w.y0 ? 1 : 0, 0, w.trit, w.yodd, w.y0, 0, c, 0, s1, w.y0 ? 2 : 1};
    cl.offer(cl.lt_east, e);
    if (!w.y0) cl.offer(cl.lt_down, s1);
    cl.add("lt", Role::Filler, c, {down_glue(s1), e.glue(), w.y0 ? kNull : down_glue(s1), w.glue()});
}

// Diagonal cell (X, X), bound by its south neighbour alone.
void diagonal(Closure& cl, const LtNorth& s) {
    if (s.strength != 2) return;
    const int s1 = s.s1;
    const int zone = s.msb ? kZedge : kInterior;
    const int cw = s.xodd ? (s.fwd && s1 != 1) : s.fwd;
    const int c = color_rule(s.xodd, s.xodd, 0, 0, s1, cw, s.color);
    const LtEast e{zone, 0, 0, 0, s.xodd, 0, 1, c, 0, s1, 1};
    const UtNorth n{zone, 0, 0, s.tcol, s.xodd, 0, c, cw, s1, kNoStart};
    cl.offer(cl.lt_east, e);
    cl.offer(cl.ut_north, n);
    if (s.pow2) cl.offer(cl.crawl, s1);
    cl.add("diag", Role::Filler, c, {n.glue(), e.glue(), s.glue(), s.pow2 ? crawl_glue(s1) : kNull});
}

// ---------------------------------------------------------- upper triangle

void ut_west_south(Closure& cl, const UtEast& w, const UtNorth& s) {
    if (s.start != kNoStart || w.s1 == 0 || w.s1 != s.s1) return;
    const int s1 = w.s1;
    int zone = kBits, bit = 0, msb = 0, carry = 0, end = 0;
    if (w.carry) {
        if (s.zone != kBits) return;  // overflow is handled by the gate
        bit = s.bit ^ 1;
        carry = s.bit;
        end = !carry;
    } else if (s.zone == kBits) {
        bit = s.bit;
        msb = s.msb;
    } else {
        zone = w.msb ? kZedge : kInterior;
    }
    const int c = color_rule(s.xodd, w.yodd, s.x0, 0, s1, w.color, s.color);
    const UtEast e{carry, msb, w.yodd, c, s1};
    const UtNorth n{zone, bit, msb, s.tcol, s.xodd, s.x0, c, w.color, s1, end ? kOddRow : kNoStart};
    cl.offer(cl.ut_east, e);
    cl.offer(cl.ut_north, n);
    cl.add("ut", Role::Filler, c, {n.glue(), e.glue(), s.glue(), w.glue()});
}

// Cells bound by a single strength-2 glue from the south: row starts.
void ut_south_only(Closure& cl, const UtNorth& s) {
    const int s1 = s.s1;
    if (s.start == kEvenRow) {
        if (!s.x0 || s.zone != kBits || s.bit != 1) return;
        const int c = color_rule(0, 0, 1, 0, s1, 1, s.color);
        const UtEast e{1, 0, 0, c, s1};
        const UtNorth n{kBits, 0, 0, s.tcol, 0, 1, c, 0, s1, kNoStart};
        cl.offer(cl.ut_east, e);
        cl.offer(cl.ut_north, n);
        cl.add("ut", Role::Filler, c, {n.glue(), e.glue(), s.glue(), kNull});
    } else if (s.start == kOddRow) {
        if (s.x0) return;
        const int cw = s.fwd && s1 != 1;
        const int c = color_rule(s.xodd, 1, 0, 0, s1, cw, s.color);
        const UtEast e{0, s.msb, 1, c, s1};
        const UtNorth n{kBits, 1, s.msb, s.tcol, s.xodd, 0, c, cw, s1, kNoStart};
        cl.offer(cl.ut_east, e);
        cl.offer(cl.ut_north, n);
        cl.offer(cl.ut_west, s1);
        cl.add("ut", Role::Filler, c, {n.glue(), e.glue(), s.glue(), west_glue(s1)});
    }
}

// Low bits of an odd row, filled westwards from its first cell.
void ut_east_south(Closure& cl, int s1, const UtNorth& s) {
    if (s.start != kNoStart || s.s1 != s1 || s.zone != kBits || s.msb) return;
    const int cw = s.fwd && s1 != 1;
    const int c = color_rule(s.xodd, 1, s.x0, 0, s1, cw, s.color);
    const UtNorth n{kBits, s.x0 ? 1 : s.bit, 0, s.tcol, s.xodd, s.x0, c, cw, s1, s.x0 ? kEvenRow : kNoStart};
    cl.offer(cl.ut_north, n);
    if (!s.x0) cl.offer(cl.ut_west, s1);
    cl.add("ut", Role::Filler, c, {n.glue(), west_glue(s1), s.glue(), s.x0 ? kNull : west_glue(s1)});
}

// Row 2^k: the crawl runs west from the diagonal over interior cells and ends
// at the gate, the z-edge cell of row 2^k - 1, which becomes the new top bit.
void crawl_south(Closure& cl, int s1, const UtNorth& s) {
    if (s.start != kNoStart || (s.s1 != s1 && s.s1 != 0)) return;
    if (s.zone == kZedge) {
        const int yodd = s.x0;  // the only gate on the axis is at row 1
        const int c = color_rule(s.xodd, yodd, s.x0, 0, s1, s.fwd, s.color);
        const UtNorth n{kBits, 1, 1, s.tcol, s.xodd, s.x0, c, s.fwd, s1, s.x0 ? kEvenRow : kOddRow};
        cl.offer(cl.ut_north, n);
        cl.add("gate", Role::Crawlback, c, {n.glue(), crawl_glue(s1), s.glue(), kNull});
    } else if (s.zone == kInterior && !s.x0) {
        const int c = color_rule(s.xodd, 0, 0, 0, s1, s.fwd, s.color);
        const UtNorth n{kInterior, 0, 0, s.tcol, s.xodd, 0, c, s.fwd, s1, kNoStart};
        cl.offer(cl.ut_north, n);
        cl.offer(cl.crawl, s1);
        cl.add("crawl", Role::Crawlback, c, {n.glue(), crawl_glue(s1), s.glue(), crawl_glue(s1)});
    }
}

}  // namespace

int column_trit(const std::string& north_label) {
    if (north_label.rfind("un;", 0) != 0) return 0;
    const auto p = north_label.find(";t=");
    return p == std::string::npos ? 0 : north_label[p + 3] - '0';
}

Tileset generate(CompileReport* report, std::size_t ceiling) {
    Closure cl(ceiling);

    // Seed (X, Y) = (0, 0): ON, an empty column counter and an empty row counter.
    const LtEast seed_e{kZedge, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2};
    const UtNorth seed_n{kZedge, 0, 0, 0, 0, 1, 1, 1, 0, kNoStart};
    cl.lt_east.insert(seed_e);
    cl.ut_north.insert(seed_n);
    cl.add("seed", Role::Seed, 1, {seed_n.glue(), seed_e.glue(), kNull, kNull});

    std::size_t rounds = 0;
    do {
        cl.changed = false;
        ++rounds;
        const auto lte = cl.lt_east;
        const auto ltn = cl.lt_north;
        const auto ltd = cl.lt_down;
        const auto utn = cl.ut_north;
        const auto ute = cl.ut_east;
        const auto utw = cl.ut_west;
        const auto cr = cl.crawl;
        for (const auto& w : lte) {
            lt_west_only(cl, w);
            for (const auto& s : ltn) lt_west_south(cl, w, s);
            for (int d : ltd) lt_north_west(cl, d, w);
        }
        for (const auto& s : ltn) diagonal(cl, s);
        for (const auto& s : utn) {
            ut_south_only(cl, s);
            for (const auto& w : ute) ut_west_south(cl, w, s);
            for (int s1 : utw) ut_east_south(cl, s1, s);
            for (int s1 : cr) crawl_south(cl, s1, s);
        }
    } while (cl.changed);

    const std::size_t families = cl.families();
    std::vector<TileType> tiles = cl.take();
    const std::string seed_id = tiles.front().id;
    if (report) {
        std::set<std::string> tokens;
        for (const auto& t : tiles)
            for (const auto& g : t.sides)
                if (g.strength > 0) tokens.insert(g.token);
        report->tile_types = tiles.size();
        report->glue_tokens = tokens.size();
        report->decision_families = families;
        report->iterations = rounds;
    }
    return Tileset(std::move(tiles), seed_id);
}

}  // namespace sssst
