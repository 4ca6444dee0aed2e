#include "sssst/atam.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>

namespace sssst {

const char* dir_name(Dir d) {
    static constexpr const char* names[] = {"N", "E", "S", "W"};
    return names[d];
}

int binds(const Glue& a, const Glue& b) {
    return (a.strength > 0 && a.strength == b.strength && a.token == b.token) ? a.strength : 0;
}

namespace {
constexpr std::array<const char*, 7> kRoleNames{"seed",     "basecase", "filler", "crawlback",
                                                "decision", "popup",    "popright"};
}

const char* role_name(Role r) { return kRoleNames[static_cast<std::size_t>(r)]; }

Role parse_role(const std::string& name) {
    for (std::size_t i = 0; i < kRoleNames.size(); ++i)
        if (name == kRoleNames[i]) return static_cast<Role>(i);
    throw std::invalid_argument("unknown role '" + name + "'");
}

// ---------------------------------------------------------------- Tileset

Tileset::Tileset(std::vector<TileType> tiles, std::string seed_id) : tiles_(std::move(tiles)) {
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        const auto& t = tiles_[i];
        if (!by_id_.emplace(t.id, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate tile id '" + t.id + "'");
        for (Dir d : kDirs) {
            const Glue& g = t.sides[d];
            if (g.strength < 0 || g.strength > 2)
                throw std::invalid_argument("tile '" + t.id + "': glue strength out of range");
            if (g.strength > 0) by_glue_[d][g.token].push_back(static_cast<int>(i));
        }
    }
    seed_ = index_of(seed_id);

    // Decision variants share an id stem and end in "#<trit>".
    family_of_.assign(tiles_.size(), -1);
    std::map<std::string, int> stems;
    for (std::size_t i = 0; i < tiles_.size(); ++i) {
        const auto& t = tiles_[i];
        if (t.role != Role::Decision) continue;
        if (t.trit < 1 || t.trit > 3 || t.id.size() < 2 || t.id[t.id.size() - 2] != '#')
            throw std::invalid_argument("decision tile '" + t.id + "' must end in #<trit>");
        const std::string stem = t.id.substr(0, t.id.size() - 2);
        auto [it, fresh] = stems.emplace(stem, static_cast<int>(families_.size()));
        if (fresh) families_.push_back({-1, -1, -1});
        families_[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(t.trit - 1)] = static_cast<int>(i);
        family_of_[i] = it->second;
    }
}

int Tileset::index_of(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw std::out_of_range("unknown tile id '" + id + "'");
    return it->second;
}

const std::vector<int>& Tileset::with_glue(Dir d, const std::string& token) const {
    static const std::vector<int> none;
    auto it = by_glue_[d].find(token);
    return it == by_glue_[d].end() ? none : it->second;
}

// ---------------------------------------------------------- Configuration

Configuration Configuration::seeded(int tile) {
    Configuration c;
    c.place({1, 1}, tile);
    return c;
}

std::optional<int> Configuration::at(Loc l) const {
    auto it = cells_.find(l);
    if (it == cells_.end()) return std::nullopt;
    return it->second;
}

void Configuration::place(Loc l, int tile) {
    if (!cells_.emplace(l, tile).second) throw AssemblyError("location occupied");
}

std::array<int, 4> Configuration::extent() const {
    if (cells_.empty()) return {0, 0, 0, 0};
    std::array<int, 4> e{cells_.begin()->first.x, cells_.begin()->first.y, cells_.begin()->first.x,
                         cells_.begin()->first.y};
    for (const auto& [l, t] : cells_) {
        e[0] = std::min(e[0], l.x);
        e[1] = std::min(e[1], l.y);
        e[2] = std::max(e[2], l.x);
        e[3] = std::max(e[3], l.y);
    }
    return e;
}

// --------------------------------------------------------------- queries

std::array<int, 4> bound_strengths(const Configuration& c, const Tileset& ts, Loc l, const TileType& t) {
    std::array<int, 4> out{};
    for (Dir d : kDirs) {
        if (auto nb = c.at({l.x + dx(d), l.y + dy(d)}))
            out[d] = binds(t.sides[d], ts.tile(*nb).sides[opposite(d)]);
    }
    return out;
}

namespace {

int total(const std::array<int, 4>& a) { return a[0] + a[1] + a[2] + a[3]; }

// Candidate tile types at an empty location, in ascending index order.
std::vector<int> candidates_at(const Configuration& c, const Tileset& ts, Loc l) {
    std::vector<int> cand;
    for (Dir d : kDirs) {
        auto nb = c.at({l.x + dx(d), l.y + dy(d)});
        if (!nb) continue;
        const Glue& g = ts.tile(*nb).sides[opposite(d)];
        if (g.strength <= 0) continue;
        for (int t : ts.with_glue(d, g.token)) cand.push_back(t);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<int> out;
    for (int t : cand)
        if (total(bound_strengths(c, ts, l, ts.tile(t))) >= kTemperature) out.push_back(t);
    return out;
}

bool in_quadrant(Loc l) { return l.x >= 1 && l.y >= 1; }

}  // namespace

bool attachable(const Configuration& c, const Tileset& ts, Loc l, int tile) {
    if (c.occupied(l)) throw AssemblyError("location occupied");
    return total(bound_strengths(c, ts, l, ts.tile(tile))) >= kTemperature;
}

std::vector<FrontierPair> frontier(const Configuration& c, const Tileset& ts) {
    std::vector<Loc> open;
    for (const auto& [l, t] : c.cells())
        for (Dir d : kDirs) {
            Loc n{l.x + dx(d), l.y + dy(d)};
            if (in_quadrant(n) && !c.occupied(n)) open.push_back(n);
        }
    std::sort(open.begin(), open.end());
    open.erase(std::unique(open.begin(), open.end()), open.end());
    std::vector<FrontierPair> out;
    for (Loc l : open)
        for (int t : candidates_at(c, ts, l)) out.push_back({l, t});
    return out;
}

bool is_terminal(const Configuration& c, const Tileset& ts) { return frontier(c, ts).empty(); }

bool is_stable(const Configuration& c, const Tileset& ts) {
    if (c.size() <= 1) return !c.empty();
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                        boost::property<boost::edge_weight_t, int>>;
    std::vector<Loc> locs;
    std::unordered_map<Loc, int, LocHash> id;
    for (const auto& [l, t] : c.cells()) locs.push_back(l);
    std::sort(locs.begin(), locs.end());
    for (std::size_t i = 0; i < locs.size(); ++i) id[locs[i]] = static_cast<int>(i);
    Graph g(locs.size());
    for (const Loc& l : locs) {
        for (Dir d : {N, E}) {
            Loc n{l.x + dx(d), l.y + dy(d)};
            auto it = id.find(n);
            if (it == id.end()) continue;
            int w = binds(ts.tile(*c.at(l)).sides[d], ts.tile(*c.at(n)).sides[opposite(d)]);
            if (w > 0) boost::add_edge(static_cast<std::size_t>(id[l]), static_cast<std::size_t>(it->second), w, g);
        }
    }
    std::vector<int> comp(locs.size());
    if (boost::connected_components(g, comp.data()) != 1) return false;
    return boost::stoer_wagner_min_cut(g, boost::get(boost::edge_weight, g)) >= kTemperature;
}

// --------------------------------------------------------------- Assembly

Assembly::Assembly(const Tileset& ts) : ts_(&ts) {
    if (ts.seed_index() < 0) throw std::invalid_argument("tileset has no seed");
    config_ = Configuration::seeded(ts.seed_index());
    for (Dir d : kDirs) refresh({1 + dx(d), 1 + dy(d)});
}

void Assembly::set_decision_limit(int limit) {
    decision_limit_ = limit;
    std::vector<Loc> locs;
    for (const auto& [l, v] : slots_) locs.push_back(l);
    std::sort(locs.begin(), locs.end());
    for (Loc l : locs) refresh(l);
}

bool Assembly::withheld(int tile) const {
    return decision_limit_ >= 0 && ts_->tile(tile).role == Role::Decision &&
           static_cast<int>(trace_.decisions.size()) >= decision_limit_;
}

void Assembly::drop_pairs_at(Loc l) {
    auto it = slots_.find(l);
    if (it == slots_.end()) return;
    std::vector<std::size_t> idx = std::move(it->second);
    slots_.erase(it);
    std::sort(idx.rbegin(), idx.rend());
    for (std::size_t i : idx) {
        const std::size_t last = pairs_.size() - 1;
        if (i != last) {
            pairs_[i] = pairs_[last];
            auto& moved = slots_[pairs_[i].loc];
            std::replace(moved.begin(), moved.end(), last, i);
        }
        pairs_.pop_back();
    }
}

void Assembly::refresh(Loc l) {
    drop_pairs_at(l);
    if (!in_quadrant(l) || config_.occupied(l)) return;
    for (int t : candidates_at(config_, *ts_, l)) {
        if (withheld(t)) continue;
        slots_[l].push_back(pairs_.size());
        pairs_.push_back({l, t});
    }
}

AttachmentEvent Assembly::attach(Loc l, int tile) {
    if (!attachable(config_, *ts_, l, tile)) throw AssemblyError("tile not attachable");
    const TileType& t = ts_->tile(tile);
    AttachmentEvent ev;
    ev.step = trace_.events.size();
    ev.loc = l;
    ev.tile = tile;
    ev.bound_sides = bound_strengths(config_, *ts_, l, t);
    ev.total_strength = total(ev.bound_sides);
    config_.place(l, tile);
    trace_.events.push_back(ev);
    if (t.role == Role::Decision)
        trace_.decisions.push_back({static_cast<int>(trace_.decisions.size()) + 1, l, t.trit});
    refresh(l);
    for (Dir d : kDirs) refresh({l.x + dx(d), l.y + dy(d)});
    if (t.role == Role::Decision && decision_limit_ >= 0) set_decision_limit(decision_limit_);
    return ev;
}

AttachmentEvent Assembly::step(std::mt19937_64& rng, const std::optional<Prefix>& forced) {
    if (pairs_.empty()) throw AssemblyError("terminal");
    std::uniform_int_distribution<std::size_t> pick(0, pairs_.size() - 1);
    FrontierPair chosen = pairs_[pick(rng)];
    const TileType& t = ts_->tile(chosen.tile);
    const std::size_t k = trace_.decisions.size() + 1;
    if (t.role == Role::Decision && forced && k <= forced->size()) {
        const int variant = ts_->decision_families()[static_cast<std::size_t>(ts_->family_of(chosen.tile))]
                                                    [static_cast<std::size_t>((*forced)[k - 1] - 1)];
        if (variant < 0) throw AssemblyError("decision family lacks forced trit");
        chosen.tile = variant;
    }
    return attach(chosen.loc, chosen.tile);
}

std::uint64_t stage_event_cap(int n) {
    return (std::uint64_t{1} << (2 * n)) + 4 * (std::uint64_t{1} << n);
}

Trace run(const Tileset& ts, StopPolicy stop, std::uint64_t rng_seed, const std::optional<Prefix>& forced) {
    Assembly a(ts);
    a.trace().rng_seed = rng_seed;
    a.trace().forced = forced;
    std::mt19937_64 rng(rng_seed);
    switch (stop.kind) {
        case StopPolicy::Kind::StageComplete: {
            const int n = static_cast<int>(stop.value);
            a.trace().stages = n;
            a.set_decision_limit(n);
            const std::uint64_t cap = stage_event_cap(n);
            while (!a.frontier_pairs().empty()) {
                if (a.trace().events.size() >= cap) throw AssemblyError("budget exceeded");
                a.step(rng, forced);
            }
            break;
        }
        case StopPolicy::Kind::MaxEvents:
            while (a.trace().events.size() < stop.value && !a.frontier_pairs().empty()) a.step(rng, forced);
            break;
        case StopPolicy::Kind::Terminal:
            while (!a.frontier_pairs().empty()) a.step(rng, forced);
            break;
    }
    return a.trace();
}

Configuration replay(const Trace& t, const Tileset& ts) {
    Configuration c = Configuration::seeded(ts.seed_index());
    for (const auto& ev : t.events) {
        if (ev.tile < 0 || static_cast<std::size_t>(ev.tile) >= ts.size() || c.occupied(ev.loc) ||
            !in_quadrant(ev.loc) || !attachable(c, ts, ev.loc, ev.tile))
            throw AssemblyError("corrupt trace");
        c.place(ev.loc, ev.tile);
    }
    return c;
}

Grid coloring(const Configuration& c, const Tileset& ts, int n) {
    const int side = 1 << n;
    Grid g(side);
    for (int y = 1; y <= side; ++y)
        for (int x = 1; x <= side; ++x) {
            auto t = c.at({x, y});
            if (!t) throw AssemblyError("cell (" + std::to_string(x) + "," + std::to_string(y) + ") not tiled");
            g.set(x, y, ts.tile(*t).color == Color::On);
        }
    return g;
}

}  // namespace sssst
