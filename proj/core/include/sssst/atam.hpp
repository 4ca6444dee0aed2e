// Abstract tile assembly model at temperature 2.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sssst/oracle.hpp"

namespace sssst {

inline constexpr int kTemperature = 2;

enum Dir : int { N = 0, E = 1, S = 2, W = 3 };
inline constexpr std::array<Dir, 4> kDirs{N, E, S, W};
inline constexpr Dir opposite(Dir d) { return static_cast<Dir>((d + 2) % 4); }
inline constexpr int dx(Dir d) { return d == E ? 1 : d == W ? -1 : 0; }
inline constexpr int dy(Dir d) { return d == N ? 1 : d == S ? -1 : 0; }
const char* dir_name(Dir d);

struct Glue {
    std::string token;
    int strength = 0;
    bool operator==(const Glue&) const = default;
};

// Strength contributed when two facing glues meet.
int binds(const Glue& a, const Glue& b);

enum class Color { Off, On };
enum class Role { Seed, Basecase, Filler, Crawlback, Decision, Popup, Popright };
const char* role_name(Role r);
Role parse_role(const std::string& name);

struct TileType {
    std::string id;
    std::array<Glue, 4> sides;  // indexed by Dir
    Color color = Color::Off;
    Role role = Role::Filler;
    int trit = 0;  // 1..3 for decision tiles, 0 otherwise
    bool operator==(const TileType&) const = default;
};

struct Loc {
    int x = 0;
    int y = 0;
    bool operator==(const Loc&) const = default;
    auto operator<=>(const Loc&) const = default;
};

struct LocHash {
    std::size_t operator()(const Loc& l) const noexcept {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.x)) << 32) |
                                          static_cast<std::uint32_t>(l.y));
    }
};

class Tileset {
public:
    Tileset() = default;
    Tileset(std::vector<TileType> tiles, std::string seed_id);

    const std::vector<TileType>& tiles() const { return tiles_; }
    const TileType& tile(int index) const { return tiles_.at(static_cast<std::size_t>(index)); }
    int index_of(const std::string& id) const;
    int seed_index() const { return seed_; }
    std::size_t size() const { return tiles_.size(); }
    int temperature() const { return kTemperature; }

    // Decision tiles grouped by identical input glues; entry t-1 holds the
    // variant carrying trit t (or -1 if missing).
    const std::vector<std::array<int, 3>>& decision_families() const { return families_; }
    int family_of(int tile_index) const { return family_of_.at(static_cast<std::size_t>(tile_index)); }

    // Tiles whose side `d` carries glue token `token` with positive strength.
    const std::vector<int>& with_glue(Dir d, const std::string& token) const;

    bool operator==(const Tileset& o) const { return tiles_ == o.tiles_ && seed_ == o.seed_; }

private:
    std::vector<TileType> tiles_;
    int seed_ = -1;
    std::vector<std::array<int, 3>> families_;
    std::vector<int> family_of_;
    std::array<std::unordered_map<std::string, std::vector<int>>, 4> by_glue_;
    std::unordered_map<std::string, int> by_id_;
};

class Configuration {
public:
    Configuration() = default;
    // Configuration holding only `tile` at (1,1).
    static Configuration seeded(int tile);

    std::optional<int> at(Loc l) const;
    bool occupied(Loc l) const { return cells_.count(l) != 0; }
    void place(Loc l, int tile);
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::unordered_map<Loc, int, LocHash>& cells() const { return cells_; }
    // Inclusive bounding extent; (0,0,0,0) when empty.
    std::array<int, 4> extent() const;  // min_x, min_y, max_x, max_y

private:
    std::unordered_map<Loc, int, LocHash> cells_;
};

// Per-side strengths a tile of type `t` would receive at `l`.
std::array<int, 4> bound_strengths(const Configuration& c, const Tileset& ts, Loc l, const TileType& t);

// Throws AssemblyError("location occupied") if `l` is taken.
bool attachable(const Configuration& c, const Tileset& ts, Loc l, int tile);

struct FrontierPair {
    Loc loc;
    int tile = -1;
    bool operator==(const FrontierPair&) const = default;
    auto operator<=>(const FrontierPair&) const = default;
};

// All attachable (location, tile) pairs, sorted by location then tile index.
std::vector<FrontierPair> frontier(const Configuration& c, const Tileset& ts);
bool is_terminal(const Configuration& c, const Tileset& ts);

// Minimum cut of the bond graph is at least the temperature. Disconnected
// configurations are unstable.
bool is_stable(const Configuration& c, const Tileset& ts);

struct AttachmentEvent {
    std::uint64_t step = 0;
    Loc loc;
    int tile = -1;
    std::array<int, 4> bound_sides{};
    int total_strength = 0;
    bool operator==(const AttachmentEvent&) const = default;
};

struct DecisionRecord {
    int index = 0;
    Loc loc;
    int trit = 0;
    bool operator==(const DecisionRecord&) const = default;
};

struct Trace {
    std::uint64_t rng_seed = 0;
    std::optional<Prefix> forced;
    int stages = 0;  // stage-complete target, 0 if the run used another policy
    std::vector<AttachmentEvent> events;
    std::vector<DecisionRecord> decisions;
    bool operator==(const Trace&) const = default;
};

struct StopPolicy {
    enum class Kind { StageComplete, MaxEvents, Terminal } kind = Kind::Terminal;
    std::uint64_t value = 0;
    static StopPolicy stage_complete(int n) { return {Kind::StageComplete, static_cast<std::uint64_t>(n)}; }
    static StopPolicy max_events(std::uint64_t m) { return {Kind::MaxEvents, m}; }
    static StopPolicy terminal() { return {Kind::Terminal, 0}; }
};

class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Incremental simulator: maintains the frontier as tiles are added.
class Assembly {
public:
    explicit Assembly(const Tileset& ts);

    const Configuration& configuration() const { return config_; }
    const std::vector<FrontierPair>& frontier_pairs() const { return pairs_; }
    const Trace& trace() const { return trace_; }
    Trace& trace() { return trace_; }

    // Decision tiles for stages beyond `limit` are withheld from the frontier.
    void set_decision_limit(int limit);

    // Uniform choice over the frontier; throws AssemblyError("terminal").
    AttachmentEvent step(std::mt19937_64& rng, const std::optional<Prefix>& forced);
    // Attaches `tile` at `l` (must be attachable) and records the event.
    AttachmentEvent attach(Loc l, int tile);

private:
    void refresh(Loc l);
    void drop_pairs_at(Loc l);
    bool withheld(int tile) const;

    const Tileset* ts_;
    Configuration config_;
    Trace trace_;
    int decision_limit_ = -1;
    std::vector<FrontierPair> pairs_;
    std::unordered_map<Loc, std::vector<std::size_t>, LocHash> slots_;
};

// Event cap for stage-complete(n): 2^(2n) + 4 * 2^n.
std::uint64_t stage_event_cap(int n);

Trace run(const Tileset& ts, StopPolicy stop, std::uint64_t rng_seed, const std::optional<Prefix>& forced = {});

// Rebuilds the configuration from a trace; throws AssemblyError("corrupt
// trace") if any event is not attachable when replayed.
Configuration replay(const Trace& t, const Tileset& ts);

// ON/OFF colouring of [1,2^n]^2; throws AssemblyError if any cell is empty.
Grid coloring(const Configuration& c, const Tileset& ts, int n);

}  // namespace sssst
