#include "sssst/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sssst {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 4> kSideNames{"north", "east", "south", "west"};

const char* color_name(Color c) { return c == Color::On ? "ON" : "OFF"; }

Color parse_color(const json& j, const std::string& where) {
    const std::string v = j.get<std::string>();
    if (v == "ON") return Color::On;
    if (v == "OFF") return Color::Off;
    throw FormatError(where + ": color must be ON or OFF");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed document: ") + e.what());
    }
}

void expect_header(const json& doc, const std::string& format) {
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != format)
        throw FormatError("field 'format': expected \"" + format + "\"");
    if (!doc.contains("version") || doc["version"] != kFormatVersion)
        throw FormatError("field 'version': unsupported version");
}

// Wraps type errors with the offending field path.
template <typename F>
auto field(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError("field '" + where + "': " + e.what());
    }
}

}  // namespace

std::string document_format(const std::string& text) {
    try {
        json doc = json::parse(text);
        if (doc.is_object() && doc.contains("format") && doc["format"].is_string()) return doc["format"];
    } catch (const json::exception&) {
    }
    return "";
}

// ------------------------------------------------------------------ tileset

std::string emit_tileset(const Tileset& ts) {
    std::ostringstream out;
    out << "{\"format\":\"sssst-tileset\",\"version\":" << kFormatVersion << ",\"temperature\":" << kTemperature
        << ",\"seed\":" << json(ts.tile(ts.seed_index()).id).dump() << ",\"tiles\":[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const TileType& t = ts.tiles()[i];
        json j;
        j["name"] = t.id;
        j["color"] = color_name(t.color);
        j["role"] = role_name(t.role);
        j["trit"] = t.trit;
        for (Dir d : kDirs) j[kSideNames[d]] = {{"label", t.sides[d].token}, {"strength", t.sides[d].strength}};
        out << (i ? ",\n" : "\n") << j.dump();
    }
    out << "\n]}\n";
    return out.str();
}

Tileset parse_tileset(const std::string& text) {
    const json doc = parse_json(text);
    expect_header(doc, "sssst-tileset");
    const int temp = field("temperature", [&] { return doc.at("temperature").get<int>(); });
    if (temp != kTemperature) throw FormatError("field 'temperature': must be 2");
    const std::string seed = field("seed", [&] { return doc.at("seed").get<std::string>(); });
    std::vector<TileType> tiles;
    const json& arr = field("tiles", [&]() -> const json& { return doc.at("tiles"); });
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "tiles[" + std::to_string(i) + "]";
        const json& j = arr[i];
        TileType t;
        t.id = field(where + ".name", [&] { return j.at("name").get<std::string>(); });
        t.color = parse_color(field(where + ".color", [&]() -> const json& { return j.at("color"); }), where + ".color");
        try {
            t.role = parse_role(field(where + ".role", [&] { return j.at("role").get<std::string>(); }));
        } catch (const std::invalid_argument& e) {
            throw FormatError("field '" + where + ".role': " + e.what());
        }
        t.trit = field(where + ".trit", [&] { return j.value("trit", 0); });
        for (Dir d : kDirs) {
            const std::string w = where + "." + kSideNames[d];
            t.sides[d].token = field(w + ".label", [&] { return j.at(kSideNames[d]).at("label").get<std::string>(); });
            t.sides[d].strength = field(w + ".strength", [&] { return j.at(kSideNames[d]).at("strength").get<int>(); });
            if (t.sides[d].strength < 0 || t.sides[d].strength > 2)
                throw FormatError("field '" + w + ".strength': must be 0, 1 or 2");
        }
        tiles.push_back(std::move(t));
    }
    try {
        return Tileset(std::move(tiles), seed);
    } catch (const std::exception& e) {
        throw FormatError(std::string("invalid tileset: ") + e.what());
    }
}

// ----------------------------------------------------------------- snapshot

Snapshot make_snapshot(const Trace& t, const Tileset& ts) {
    Snapshot s;
    s.stages = t.stages;
    s.seed = t.rng_seed;
    for (const auto& d : t.decisions) s.decisions.push_back(d.trit);
    const Configuration c = replay(t, ts);
    const int side = 1 << t.stages;
    s.colors = Grid(side);
    for (int y = 1; y <= side; ++y)
        for (int x = 1; x <= side; ++x) {
            auto tile = c.at({x, y});
            s.tile_ids.push_back(tile ? ts.tile(*tile).id : "");
            s.colors.set(x, y, tile && ts.tile(*tile).color == Color::On);
        }
    return s;
}

std::string emit_snapshot(const Snapshot& s) {
    std::ostringstream out;
    out << "{\"format\":\"sssst-snapshot\",\"version\":" << kFormatVersion << ",\"stages\":" << s.stages
        << ",\"decisions\":\"" << prefix_to_string(s.decisions) << "\",\"seed\":" << s.seed << ",\"cells\":[";
    for (std::size_t i = 0; i < s.tile_ids.size(); ++i)
        out << (i ? ",\n" : "\n") << json::array({s.tile_ids[i], s.colors.cells[i] ? "ON" : "OFF"}).dump();
    out << "\n]}\n";
    return out.str();
}

Snapshot parse_snapshot(const std::string& text) {
    const json doc = parse_json(text);
    expect_header(doc, "sssst-snapshot");
    Snapshot s;
    s.stages = field("stages", [&] { return doc.at("stages").get<int>(); });
    if (s.stages < 0 || s.stages > 14) throw FormatError("field 'stages': out of range");
    try {
        s.decisions = parse_prefix(field("decisions", [&] { return doc.at("decisions").get<std::string>(); }));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("field 'decisions': ") + e.what());
    }
    s.seed = field("seed", [&] { return doc.at("seed").get<std::uint64_t>(); });
    const json& cells = field("cells", [&]() -> const json& { return doc.at("cells"); });
    const int side = 1 << s.stages;
    if (cells.size() != static_cast<std::size_t>(side) * side) throw FormatError("field 'cells': wrong cell count");
    s.colors = Grid(side);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string where = "cells[" + std::to_string(i) + "]";
        s.tile_ids.push_back(field(where, [&] { return cells[i].at(0).get<std::string>(); }));
        s.colors.cells[i] = parse_color(field(where, [&]() -> const json& { return cells[i].at(1); }), where) == Color::On;
    }
    return s;
}

// -------------------------------------------------------------------- trace

std::string emit_trace(const Trace& t, const Tileset& ts) {
    std::ostringstream out;
    out << "{\"format\":\"sssst-trace\",\"version\":" << kFormatVersion << ",\"seed\":" << t.rng_seed
        << ",\"forced\":" << (t.forced ? "\"" + prefix_to_string(*t.forced) + "\"" : std::string("null"))
        << ",\"stages\":" << t.stages << ",\"decisions\":[";
    for (std::size_t i = 0; i < t.decisions.size(); ++i) {
        const auto& d = t.decisions[i];
        out << (i ? "," : "") << "[" << d.index << "," << d.loc.x << "," << d.loc.y << "," << d.trit << "]";
    }
    out << "],\"events\":[";
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const auto& e = t.events[i];
        out << (i ? ",\n" : "\n") << "[" << e.step << "," << e.loc.x << "," << e.loc.y << ","
            << json(ts.tile(e.tile).id).dump();
        for (int s : e.bound_sides) out << "," << s;
        out << "," << e.total_strength << "]";
    }
    out << "\n]}\n";
    return out.str();
}

Trace parse_trace(const std::string& text, const Tileset& ts) {
    const json doc = parse_json(text);
    expect_header(doc, "sssst-trace");
    Trace t;
    t.rng_seed = field("seed", [&] { return doc.at("seed").get<std::uint64_t>(); });
    if (doc.contains("forced") && !doc["forced"].is_null()) {
        try {
            t.forced = parse_prefix(field("forced", [&] { return doc["forced"].get<std::string>(); }));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("field 'forced': ") + e.what());
        }
    }
    t.stages = field("stages", [&] { return doc.at("stages").get<int>(); });
    const json& decs = field("decisions", [&]() -> const json& { return doc.at("decisions"); });
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const std::string where = "decisions[" + std::to_string(i) + "]";
        const json& d = decs[i];
        t.decisions.push_back(field(where, [&] {
            return DecisionRecord{d.at(0).get<int>(), {d.at(1).get<int>(), d.at(2).get<int>()}, d.at(3).get<int>()};
        }));
    }
    const json& evs = field("events", [&]() -> const json& { return doc.at("events"); });
    for (std::size_t i = 0; i < evs.size(); ++i) {
        const std::string where = "events[" + std::to_string(i) + "]";
        const json& e = evs[i];
        AttachmentEvent ev = field(where, [&] {
            AttachmentEvent a;
            a.step = e.at(0).get<std::uint64_t>();
            a.loc = {e.at(1).get<int>(), e.at(2).get<int>()};
            const std::string id = e.at(3).get<std::string>();
            for (std::size_t k = 0; k < 4; ++k) a.bound_sides[k] = e.at(4 + k).get<int>();
            a.total_strength = e.at(8).get<int>();
            try {
                a.tile = ts.index_of(id);
            } catch (const std::out_of_range&) {
                throw FormatError("field '" + where + "': unknown tile '" + id + "'");
            }
            return a;
        });
        t.events.push_back(ev);
    }
    return t;
}

// ------------------------------------------------------------------- render

std::string render(const Grid& g, RenderFormat f) {
    std::string out;
    if (f == RenderFormat::Pbm) out = "P1\n" + std::to_string(g.size) + " " + std::to_string(g.size) + "\n";
    for (int y = g.size; y >= 1; --y) {
        for (int x = 1; x <= g.size; ++x) {
            if (f == RenderFormat::Ascii) {
                out.push_back(g.at(x, y) ? '#' : '.');
            } else {
                if (x > 1) out.push_back(' ');
                out.push_back(g.at(x, y) ? '1' : '0');
            }
        }
        if (y > 1) out.push_back('\n');
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << data;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace sssst
