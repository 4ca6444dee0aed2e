// File formats and renderers.
//
// All documents are JSON objects tagged with "format" and "version".
//   tileset  : {"format":"sssst-tileset","version":1,"temperature":2,
//               "seed":ID,"tiles":[{"name","color","role","trit",
//               "north":{"label","strength"},"east",..,"west"}]}
//   snapshot : {"format":"sssst-snapshot","version":1,"stages":n,
//               "decisions":"123","seed":u64,"cells":[[ID,"ON"|"OFF"],..]}
//              cells are row-major over [1,2^n]^2, y outer, x inner.
//   trace    : {"format":"sssst-trace","version":1,"seed":u64,
//               "forced":"12"|null,"stages":n,"events":[[step,x,y,ID,
//               n,e,s,w,total],..],"decisions":[[k,x,y,trit],..]}
#pragma once

#include <string>
#include <vector>

#include "sssst/atam.hpp"

namespace sssst {

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string emit_tileset(const Tileset& ts);
Tileset parse_tileset(const std::string& text);

struct Snapshot {
    int stages = 0;
    Prefix decisions;
    std::uint64_t seed = 0;
    std::vector<std::string> tile_ids;  // row-major
    Grid colors;
    bool operator==(const Snapshot&) const = default;
};
Snapshot make_snapshot(const Trace& t, const Tileset& ts);
std::string emit_snapshot(const Snapshot& s);
Snapshot parse_snapshot(const std::string& text);

std::string emit_trace(const Trace& t, const Tileset& ts);
Trace parse_trace(const std::string& text, const Tileset& ts);

// Returns the "format" tag of a document, or "" if it has none.
std::string document_format(const std::string& text);

enum class RenderFormat { Ascii, Pbm };
// ascii: '#' = ON, '.' = OFF, top line is the northmost row, rows joined by
// '\n' with no trailing newline. pbm: plain P1 bitmap, 1 = ON, row y = 1 last.
std::string render(const Grid& g, RenderFormat f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace sssst
