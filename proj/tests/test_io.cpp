#include "doctest.h"
#include "shared.hpp"
#include "sssst/io.hpp"
#include "toy.hpp"

using namespace sssst;

TEST_CASE("tileset round trip") {
    const Tileset& ts = generated();
    const std::string text = emit_tileset(ts);
    const Tileset back = parse_tileset(text);
    CHECK(back == ts);
    CHECK(emit_tileset(back) == text);
    CHECK(document_format(text) == "sssst-tileset");
}

TEST_CASE("trace and snapshot round trip") {
    const Tileset& ts = generated();
    const Trace t = run(ts, StopPolicy::stage_complete(3), 42, Prefix{3, 1, 2});
    const std::string text = emit_trace(t, ts);
    CHECK(parse_trace(text, ts) == t);
    CHECK(emit_trace(parse_trace(text, ts), ts) == text);

    const Snapshot s = make_snapshot(t, ts);
    CHECK(s.decisions == Prefix{3, 1, 2});
    CHECK(s.colors.size == 8);
    const std::string snap = emit_snapshot(s);
    CHECK(parse_snapshot(snap) == s);
    CHECK(document_format(snap) == "sssst-snapshot");
}

TEST_CASE("unforced traces record a null forcing") {
    const Tileset ts = toy::row_with_decision();
    const Trace t = run(ts, StopPolicy::terminal(), 9);
    const std::string text = emit_trace(t, ts);
    CHECK(text.find("\"forced\":null") != std::string::npos);
    CHECK_FALSE(parse_trace(text, ts).forced.has_value());
}

TEST_CASE("malformed documents raise format errors") {
    const Tileset ts = toy::corner();
    CHECK_THROWS_AS(parse_tileset("{"), FormatError);
    CHECK_THROWS_AS(parse_tileset(R"({"format":"sssst-trace","version":1})"), FormatError);
    CHECK_THROWS_AS(parse_tileset(R"({"format":"sssst-tileset","version":2})"), FormatError);
    CHECK_THROWS_AS(parse_tileset(R"({"format":"sssst-tileset","version":1,"temperature":1,"seed":"a","tiles":[]})"),
                    FormatError);
    std::string text = emit_tileset(ts);
    const auto pos = text.find("\"strength\":2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "\"strength\":7");
    CHECK_THROWS_AS(parse_tileset(text), FormatError);
    CHECK_THROWS_AS(parse_trace(R"({"format":"sssst-trace","version":1,"seed":1,"stages":0,"decisions":[],
                                    "events":[[0,2,1,"nope",0,0,0,2,2]]})",
                                ts),
                    FormatError);
    CHECK_THROWS_AS(parse_snapshot(R"({"format":"sssst-snapshot","version":1,"stages":1,"decisions":"1",
                                       "seed":0,"cells":[]})"),
                    FormatError);
    CHECK(document_format("not json") == "");
}

TEST_CASE("renderers") {
    Grid g(2);
    g.set(1, 1, true);
    g.set(2, 2, true);
    CHECK(render(g, RenderFormat::Ascii) == ".#\n#.");
    CHECK(render(g, RenderFormat::Pbm) == "P1\n2 2\n0 1\n1 0");
}
