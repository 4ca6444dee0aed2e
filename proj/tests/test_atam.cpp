#include "doctest.h"
#include "sssst/atam.hpp"
#include "toy.hpp"

using namespace sssst;

TEST_CASE("glues bind only on equal token and equal positive strength") {
    CHECK(binds({"a", 1}, {"a", 1}) == 1);
    CHECK(binds({"a", 2}, {"a", 2}) == 2);
    CHECK(binds({"a", 1}, {"a", 2}) == 0);
    CHECK(binds({"a", 1}, {"b", 1}) == 0);
    CHECK(binds({"a", 0}, {"a", 0}) == 0);
}

TEST_CASE("tileset validation") {
    using toy::tile;
    CHECK_THROWS_AS(Tileset({tile("a", {}, {}, {}, {}), tile("a", {}, {}, {}, {})}, "a"), std::invalid_argument);
    CHECK_THROWS_AS(Tileset({tile("a", {"x", 3}, {}, {}, {})}, "a"), std::invalid_argument);
    CHECK_THROWS_AS(Tileset({tile("a", {}, {}, {}, {})}, "missing"), std::out_of_range);
    CHECK_THROWS_AS(Tileset({tile("a", {}, {}, {}, {}), tile("d", {}, {}, {}, {}, Role::Decision, 1)}, "a"),
                    std::invalid_argument);
}

TEST_CASE("decision families group variants by id stem") {
    const Tileset ts = toy::row_with_decision();
    REQUIRE(ts.decision_families().size() == 1);
    const auto& fam = ts.decision_families()[0];
    for (int t = 1; t <= 3; ++t) CHECK(ts.tile(fam[static_cast<std::size_t>(t - 1)]).trit == t);
    CHECK(ts.family_of(ts.index_of("d#2")) == 0);
    CHECK(ts.family_of(ts.index_of("seed")) == -1);
}

TEST_CASE("frontier lists every attachable pair in sorted order") {
    const Tileset ts = toy::row_with_decision();
    const Configuration c = Configuration::seeded(ts.seed_index());
    const auto f = frontier(c, ts);
    REQUIRE(f.size() == 3);
    for (const auto& p : f) CHECK(p.loc == Loc{2, 1});
    CHECK(std::is_sorted(f.begin(), f.end()));
    CHECK_FALSE(is_terminal(c, ts));
    CHECK_THROWS_AS(attachable(c, ts, {1, 1}, 1), AssemblyError);
}

TEST_CASE("cooperative binding needs both neighbours") {
    const Tileset ts = toy::corner();
    Assembly a(ts);
    const int corner = ts.index_of("corner");
    CHECK_FALSE(attachable(a.configuration(), ts, {2, 2}, corner));
    a.attach({2, 1}, ts.index_of("east"));
    CHECK_FALSE(attachable(a.configuration(), ts, {2, 2}, corner));
    a.attach({1, 2}, ts.index_of("north"));
    CHECK(attachable(a.configuration(), ts, {2, 2}, corner));
    const auto ev = a.attach({2, 2}, corner);
    CHECK(ev.total_strength == 2);
    CHECK(ev.bound_sides == std::array<int, 4>{0, 0, 1, 1});
    CHECK(is_terminal(a.configuration(), ts));
    CHECK(is_stable(a.configuration(), ts));
}

TEST_CASE("stability uses the minimum cut") {
    const Tileset ts = toy::corner();
    Configuration c = Configuration::seeded(ts.seed_index());
    CHECK(is_stable(c, ts));
    c.place({2, 2}, ts.index_of("corner"));
    CHECK_FALSE(is_stable(c, ts));  // disconnected
    Configuration d = Configuration::seeded(ts.seed_index());
    d.place({2, 1}, ts.index_of("east"));
    d.place({1, 2}, ts.index_of("north"));
    d.place({2, 2}, ts.index_of("corner"));
    CHECK(is_stable(d, ts));
    CHECK(d.extent() == std::array<int, 4>{1, 1, 2, 2});
}

TEST_CASE("runs are reproducible from the seed and forcing picks the variant") {
    const Tileset ts = toy::row_with_decision();
    const Trace a = run(ts, StopPolicy::terminal(), 5), b = run(ts, StopPolicy::terminal(), 5);
    CHECK(a == b);
    for (int t = 1; t <= 3; ++t) {
        const Trace f = run(ts, StopPolicy::terminal(), 99, Prefix{t});
        REQUIRE(f.decisions.size() == 1);
        CHECK(f.decisions[0].trit == t);
        CHECK(f.decisions[0].loc == Loc{2, 1});
        CHECK(f.events.size() == 2);
    }
}

TEST_CASE("unforced decisions are spread over the three variants") {
    const Tileset ts = toy::row_with_decision();
    std::array<int, 3> seen{};
    for (std::uint64_t s = 0; s < 300; ++s) ++seen[static_cast<std::size_t>(run(ts, StopPolicy::terminal(), s).decisions[0].trit - 1)];
    for (int n : seen) CHECK(n > 60);
}

TEST_CASE("decision limit withholds later decisions") {
    const Tileset ts = toy::row_with_decision();
    const Trace t = run(ts, StopPolicy::stage_complete(0), 1);
    CHECK(t.events.empty());
    CHECK(stage_event_cap(0) == 5);
    CHECK(stage_event_cap(3) == 64 + 32);
}

TEST_CASE("max-events policy stops early") {
    const Tileset ts = toy::row_with_decision();
    CHECK(run(ts, StopPolicy::max_events(1), 3).events.size() == 1);
}

TEST_CASE("replay rejects corrupt traces") {
    const Tileset ts = toy::row_with_decision();
    Trace t = run(ts, StopPolicy::terminal(), 2);
    CHECK_NOTHROW(replay(t, ts));
    std::swap(t.events[0], t.events[1]);
    CHECK_THROWS_AS(replay(t, ts), AssemblyError);
}

TEST_CASE("colouring requires a full square") {
    const Tileset ts = toy::corner();
    Configuration c = Configuration::seeded(ts.seed_index());
    CHECK(coloring(c, ts, 0).at(1, 1));
    CHECK_THROWS_AS(coloring(c, ts, 1), AssemblyError);
}
