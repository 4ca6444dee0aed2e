#include <cmath>

#include "doctest.h"
#include "reference.hpp"
#include "shared.hpp"
#include "sssst/verifier.hpp"
#include "toy.hpp"

using namespace sssst;

TEST_CASE("chi-square survival function") {
    CHECK(chi_square_sf(0.0, 3) == doctest::Approx(1.0));
    CHECK(chi_square_sf(2.0, 2) == doctest::Approx(std::exp(-1.0)));  // df 2 is exponential
    CHECK(chi_square_sf(54.052, 26) == doctest::Approx(0.001).epsilon(0.01));
    CHECK_THROWS_AS(chi_square_sf(1.0, 0), std::invalid_argument);
}

TEST_CASE("uniformity test") {
    const auto even = chi_square_uniform({100, 100, 100});
    CHECK(even.pass);
    CHECK(even.chi_square == doctest::Approx(0.0));
    CHECK(even.dof == 2);
    CHECK_FALSE(chi_square_uniform({300, 0, 0}).pass);
    CHECK_THROWS_AS(chi_square_uniform({0, 0}), std::invalid_argument);
}

TEST_CASE("zeta partial sums and sup-norm counts") {
    const std::vector<Loc> pts{{3, 4}, {1, 1}, {10, 0}};
    CHECK(zeta_partial_sum(pts, 1.0, 5.0) == doctest::Approx(1.0 / 5.0 + 1.0 / std::sqrt(2.0)));
    CHECK(zeta_partial_sum(pts, 0.0, 100.0) == doctest::Approx(3.0));
    CHECK(zeta_partial_sum({{0, 0}}, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(zeta_partial_sum(pts, -1.0, 5.0), std::invalid_argument);
    CHECK(count_within(pts, 4) == 2);
    CHECK(count_within(pts, 10) == 3);
    CHECK(count_within(pts, 0.5) == 0);
}

TEST_CASE("grid safety reports the first mismatch") {
    const Prefix s{1, 3};
    Grid g = ref::grid(s);
    CHECK(safety_check_grid(g, s).pass);
    g.set(2, 3, !g.at(2, 3));
    const auto r = safety_check_grid(g, s);
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch);
    CHECK(*r.mismatch == Loc{2, 3});
    CHECK_FALSE(safety_check_grid(Grid(2), s).pass);
}

TEST_CASE("determinism audit on a hand-made system") {
    const Tileset ts = toy::corner();
    Assembly a(ts);
    a.attach({2, 1}, ts.index_of("east"));
    a.attach({1, 2}, ts.index_of("north"));
    a.attach({2, 2}, ts.index_of("corner"));
    CHECK(check_local_determinism(a.trace(), ts, {}).pass());
}

TEST_CASE("determinism audit flags competing tiles outside the excluded set") {
    const Tileset ts = toy::row_with_decision();
    const Trace t = run(ts, StopPolicy::terminal(), 1);
    const auto rep = check_local_determinism(t, ts, {});
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations[0].condition == "unique-fill");
    CHECK(rep.violations[0].loc == Loc{2, 1});
    std::set<Loc> excluded;
    for (const auto& d : decision_locations(t, ts)) excluded.insert(d.loc);
    CHECK(check_local_determinism(t, ts, excluded).pass());
}

TEST_CASE("determinism audit flags over-strength binding") {
    using toy::tile;
    const Tileset ts({tile("seed", {"n", 2}, {"e", 2}, {}, {}, Role::Seed), tile("east", {"c", 2}, {}, {}, {"e", 2}),
                      tile("north", {}, {"d", 1}, {"n", 2}, {}), tile("corner", {}, {}, {"c", 2}, {"d", 1})},
                     "seed");
    Assembly a(ts);
    a.attach({2, 1}, ts.index_of("east"));
    a.attach({1, 2}, ts.index_of("north"));
    a.attach({2, 2}, ts.index_of("corner"));
    const auto rep = check_local_determinism(a.trace(), ts, {});
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations[0].condition == "min-strength");
}

TEST_CASE("fairness over a three-way toy decision") {
    const auto r = fairness_test(toy::row_with_decision(), 600, 1, 1, 1e-3, 2);
    CHECK(r.pass);
    CHECK(r.counts.size() == 3);
    CHECK(r.counts[0] + r.counts[1] + r.counts[2] == 600);
    CHECK_THROWS_AS(fairness_test(toy::row_with_decision(), 0, 1, 1), std::invalid_argument);
}

TEST_CASE("liveness realizes every forced prefix") {
    const auto r = liveness_check(generated(), 1);
    CHECK(r.pass);
    CHECK(r.failures.empty());
}

TEST_CASE("safety rejects traces that are not completed stage runs") {
    const Trace t = run(generated(), StopPolicy::max_events(3), 1);
    CHECK_THROWS_AS(safety_check(t, generated()), std::invalid_argument);
}
