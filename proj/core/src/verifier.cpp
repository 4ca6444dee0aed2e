#include "sssst/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

namespace sssst {

namespace {

std::string loc_str(Loc l) { return "(" + std::to_string(l.x) + "," + std::to_string(l.y) + ")"; }

}  // namespace

DeterminismReport check_local_determinism(const Trace& t, const Tileset& ts, const std::set<Loc>& excluded) {
    const Configuration c = replay(t, ts);
    DeterminismReport rep;
    rep.excluded = excluded;

    std::unordered_map<Loc, std::size_t, LocHash> order;  // location -> event index
    for (std::size_t i = 0; i < t.events.size(); ++i) order[t.events[i].loc] = i;

    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const auto& ev = t.events[i];
        if (excluded.count(ev.loc)) continue;
        if (ev.total_strength != kTemperature) {
            rep.violations.push_back({ev.loc, "min-strength",
                                      "tile " + ts.tile(ev.tile).id + " bound with strength " +
                                          std::to_string(ev.total_strength)});
        }
        // Neighbours that remain after deleting the tile and its OUT-neighbours.
        std::array<std::optional<int>, 4> kept{};
        for (Dir d : kDirs) {
            const Loc n{ev.loc.x + dx(d), ev.loc.y + dy(d)};
            auto nb = c.at(n);
            if (!nb) continue;
            const bool seed_cell = n == Loc{1, 1};
            if (!seed_cell) {
                const auto& nev = t.events[order.at(n)];
                if (order.at(n) > i && nev.bound_sides[opposite(d)] > 0) continue;  // OUT-neighbour
            }
            kept[d] = *nb;
        }
        for (std::size_t cand = 0; cand < ts.size(); ++cand) {
            if (static_cast<int>(cand) == ev.tile) continue;
            int strength = 0;
            for (Dir d : kDirs)
                if (kept[d]) strength += binds(ts.tile(static_cast<int>(cand)).sides[d], ts.tile(*kept[d]).sides[opposite(d)]);
            if (strength >= kTemperature) {
                rep.violations.push_back({ev.loc, "unique-fill",
                                          "tile " + ts.tile(static_cast<int>(cand)).id + " also fits where " +
                                              ts.tile(ev.tile).id + " bound"});
                break;
            }
        }
    }
    return rep;
}

std::vector<DecisionLocation> decision_locations(const Trace& t, const Tileset& ts) {
    std::vector<DecisionLocation> out;
    int stage = 0;
    for (const auto& ev : t.events)
        if (ts.tile(ev.tile).role == Role::Decision) out.push_back({ev.loc, ++stage});
    return out;
}

double zeta_partial_sum(const std::vector<Loc>& points, double s, double radius) {
    if (s < 0 || std::isnan(s)) throw std::invalid_argument("zeta exponent must be non-negative");
    double sum = 0.0;
    for (const Loc& p : points) {
        const double r2 = static_cast<double>(p.x) * p.x + static_cast<double>(p.y) * p.y;
        if (r2 == 0.0 || r2 > radius * radius) continue;
        sum += std::pow(r2, -s / 2.0);
    }
    return sum;
}

std::size_t count_within(const std::vector<Loc>& points, double radius) {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const Loc& p) {
        return std::max(std::abs(p.x), std::abs(p.y)) <= radius;
    }));
}

SafetyResult safety_check_grid(const Grid& observed, const Prefix& decisions) {
    const Grid expected = stage_grid(decisions);
    SafetyResult r;
    if (observed.size != expected.size) {
        r.detail = "grid size mismatch";
        return r;
    }
    for (int y = 1; y <= expected.size; ++y)
        for (int x = 1; x <= expected.size; ++x)
            if (observed.at(x, y) != expected.at(x, y)) {
                r.mismatch = Loc{x, y};
                r.detail = "cell " + loc_str({x, y}) + " is " + (observed.at(x, y) ? "ON" : "OFF") +
                           ", expected " + (expected.at(x, y) ? "ON" : "OFF");
                return r;
            }
    r.pass = true;
    return r;
}

SafetyResult safety_check(const Trace& t, const Tileset& ts) {
    if (t.stages <= 0) throw std::invalid_argument("trace is not a completed stage run");
    if (static_cast<int>(t.decisions.size()) < t.stages) {
        SafetyResult r;
        r.detail = "only " + std::to_string(t.decisions.size()) + " of " + std::to_string(t.stages) +
                   " decisions realized";
        return r;
    }
    Prefix d;
    for (int k = 0; k < t.stages; ++k) d.push_back(t.decisions[static_cast<std::size_t>(k)].trit);
    const Configuration c = replay(t, ts);
    Grid g;
    try {
        g = coloring(c, ts, t.stages);
    } catch (const AssemblyError& e) {
        SafetyResult r;
        r.detail = e.what();
        return r;
    }
    return safety_check_grid(g, d);
}

double chi_square_sf(double x, int dof) {
    if (dof <= 0) throw std::invalid_argument("degrees of freedom must be positive");
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, std::max(0.0, x)));
}

FairnessResult chi_square_uniform(const std::vector<std::uint64_t>& counts, double alpha) {
    FairnessResult r;
    r.counts = counts;
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0 || counts.size() < 2) throw std::invalid_argument("no observations");
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    for (auto c : counts) r.chi_square += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    r.dof = static_cast<int>(counts.size()) - 1;
    r.p_value = chi_square_sf(r.chi_square, r.dof);
    r.pass = r.p_value > alpha;
    return r;
}

FairnessResult fairness_test(const Tileset& ts, std::uint64_t runs, int prefix_len, std::uint64_t base_seed,
                             double alpha, unsigned threads) {
    if (runs == 0) throw std::invalid_argument("runs must be positive");
    if (prefix_len < 1) throw std::invalid_argument("prefix length must be positive");
    std::size_t cells = 1;
    for (int i = 0; i < prefix_len; ++i) cells *= 3;

    // One slot per run, filled independently; merged in seed order below.
    std::vector<long long> code(runs, -1);
    std::vector<std::string> errors(runs);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < runs; i = next++) {
            try {
                const Trace t = run(ts, StopPolicy::stage_complete(prefix_len), base_seed + i);
                if (static_cast<int>(t.decisions.size()) < prefix_len) {
                    errors[i] = "run realized too few decisions";
                    continue;
                }
                long long v = 0;
                for (int k = 0; k < prefix_len; ++k) v = v * 3 + (t.decisions[static_cast<std::size_t>(k)].trit - 1);
                code[i] = v;
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> counts(cells, 0);
    for (std::uint64_t i = 0; i < runs; ++i) {
        if (code[i] < 0) throw std::runtime_error("fairness run " + std::to_string(base_seed + i) + ": " + errors[i]);
        ++counts[static_cast<std::size_t>(code[i])];
    }
    return chi_square_uniform(counts, alpha);
}

LivenessResult liveness_check(const Tileset& ts, int prefix_len, std::uint64_t seed) {
    LivenessResult r;
    if (prefix_len <= 0) return r;
    std::size_t total = 1;
    for (int i = 0; i < prefix_len; ++i) total *= 3;
    for (std::size_t v = 0; v < total; ++v) {
        Prefix s(static_cast<std::size_t>(prefix_len));
        std::size_t rest = v;
        for (int i = prefix_len - 1; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3) + 1;
            rest /= 3;
        }
        const std::string name = prefix_to_string(s);
        try {
            const Trace t = run(ts, StopPolicy::stage_complete(prefix_len), seed, s);
            Prefix got;
            for (const auto& d : t.decisions) got.push_back(d.trit);
            if (got != s) {
                r.pass = false;
                r.failures.push_back(name + ": realized decisions " + prefix_to_string(got));
                continue;
            }
            auto safe = safety_check(t, ts);
            if (!safe.pass) {
                r.pass = false;
                r.failures.push_back(name + ": " + safe.detail);
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.failures.push_back(name + ": " + e.what());
        }
    }
    return r;
}

}  // namespace sssst
