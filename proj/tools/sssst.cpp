// Command-line front end: tileset generation, simulation, the reference
// model, verification and statistics.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage or format
// error. All randomness derives from --seed (default kDefaultSeed). Checking
// commands end with a "summary {json}" line.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sssst/atam.hpp"
#include "sssst/compiler.hpp"
#include "sssst/io.hpp"
#include "sssst/oracle.hpp"
#include "sssst/verifier.hpp"

namespace {

using namespace sssst;

constexpr std::uint64_t kDefaultSeed = 20080101;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input files that cannot be opened are a usage error, not a failed check.
std::string slurp(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

Tileset load_tileset(const std::string& path) {
    if (path.empty()) return generate();
    return parse_tileset(slurp(path));
}

// One JSON object per invocation, last line of stdout, for scripts.
void summary(const nlohmann::json& j) { std::cout << "summary " << j.dump() << "\n"; }

Prefix prefix_arg(const std::string& text) {
    try {
        return parse_prefix(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--decisions: ") + e.what());
    }
}

int cmd_gen_tileset(const std::string& out) {
    CompileReport rep;
    const Tileset ts = generate(&rep);
    write_file(out, emit_tileset(ts));
    std::cout << rep.summary() << "\n";
    return kOk;
}

int cmd_simulate(int stages, std::uint64_t seed, const std::string& decisions, const std::string& out,
                 const std::string& trace_path, const std::string& tileset_path) {
    if (stages < 1) throw UsageError("--stages must be at least 1");
    std::optional<Prefix> forced;
    if (!decisions.empty()) {
        forced = prefix_arg(decisions);
        if (static_cast<int>(forced->size()) < stages) throw UsageError("--decisions shorter than --stages");
    }
    const Tileset ts = load_tileset(tileset_path);
    const Trace t = run(ts, StopPolicy::stage_complete(stages), seed, forced);
    write_file(out, emit_snapshot(make_snapshot(t, ts)));
    if (!trace_path.empty()) write_file(trace_path, emit_trace(t, ts));
    std::cout << "events=" << t.events.size() << " decisions=";
    for (const auto& d : t.decisions) std::cout << d.trit;
    std::cout << "\n";
    return kOk;
}

int cmd_oracle(const std::string& decisions, const std::string& out, const std::string& format) {
    const Prefix s = prefix_arg(decisions);
    const RenderFormat f = format == "pbm" ? RenderFormat::Pbm : RenderFormat::Ascii;
    const std::string text = render(stage_grid(s), f) + "\n";
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    return kOk;
}

int report_safety(const SafetyResult& r, nlohmann::json& sum) {
    std::cout << "safety: " << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) std::cout << " " << r.detail;
    std::cout << "\n";
    sum["safety"] = r.pass ? "PASS" : "FAIL";
    return r.pass ? kOk : kFail;
}

int cmd_verify(const std::string& path, const std::string& mode, const std::string& tileset_path) {
    const std::string text = slurp(path);
    const std::string format = document_format(text);
    nlohmann::json sum{{"command", "verify"}, {"mode", mode}};
    if (format == "sssst-snapshot") {
        if (mode == "determinism") throw UsageError("determinism audit needs a trace, not a snapshot");
        const Snapshot s = parse_snapshot(text);
        if (static_cast<int>(s.decisions.size()) < s.stages) {
            std::cout << "safety: FAIL snapshot records too few decisions\n";
            sum["safety"] = "FAIL";
            summary(sum);
            return kFail;
        }
        const Prefix d(s.decisions.begin(), s.decisions.begin() + s.stages);
        const int rc = report_safety(safety_check_grid(s.colors, d), sum);
        summary(sum);
        return rc;
    }
    if (format != "sssst-trace") throw FormatError("field 'format': expected a trace or snapshot document");

    const Tileset ts = load_tileset(tileset_path);
    const Trace t = parse_trace(text, ts);
    int rc = kOk;
    if (mode == "safety" || mode == "all") rc = std::max(rc, report_safety(safety_check(t, ts), sum));
    if (mode == "determinism" || mode == "all") {
        std::set<Loc> excluded;
        for (const auto& d : decision_locations(t, ts)) excluded.insert(d.loc);
        const DeterminismReport rep = check_local_determinism(t, ts, excluded);
        std::cout << "determinism: " << (rep.pass() ? "PASS" : "FAIL") << " violations=" << rep.violations.size()
                  << " excluded=" << rep.excluded.size() << " terminal=" << rep.terminal_condition << "\n";
        for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
            const auto& v = rep.violations[i];
            std::cout << "  (" << v.loc.x << "," << v.loc.y << ") " << v.condition << ": " << v.detail << "\n";
        }
        if (!rep.pass()) rc = kFail;
        sum["determinism"] = rep.pass() ? "PASS" : "FAIL";
        sum["violations"] = rep.violations.size();
    }
    summary(sum);
    return rc;
}

int cmd_fairness(int stages, std::uint64_t runs, std::uint64_t seed, unsigned threads,
                 const std::string& tileset_path) {
    if (stages < 1) throw UsageError("--stages must be at least 1");
    if (runs == 0) throw UsageError("--runs must be positive");
    const Tileset ts = load_tileset(tileset_path);
    const FairnessResult r = fairness_test(ts, runs, stages, seed, 1e-3, threads);
    std::cout << "counts:";
    for (auto c : r.counts) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "fairness " << (r.pass ? "PASS" : "FAIL") << " chi2=" << r.chi_square << " df=" << r.dof
              << " p=" << r.p_value << "\n";
    summary({{"command", "fairness"}, {"fairness", r.pass ? "PASS" : "FAIL"}, {"chi2", r.chi_square},
             {"df", r.dof}, {"p", r.p_value}});
    return r.pass ? kOk : kFail;
}

int cmd_stats(const std::string& path, const std::string& what, const std::string& tileset_path) {
    const Tileset ts = load_tileset(tileset_path);
    const Trace t = parse_trace(slurp(path), ts);
    const auto locs = decision_locations(t, ts);
    if (what == "decisions") {
        for (const auto& d : locs) std::cout << "stage " << d.stage << " at (" << d.loc.x << "," << d.loc.y << ")\n";
        std::cout << "decisions=" << locs.size() << "\n";
        summary({{"command", "stats"}, {"decisions", locs.size()}});
        return kOk;
    }
    std::vector<Loc> pts;
    for (const auto& d : locs) pts.push_back(d.loc);
    bool ok = true;
    for (int k = 0; k <= 8; ++k) {
        const double r = std::ldexp(1.0, k);
        const std::size_t n = count_within(pts, r);
        ok = ok && n <= static_cast<std::size_t>(k + 2);
        std::cout << "k=" << k << " count=" << n << " zeta(0.5)=" << zeta_partial_sum(pts, 0.5, r)
                  << " zeta(1)=" << zeta_partial_sum(pts, 1.0, r) << "\n";
    }
    std::cout << "growth-bound " << (ok ? "PASS" : "FAIL") << "\n";
    summary({{"command", "stats"}, {"decisions", locs.size()}, {"growth_bound", ok ? "PASS" : "FAIL"}});
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized Sierpinski tile assembly toolkit"};
    app.require_subcommand(1);

    std::string out, trace_path, decisions, format = "ascii", mode = "all", what = "zeta", tileset_path;
    int stages = 0;
    std::uint64_t seed = kDefaultSeed, runs = 0;
    unsigned threads = 0;

    auto* gen = app.add_subcommand("gen-tileset", "Generate the tileset file");
    gen->add_option("--out", out, "Output path")->required();

    auto* sim = app.add_subcommand("simulate", "Simulate to the end of a stage");
    sim->add_option("--stages", stages, "Number of stages")->required();
    sim->add_option("--seed", seed, "Random seed")->capture_default_str();
    sim->add_option("--decisions", decisions, "Forced decision trits, e.g. 1231");
    sim->add_option("--out", out, "Snapshot output path")->required();
    sim->add_option("--trace", trace_path, "Trace output path");
    sim->add_option("--tileset", tileset_path, "Tileset file (default: generated in memory)");

    auto* orc = app.add_subcommand("oracle", "Render the reference stage grid");
    orc->add_option("--decisions", decisions, "Decision trits")->required();
    orc->add_option("--out", out, "Output path ('-' for stdout)")->required();
    orc->add_option("--format", format, "ascii or pbm")->check(CLI::IsMember({"ascii", "pbm"}));

    auto* ver = app.add_subcommand("verify", "Verify a trace or snapshot");
    ver->add_option("--trace", trace_path, "Trace or snapshot path")->required();
    ver->add_option("--mode", mode, "safety, determinism or all")
        ->check(CLI::IsMember({"safety", "determinism", "all"}));
    ver->add_option("--tileset", tileset_path, "Tileset file (default: generated in memory)");

    auto* fair = app.add_subcommand("fairness", "Chi-square test of realized prefixes");
    fair->add_option("--stages", stages, "Prefix length")->required();
    fair->add_option("--runs", runs, "Number of runs")->required();
    fair->add_option("--seed", seed, "Base seed")->capture_default_str();
    fair->add_option("--threads", threads, "Worker threads (0 = all cores)");
    fair->add_option("--tileset", tileset_path, "Tileset file (default: generated in memory)");

    auto* st = app.add_subcommand("stats", "Decision-set statistics of a trace");
    st->add_option("--trace", trace_path, "Trace path")->required();
    st->add_option("--what", what, "zeta or decisions")->check(CLI::IsMember({"zeta", "decisions"}));
    st->add_option("--tileset", tileset_path, "Tileset file (default: generated in memory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen_tileset(out);
        if (*sim) return cmd_simulate(stages, seed, decisions, out, trace_path, tileset_path);
        if (*orc) return cmd_oracle(decisions, out, format);
        if (*ver) return cmd_verify(trace_path, mode, tileset_path);
        if (*fair) return cmd_fairness(stages, runs, seed, threads, tileset_path);
        if (*st) return cmd_stats(trace_path, what, tileset_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
