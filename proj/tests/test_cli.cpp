// Exit codes and outputs of the command-line tool.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "sssst/io.hpp"

namespace {

namespace fs = std::filesystem;

int cli(const std::string& args) {
    const std::string cmd = std::string(SSSST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path scratch() {
    const fs::path p = fs::temp_directory_path() / ("sssst-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(cli("") == 2);
    CHECK(cli("bogus") == 2);
    CHECK(cli("oracle --decisions 14 --out -") == 2);
    CHECK(cli("simulate --stages 0 --out /dev/null") == 2);
    CHECK(cli("simulate --stages 3 --decisions 12 --out /dev/null") == 2);
    CHECK(cli("oracle --decisions 12 --out - --format png") == 2);
}

TEST_CASE("oracle output") {
    const fs::path dir = scratch();
    CHECK(cli("oracle --decisions 12 --out " + (dir / "o.txt").string()) == 0);
    CHECK(sssst::read_file((dir / "o.txt").string()) == ".#..\n##..\n.#.#\n####\n");
    CHECK(cli("oracle --decisions 2 --format pbm --out " + (dir / "o.pbm").string()) == 0);
    CHECK(sssst::read_file((dir / "o.pbm").string()) == "P1\n2 2\n1 0\n1 1\n");
    fs::remove_all(dir);
}

TEST_CASE("simulate is byte-identical for equal seeds and verify reports") {
    const fs::path dir = scratch();
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string(), t = (dir / "t.json").string();
    CHECK(cli("simulate --stages 3 --seed 5 --out " + a + " --trace " + t) == 0);
    CHECK(cli("simulate --stages 3 --seed 5 --out " + b) == 0);
    CHECK(sssst::read_file(a) == sssst::read_file(b));
    CHECK(cli("verify --trace " + t + " --mode determinism") == 0);
    CHECK(cli("verify --trace " + a + " --mode determinism") == 2);
    CHECK(cli("stats --trace " + t) == 0);
    CHECK(cli("stats --trace " + t + " --what decisions") == 0);
    CHECK(cli("verify --trace " + (dir / "missing.json").string()) == 2);
    sssst::write_file((dir / "bad.json").string(), "{\"format\":\"other\"}");
    CHECK(cli("verify --trace " + (dir / "bad.json").string()) == 2);
    fs::remove_all(dir);
}

TEST_CASE("stage-1 runs verify safely and the tileset file is reusable") {
    const fs::path dir = scratch();
    const std::string ts = (dir / "ts.json").string(), t = (dir / "t.json").string(), s = (dir / "s.json").string();
    CHECK(cli("gen-tileset --out " + ts) == 0);
    CHECK(cli("simulate --stages 1 --decisions 3 --tileset " + ts + " --out " + s + " --trace " + t) == 0);
    CHECK(cli("verify --trace " + t + " --tileset " + ts) == 0);
    CHECK(cli("verify --trace " + s + " --mode safety") == 0);
    sssst::Snapshot snap = sssst::parse_snapshot(sssst::read_file(s));
    snap.colors.set(2, 2, !snap.colors.at(2, 2));
    sssst::write_file(s, sssst::emit_snapshot(snap));
    CHECK(cli("verify --trace " + s + " --mode safety") == 1);
    CHECK(cli("fairness --stages 1 --runs 300 --threads 2 --tileset " + ts) == 0);
    fs::remove_all(dir);
}
