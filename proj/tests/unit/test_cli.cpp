#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "digest.hpp"
#include "fixtures.hpp"
#include "gallery.hpp"
#include "suites.hpp"
#include "supermod/game_io.hpp"

using namespace supermod;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "supermod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// A fresh directory under the system temp path, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("supermod-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& contents) const {
    std::ofstream(path / name, std::ios::binary) << contents;
    return (path / name).string();
  }
};

std::string slurp(const fs::path& p) { return read_text_file(p); }

}  // namespace

TEST_CASE("sha256") {
  CHECK(cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("check") {
  TempDir dir;
  const std::string coordination = dir.write("coord.json", serialize_game(fixture::two_by_two(true)));
  const std::string anti = dir.write("anti.json", serialize_game(fixture::two_by_two(false)));

  const Run ok = run({"check", coordination});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.rfind("tool: supermod ", 0) == 0);
  CHECK(ok.out.find("input-sha256: " + cli::sha256_hex(slurp(coordination)) + "\n") != std::string::npos);
  CHECK(ok.out.find("verdict: supermodular\n") != std::string::npos);

  const Run bad = run({"check", anti, "--out", (dir.path / "reports").string()});
  CHECK(bad.code == cli::kExitFailure);
  CHECK(bad.out.find("increasing differences: FAILED") != std::string::npos);
  CHECK(slurp(dir.path / "reports" / "anti.check.txt") == bad.out);

  CHECK(run({"--quiet", "check", coordination}).out.empty());
}

TEST_CASE("equilibria") {
  TempDir dir;
  const std::string coordination = dir.write("coord.json", serialize_game(fixture::two_by_two(true)));
  const std::string anti = dir.write("anti.json", serialize_game(fixture::two_by_two(false)));

  const Run both = run({"equilibria", coordination});
  CHECK(both.code == cli::kExitOk);
  CHECK(both.out.find("equilibria: {(0,0), (1,1)}\n") != std::string::npos);
  CHECK(both.out.find("cross-check: ok\n") != std::string::npos);
  CHECK(both.out.find("digraph") == std::string::npos);

  const Run brute = run({"equilibria", coordination, "--method", "brute"});
  CHECK(brute.out.find("iteration") == std::string::npos);
  CHECK(brute.out.find("cross-check") == std::string::npos);

  const Run dot = run({"--format", "dot", "equilibria", coordination});
  CHECK(dot.out.rfind("digraph \"coordination\" {\n", 0) == 0);

  const Run skipped = run({"equilibria", anti});
  CHECK(skipped.code == cli::kExitOk);
  CHECK(skipped.out.find("cross-check: skipped (not supermodular)\n") != std::string::npos);

  const Run refused = run({"equilibria", anti, "--method", "iterate"});
  CHECK(refused.code == cli::kExitFailure);
  CHECK(refused.err.find("iteration requires a supermodular game; failed hypothesis: p1 increasing differences") !=
        std::string::npos);

  const fs::path reports = dir.path / "r";
  CHECK(run({"--format", "both", "--out", reports.string(), "equilibria", coordination}).code == cli::kExitOk);
  CHECK(fs::exists(reports / "coord.report.txt"));
  CHECK(fs::exists(reports / "coord.report.json"));
  CHECK(slurp(reports / "coord.dot").rfind("digraph", 0) == 0);

  // Identical inputs give byte-identical reports.
  const fs::path again = dir.path / "r2";
  run({"--format", "both", "--out", again.string(), "equilibria", coordination});
  for (const char* name : {"coord.report.txt", "coord.report.json", "coord.dot"}) CHECK(slurp(reports / name) == slurp(again / name));
}

TEST_CASE("input and usage errors") {
  TempDir dir;
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"check"}).code == cli::kExitUsage);
  CHECK(run({"--format", "svg", "check", "x.json"}).code == cli::kExitUsage);
  CHECK(run({"--cap-exhaustive", "0", "check", "x.json"}).code == cli::kExitUsage);

  const Run missing = run({"check", (dir.path / "none.json").string()});
  CHECK(missing.code == cli::kExitUsage);
  CHECK(missing.err.rfind("error: ", 0) == 0);

  const Run malformed = run({"check", dir.write("bad.json", "{\"players\": [")});
  CHECK(malformed.code == cli::kExitUsage);
  CHECK(malformed.err.find("line") != std::string::npos);

  const Run version = run({"--version"});
  CHECK(version.code == cli::kExitOk);
  CHECK(version.out.rfind("supermod ", 0) == 0);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify") {
  const Run all = run({"verify", "--trials", "20", "--seed", "3"});
  CHECK(all.code == cli::kExitOk);
  CHECK(all.out.find("seed: 3\ntrials: 20\n") != std::string::npos);
  CHECK(all.out.find("restriction lemma: 20/20 passed\n") != std::string::npos);
  CHECK(all.out.find("product lemma: 20/20 passed\n") != std::string::npos);
  CHECK(all.out.find("statement 1 on L \\ {x0}: subcomplete ✓ compact ✓ closed ✗ — Statement refuted\n") !=
        std::string::npos);
  CHECK(all.out.find("statement 2 on L \\ {x0}") != std::string::npos);
  CHECK(all.out.find("truncation n=6: discrete\n") != std::string::npos);
  CHECK(all.out.find("verdict: all checks passed\n") != std::string::npos);

  const Run lemmas = run({"verify", "lemmas", "--trials", "5"});
  CHECK(lemmas.out.find("statement") == std::string::npos);
  const Run counter = run({"verify", "counterexample"});
  CHECK(counter.out.find("lemma") == std::string::npos);
  CHECK(run({"verify", "everything"}).code == cli::kExitUsage);
}

TEST_CASE("gallery") {
  TempDir dir;
  const Run list = run({"gallery", "list"});
  CHECK(list.out == "coordination\nanti-coordination\ndiag2\nrandom-seeded\nomega-counterexample\n");

  for (const auto& name : cli::gallery_names()) {
    CAPTURE(name);
    const Run r = run({"--out", dir.path.string(), "--seed", "5", "gallery", name});
    CHECK(r.code == cli::kExitOk);
    const cli::GalleryEntry entry = cli::gallery_entry(name, 5);
    CHECK(slurp(dir.path / entry.file_name) == entry.contents);
  }
  CHECK(fs::exists(dir.path / "random-seeded-5.json"));
  CHECK(slurp(dir.path / "omega-counterexample.txt").find("verdict: refuted") != std::string::npos);
  CHECK(run({"gallery", "nope"}).code == cli::kExitUsage);
  CHECK_ERRC(cli::gallery_game("omega-counterexample"), Errc::kUnknownElement);
}

TEST_CASE("suites") {
  for (const cli::SuiteCount& s : cli::run_lemma_suite(9, 15)) {
    CHECK(s.total == 15);
    CHECK(s.ok());
  }
  const cli::CounterexampleOutcome c = cli::run_counterexample_suite(4);
  CHECK(c.ok());
  CHECK(c.truncations.size() == 4);
}
