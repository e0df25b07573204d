#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "digest.hpp"
#include "gallery.hpp"
#include "suites.hpp"
#include "supermod/equilibria.hpp"
#include "supermod/error.hpp"
#include "supermod/game_io.hpp"
#include "supermod/report.hpp"

namespace supermod::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  fs::path input;
  std::string method = "both";
  std::string suite = "all";
  std::string gallery_name;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::optional<fs::path> out_dir;
  std::string format = "text";
  Limits limits;
  bool quiet = false;
};

struct Loaded {
  Game game;
  ReportMeta meta;
  std::string stem;
};

bool wants_text(const Config& c) { return c.format != "dot"; }
bool wants_dot(const Config& c) { return c.format != "text"; }

void write_file(const fs::path& dir, const std::string& name, const std::string& contents) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream file(path, std::ios::binary);
  file << contents;
  if (!file) fail(Errc::kIoError, "cannot write '" + path.string() + "'");
}

Loaded load(const Config& c) {
  const std::string text = read_text_file(c.input);
  ReportMeta meta{{"tool", std::string("supermod ") + SUPERMOD_VERSION}, {"input-sha256", sha256_hex(text)}};
  return {load_game(text, c.limits), std::move(meta), c.input.stem().string()};
}

int cmd_check(const Config& c, std::ostream& out) {
  const Loaded in = load(c);
  const ValidationReport v = validate_supermodular(in.game);
  const std::string text = validation_text(in.game, v, in.meta);
  if (!c.quiet) out << text;
  if (c.out_dir) write_file(*c.out_dir, in.stem + ".check.txt", text);
  return v.certified() ? kExitOk : kExitFailure;
}

int cmd_equilibria(const Config& c, std::ostream& out, std::ostream& err) {
  const Loaded in = load(c);
  const Game& g = in.game;
  const ValidationReport v = validate_supermodular(g);
  if (c.method == "iterate" && !v.certified()) {
    err << "iteration requires a supermodular game; failed hypothesis: " << first_failed_hypothesis(g, v).value()
        << "\n";
    return kExitFailure;
  }

  EquilibriumReport r = equilibrium_report(g, c.limits);
  if (c.method == "brute") {
    r.greatest.reset();
    r.least.reset();
  }
  std::string text = equilibrium_text(g, r, in.meta);
  if (c.method == "both") {
    if (!r.supermodular) {
      text += "cross-check: skipped (not supermodular)\n";
    } else {
      const bool agree = r.greatest->profile == r.max_equilibrium && r.least->profile == r.min_equilibrium;
      text += std::string("cross-check: ") + (agree ? "ok" : "FAILED") + "\n";
      if (!agree) {
        if (!c.quiet) out << text;
        return kExitFailure;
      }
    }
  }
  const std::string dot = equilibrium_dot(g, r.equilibria.profiles);

  if (!c.quiet) {
    if (wants_text(c)) out << text;
    if (wants_dot(c)) out << dot;
  }
  if (c.out_dir) {
    if (wants_text(c)) {
      write_file(*c.out_dir, in.stem + ".report.txt", text);
      write_file(*c.out_dir, in.stem + ".report.json", equilibrium_json(g, r, in.meta));
    }
    if (wants_dot(c)) write_file(*c.out_dir, in.stem + ".dot", dot);
  }
  return kExitOk;
}

std::string mark(bool b) { return b ? "✓" : "✗"; }

int cmd_verify(const Config& c, std::ostream& out) {
  std::ostringstream text;
  bool ok = true;
  text << "tool: supermod " << SUPERMOD_VERSION << "\n";
  if (c.suite != "counterexample") {
    text << "seed: " << c.seed << "\ntrials: " << c.trials << "\n";
    for (const SuiteCount& s : run_lemma_suite(c.seed, c.trials, c.limits)) {
      text << s.name << ": " << s.passed << "/" << s.total << " passed\n";
      ok = ok && s.ok();
    }
  }
  if (c.suite != "lemmas") {
    const CounterexampleOutcome r = run_counterexample_suite();
    for (const omega::RefutationReport& rep : r.reports) {
      text << "statement " << rep.kind << " on " << rep.witness.to_string() << ": subcomplete " << mark(rep.subcomplete)
           << " compact " << mark(rep.compact) << " closed " << mark(rep.closed) << " — Statement "
           << (rep.refuted ? "refuted" : "not refuted") << "\n";
    }
    for (const auto& [n, discrete] : r.truncations) {
      text << "truncation n=" << n << ": " << (discrete ? "discrete" : "NOT discrete") << "\n";
    }
    ok = ok && r.ok();
  }
  text << "verdict: " << (ok ? "all checks passed" : "FAILED") << "\n";
  if (!c.quiet) out << text.str();
  if (c.out_dir) write_file(*c.out_dir, "verify-" + c.suite + ".txt", text.str());
  return ok ? kExitOk : kExitFailure;
}

int cmd_gallery(const Config& c, std::ostream& out) {
  if (c.gallery_name == "list") {
    if (!c.quiet) {
      for (const auto& name : gallery_names()) out << name << "\n";
    }
    return kExitOk;
  }
  const GalleryEntry entry = gallery_entry(c.gallery_name, c.seed);
  const fs::path dir = c.out_dir.value_or(".");
  write_file(dir, entry.file_name, entry.contents);
  if (!c.quiet) out << "wrote " << (dir / entry.file_name).string() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Supermodular games: equilibrium lattices, validation and order-topology checks", "supermod"};
  app.set_version_flag("--version", std::string("supermod ") + SUPERMOD_VERSION);
  app.require_subcommand(1);

  std::string out_dir;
  app.add_option("--out", out_dir, "Directory for written reports and gallery files");
  app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "dot", "both"}));
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--cap-product", c.limits.product_cap, "Largest allowed product of strategy sets")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-exhaustive", c.limits.exhaustive_cap, "Largest set checked by full subset enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", c.quiet, "Print nothing on success; rely on the exit code");

  auto* check = app.add_subcommand("check", "Validate the supermodular-game axioms")->fallthrough();
  check->add_option("path", c.input, "Game file")->required();

  auto* equilibria = app.add_subcommand("equilibria", "Compute and certify the equilibrium set")->fallthrough();
  equilibria->add_option("path", c.input, "Game file")->required();
  equilibria->add_option("--method", c.method, "brute, iterate or both")
      ->check(CLI::IsMember({"brute", "iterate", "both"}));

  auto* verify = app.add_subcommand("verify", "Run the topology lemma and counterexample checks")->fallthrough();
  verify->add_option("suite", c.suite, "lemmas, counterexample or all")
      ->check(CLI::IsMember({"lemmas", "counterexample", "all"}));
  verify->add_option("--trials", c.trials, "Random instances per lemma");

  auto* gallery = app.add_subcommand("gallery", "Write a built-in fixture, or list them")->fallthrough();
  gallery->add_option("name", c.gallery_name, "Fixture name or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!out_dir.empty()) c.out_dir = out_dir;

  // Contradictions and violated preconditions are analysis failures; every
  // other error comes from the arguments or the input.
  try {
    if (check->parsed()) return cmd_check(c, out);
    if (equilibria->parsed()) return cmd_equilibria(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out);
    return cmd_gallery(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::kInternalContradiction:
      case Errc::kPreconditionViolated:
        return kExitFailure;
      default:
        return kExitUsage;
    }
  }
}

}  // namespace supermod::cli
