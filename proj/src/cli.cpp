#include "elp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "elp/error.hpp"
#include "elp/family.hpp"
#include "elp/normal_form.hpp"
#include "elp/oracle.hpp"
#include "elp/parser.hpp"
#include "elp/printer.hpp"
#include "elp/solver.hpp"
#include "elp/transform.hpp"

namespace elp {

namespace {

constexpr std::size_t kMaxPrintedInterpretations = 64;
constexpr std::size_t kOracleAtoms = 4;

struct Options {
  std::string file;
  std::size_t family = 0;
  std::string generator = "g1";
  std::size_t models = 1;
  bool stats = false;
  bool verify = false;
  std::string emit;
  bool quiet = false;
};

std::optional<Program> load(const Options& opts, std::ostream& err) {
  if (opts.family > 0) return generatePropagationFamily(opts.family);
  std::ifstream in(opts.file);
  if (!in) {
    err << "elpsolve: cannot open '" << opts.file << "'\n";
    return std::nullopt;
  }
  std::stringstream text;
  text << in.rdbuf();
  ParseResult parsed = parseProgram(text.str());
  for (const ParseDiagnostic& d : parsed.diagnostics) err << opts.file << ":" << toString(d) << "\n";
  return parsed.program;
}

int run(const Options& opts, bool familyGiven, std::ostream& out, std::ostream& err) {
  if (familyGiven && opts.family == 0) {
    err << "elpsolve: --gen-family needs n >= 1\n";
    return 2;
  }
  std::optional<Program> loaded = load(opts, err);
  if (!loaded) return 2;
  const Program& original = *loaded;
  Program normal = normalize(original).program;

  if (!opts.emit.empty()) {
    if (opts.emit == "nf") out << formatProgram(normal);
    if (opts.emit == "t0") out << formatProgram(buildT0(normal));
    if (opts.emit == "g0") out << formatProgram(buildG0(normal));
    if (opts.emit == "g1") out << formatProgram(buildG1(normal));
    return 0;
  }

  static const std::map<std::string, GeneratorKind> kinds = {
      {"t0", GeneratorKind::T0}, {"g0", GeneratorKind::G0}, {"g1", GeneratorKind::G1}};
  SolverConfig config;
  config.generator = kinds.at(opts.generator);
  if (opts.models > 0) config.maxWorldviews = opts.models;
  config.verifySkips = opts.verify;
  SolveResult result = solve(normal, config);

  const AtomTable& table = original.table();
  std::set<AtomId> userAtoms;
  for (AtomId a : atomsOf(original)) {
    if (table.origin(a) == AtomOrigin::User) userAtoms.insert(a);
  }

  if (!opts.quiet) {
    for (std::size_t i = 0; i < result.worldviews.size(); ++i) {
      const WorldviewResult& wv = result.worldviews[i];
      BeliefInterpretation shown = restrictWorldview(wv.beliefSet, userAtoms);
      out << "Worldview " << i + 1 << ":\n";
      out << "  K: " << formatSignature(wv.signature, table) << "\n";
      if (shown.size() <= kMaxPrintedInterpretations) {
        out << "  Belief set: " << formatBeliefSet(shown, table) << "\n";
      } else {
        out << "  Belief set: " << shown.size() << " interpretations\n";
      }
    }
  }
  if (result.worldviews.empty()) {
    out << "UNSATISFIABLE\n";
  } else {
    out << "SATISFIABLE (" << result.worldviews.size() << " worldviews)\n";
  }
  const SolveStats& s = result.stats;
  if (opts.stats) {
    out << "candidates=" << s.candidatesGenerated << " tests=" << s.testsRun << " skipped=" << s.testsSkipped
        << " worldviews=" << s.worldviewsFound << "\n";
  }

  bool verified = true;
  if (opts.verify) {
    std::string oracleNote;
    std::set<AtomId> atoms = atomSetOf(original);
    if (atoms.size() <= kOracleAtoms) {
      auto expected = oracle::enumerateWorldviews(original);
      std::set<BeliefInterpretation> oracleSet(expected.begin(), expected.end());
      std::set<BeliefInterpretation> solverSet;
      for (const WorldviewResult& wv : result.worldviews) solverSet.insert(restrictWorldview(wv.beliefSet, atoms));
      bool agrees = config.maxWorldviews
                        ? std::includes(oracleSet.begin(), oracleSet.end(), solverSet.begin(), solverSet.end()) &&
                              solverSet.size() == std::min(*config.maxWorldviews, oracleSet.size())
                        : solverSet == oracleSet;
      verified = agrees;
      oracleNote = agrees ? "oracle agrees (" + std::to_string(oracleSet.size()) + " worldviews)"
                          : "oracle DISAGREES (oracle " + std::to_string(oracleSet.size()) + ", solver " +
                                std::to_string(solverSet.size()) + ")";
    } else {
      oracleNote = "oracle skipped (" + std::to_string(atoms.size()) + " atoms > " +
                   std::to_string(kOracleAtoms) + ")";
    }
    if (s.skipMismatches > 0) verified = false;
    out << "verify: " << oracleNote << "; skip mismatches=" << s.skipMismatches << "\n";
  }
  if (!verified) return 3;
  return result.worldviews.empty() && opts.models != 0 ? 1 : 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worldview solver for ground epistemic logic programs", "elpsolve"};
  Options opts;
  auto* file = app.add_option("file", opts.file, "Program file")->check(CLI::ExistingFile);
  auto* family = app.add_option("--gen-family", opts.family, "Solve the propagation benchmark family of size N");
  file->excludes(family);
  app.add_option("--generator", opts.generator, "Generator program")
      ->check(CLI::IsMember({"t0", "g0", "g1"}))
      ->capture_default_str();
  app.add_option("--models", opts.models, "Number of worldviews, 0 for all")->capture_default_str();
  app.add_flag("--stats", opts.stats, "Print solver statistics");
  app.add_flag("--verify", opts.verify, "Cross-check against the brute-force oracle");
  app.add_option("--emit", opts.emit, "Print a companion program and exit")
      ->check(CLI::IsMember({"t0", "g0", "g1", "nf"}));
  app.add_flag("--quiet", opts.quiet, "Only print the result line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (file->count() == 0 && family->count() == 0) throw CLI::RequiredError("file or --gen-family");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(opts, family->count() > 0, out, err);
  } catch (const Error& e) {
    err << "elpsolve: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace elp
