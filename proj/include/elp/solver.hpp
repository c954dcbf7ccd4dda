#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "elp/program.hpp"
#include "elp/transform.hpp"

namespace elp {

enum class GeneratorKind { T0, G0, G1 };

const char* generatorName(GeneratorKind kind) noexcept;

struct SolverConfig {
  GeneratorKind generator = GeneratorKind::G1;
  /// nullopt: enumerate every worldview.
  std::optional<std::size_t> maxWorldviews;
  bool collectStats = true;
  /// Also run the full tester on candidates accepted by the skip check and
  /// count disagreements.
  bool verifySkips = false;
};

struct SolveStats {
  std::size_t candidatesGenerated = 0;
  std::size_t testsRun = 0;
  std::size_t testsSkipped = 0;
  std::size_t worldviewsFound = 0;
  std::size_t testerSolveCalls = 0;
  std::size_t skipMismatches = 0;
};

struct WorldviewResult {
  KSignature signature;
  /// Over the atoms of the solved program.
  BeliefInterpretation beliefSet;
  /// The generator stable model that produced this worldview.
  Interpretation witness;
};

struct SolveResult {
  std::vector<WorldviewResult> worldviews;
  SolveStats stats;
};

/// k(m) = { k_a in universe | a is a cautious consequence of the tester
/// under k(m) }. No tester models means the candidate fails.
bool testCandidate(const Program& tester, const Interpretation& m, const KSignature& universe);

/// Linear check on a G1 candidate: every chosen k_a has kp_a, every k_a left
/// out has kpn_a. Throws Errc::GeneratorMismatch for other generators.
bool skipCheck(const Interpretation& m, const KSignature& universe, const AtomTable& table,
               GeneratorKind active = GeneratorKind::G1);

/// Stable models of the tester under k(m), projected onto atoms.
WorldviewResult buildWorldview(const Program& tester, const Interpretation& m, const KSignature& universe,
                               const std::set<AtomId>& atoms);

/// Generate-and-test over the stable models of the configured generator.
/// Expects a constant-folded program in normal form.
SolveResult solve(const Program& program, const SolverConfig& config = {});

}  // namespace elp
