#include "elp/solver.hpp"

#include <set>

#include "elp/error.hpp"
#include "elp/normal_form.hpp"
#include "elp/stable_models.hpp"

namespace elp {

const char* generatorName(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::T0: return "t0";
    case GeneratorKind::G0: return "g0";
    case GeneratorKind::G1: return "g1";
  }
  return "?";
}

bool testCandidate(const Program& tester, const Interpretation& m, const KSignature& universe) {
  KSignature signature = kOfInterpretation(m, universe);
  CautiousResult cautious = cautiousConsequences(tester, signatureAssumption(signature, universe));
  if (!cautious.defined()) return false;
  KSignature known;
  for (AtomId k : universe) {
    if (cautious.consequences->contains(*tester.table().base(k))) known.insert(k);
  }
  return known == signature;
}

bool skipCheck(const Interpretation& m, const KSignature& universe, const AtomTable& table, GeneratorKind active) {
  if (active != GeneratorKind::G1) {
    throw Error(Errc::GeneratorMismatch, "skip check needs propagation atoms from the G1 generator");
  }
  for (AtomId k : universe) {
    AtomId a = *table.base(k);
    AtomOrigin needed = m.contains(k) ? AtomOrigin::Kp : AtomOrigin::KpNotAtom;
    auto witness = table.findDerived(needed, a);
    if (!witness || !m.contains(*witness)) return false;
  }
  return true;
}

WorldviewResult buildWorldview(const Program& tester, const Interpretation& m, const KSignature& universe,
                               const std::set<AtomId>& atoms) {
  KSignature signature = kOfInterpretation(m, universe);
  StableModelSet models = stableModelsUnderAssumption(tester, signatureAssumption(signature, universe));
  WorldviewResult result{signature, {}, m};
  for (const Interpretation& model : models.models) result.beliefSet.insert(restrict(model, atoms));
  if (result.beliefSet.empty()) {
    throw Error(Errc::EmptyWorldview, "accepted candidate has no tester models");
  }
  return result;
}

SolveResult solve(const Program& program, const SolverConfig& config) {
  if (!isNormalForm(program)) throw Error(Errc::NotNormalForm, "solve expects a program in normal form");
  TransformBundle bundle = TransformBundle::build(program);
  const Program& generator = config.generator == GeneratorKind::T0   ? bundle.t0
                             : config.generator == GeneratorKind::G0 ? bundle.g0
                                                                     : bundle.g1;
  const std::set<AtomId> atoms = atomSetOf(program);

  SolveResult result;
  SolveStats& stats = result.stats;
  std::set<KSignature> seen;

  for (const Interpretation& m : enumerateStableModels(generator).models) {
    if (config.maxWorldviews && result.worldviews.size() >= *config.maxWorldviews) break;
    ++stats.candidatesGenerated;

    bool accepted = false;
    if (config.generator == GeneratorKind::G1 && skipCheck(m, bundle.kAtoms, program.table())) {
      ++stats.testsSkipped;
      accepted = true;
      if (config.verifySkips) {
        ++stats.testerSolveCalls;
        if (!testCandidate(bundle.t0, m, bundle.kAtoms)) ++stats.skipMismatches;
      }
    } else {
      ++stats.testsRun;
      ++stats.testerSolveCalls;
      accepted = testCandidate(bundle.t0, m, bundle.kAtoms);
    }
    if (!accepted) continue;

    KSignature signature = kOfInterpretation(m, bundle.kAtoms);
    if (seen.contains(signature)) continue;
    ++stats.testerSolveCalls;
    seen.insert(signature);
    result.worldviews.push_back(buildWorldview(bundle.t0, m, bundle.kAtoms, atoms));
  }
  stats.worldviewsFound = result.worldviews.size();
  if (!config.collectStats) stats = SolveStats{0, 0, 0, stats.worldviewsFound, 0, stats.skipMismatches};
  return result;
}

}  // namespace elp
