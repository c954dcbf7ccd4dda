#pragma once

#include <set>
#include <vector>

#include "elp/program.hpp"

namespace elp {

/// A set of k_ atoms.
using KSignature = std::set<AtomId>;

/// K(program): k_a for every K a in program, in first-occurrence order.
/// Requires normal form.
std::vector<AtomId> kAtomsOf(const Program& program);

/// Replaces each K a by k_a, keeping the outer negations.
Program kRename(const Program& program);

/// kRename plus a choice rule {k_a} per K-atom.
Program buildT0(const Program& program);
/// T0 plus ":- k_a, not a." per K-atom.
Program buildG0(const Program& program);
/// The epistemic propagation rules deriving kp_a / kpn_a / kpn_rI.
Program buildKp(const Program& program);
/// G0, the propagation rules, and ":- kp_a, not k_a." per K-atom.
Program buildG1(const Program& program);

KSignature kOfInterpretation(const Interpretation& m, const KSignature& universe);
/// { k_a in universe | every interpretation of wv contains a }.
KSignature kOfWorldview(const BeliefInterpretation& wv, const KSignature& universe, const AtomTable& table);

/// Positive k_a for the signature, negative for the rest of the universe.
Assumption signatureAssumption(const KSignature& signature, const KSignature& universe);

/// Sum over rules of head width plus body length.
std::size_t programSize(const Program& program);

struct TransformBundle {
  Program source;
  std::vector<AtomId> kOrder;
  KSignature kAtoms;
  Program t0;
  Program g0;
  Program kpPart;
  Program g1;

  static TransformBundle build(const Program& normalForm);
};

}  // namespace elp
