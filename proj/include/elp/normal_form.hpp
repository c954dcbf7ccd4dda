#pragma once

#include <map>
#include <set>

#include "elp/program.hpp"

namespace elp {

struct NormalFormResult {
  Program program;
  /// not1_a / not2_a atom -> a
  std::map<AtomId, AtomId> introduced;
};

/// True iff every subjective literal is K a, not K a or not not K a.
bool isNormalForm(const Program& program);

/// Rewrites K not a to K not1_a (adding "not1_a :- not a.") and K not not a
/// to K not2_a (adding "not2_a :- not not a."). Expects a constant-folded
/// program. Defining rules are appended once per atom, in order of first use.
NormalFormResult normalize(const Program& program);

/// Projects every interpretation onto atoms and merges duplicates.
BeliefInterpretation restrictWorldview(const BeliefInterpretation& wv, const std::set<AtomId>& atoms);

}  // namespace elp
