#pragma once

#include <string>

#include "elp/program.hpp"
#include "elp/transform.hpp"

namespace elp {

std::string formatLiteral(const Literal& l, const AtomTable& table);
std::string formatRule(const Rule& rule, const AtomTable& table);
/// One rule per line, in the input syntax.
std::string formatProgram(const Program& program);

/// "{a,b}" with atoms sorted by symbol.
std::string formatInterpretation(const Interpretation& interp, const AtomTable& table);
/// "{ {a}, {a,b} }" with members in model order.
std::string formatBeliefSet(const BeliefInterpretation& wv, const AtomTable& table);
/// "{ a, not b }": each k_ atom shown as the literal under K, in the
/// user's vocabulary (not1_b is shown as "not b").
std::string formatSignature(const KSignature& signature, const AtomTable& table);

}  // namespace elp
