#pragma once

#include <cstddef>
#include <vector>

#include "elp/program.hpp"
#include "elp/transform.hpp"

namespace elp::oracle {

/// Limits for the exhaustive worldview search. With maxAtoms = 4 there are
/// 2^16 - 1 nonempty belief interpretations to visit.
struct OracleBudget {
  std::size_t maxAtoms = 4;
  std::size_t maxInterpretations = 16;
  /// Only for enumerateWorldviewsByValuation.
  std::size_t maxSubjectiveAtoms = 16;
};

/// W |= K l iff every member satisfies l; "not not K l" behaves like "K l".
bool satisfies(const BeliefInterpretation& wv, const SubjectiveLiteral& l);

/// Replaces each subjective literal by #true / #false according to wv and
/// folds the constants away.
Program subjectiveReduct(const Program& program, const BeliefInterpretation& wv);

/// wv == SM(program^wv).
bool isWorldview(const Program& program, const BeliefInterpretation& wv);

/// Visits every nonempty belief interpretation over At(program).
/// Throws Errc::BudgetExceeded when At(program) is too large.
std::vector<BeliefInterpretation> enumerateWorldviews(const Program& program, const OracleBudget& budget = {});

/// Guesses a truth value for each distinct subjective atom, computes the
/// stable models of the resulting reduct and keeps those that reproduce the
/// guess. Exact for any program; cost grows with the number of distinct
/// subjective atoms rather than with At(program).
std::vector<BeliefInterpretation> enumerateWorldviewsByValuation(const Program& program,
                                                                 const OracleBudget& budget = {});

/// A belief interpretation realizing exactly the given signature on a
/// normal-form program: the single interpretation { a | k_a in signature }.
BeliefInterpretation canonicalBelief(const KSignature& signature, const AtomTable& table);

/// Orders belief sets by size, then member by member in model order.
void sortBeliefSets(std::vector<BeliefInterpretation>& sets, const AtomTable& table);

}  // namespace elp::oracle
