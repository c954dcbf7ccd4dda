#include "elp/normal_form.hpp"

#include <algorithm>

#include "elp/error.hpp"

namespace elp {

bool isNormalForm(const Program& program) {
  for (const Rule& rule : program.rules()) {
    for (const Literal& l : rule.body) {
      const auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (s && (s->inner.negations != 0 || !s->inner.isAtom())) return false;
    }
  }
  return true;
}

NormalFormResult normalize(const Program& program) {
  AtomTable& table = program.table();
  NormalFormResult result{Program(program.sharedTable()), {}};
  std::vector<Rule> defining;

  auto proxyFor = [&](AtomId a, int negations) {
    AtomOrigin kind = negations == 1 ? AtomOrigin::NotOnce : AtomOrigin::NotTwice;
    AtomId proxy = freshDerivedAtom(table, kind, a);
    if (result.introduced.emplace(proxy, a).second) {
      Rule rule{{proxy}, {lit(a, negations)}, false};
      bool present = std::find(program.rules().begin(), program.rules().end(), rule) != program.rules().end();
      if (!present) defining.push_back(std::move(rule));
    }
    return proxy;
  };

  for (const Rule& rule : program.rules()) {
    Rule rewritten = rule;
    for (Literal& l : rewritten.body) {
      auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (!s || s->inner.negations == 0) continue;
      if (!s->inner.isAtom()) {
        throw Error(Errc::InvalidArgument, "normalize expects a constant-folded program");
      }
      s->inner = lit(proxyFor(s->inner.atom(), s->inner.negations));
    }
    result.program.add(std::move(rewritten));
  }
  for (Rule& rule : defining) result.program.add(std::move(rule));
  return result;
}

BeliefInterpretation restrictWorldview(const BeliefInterpretation& wv, const std::set<AtomId>& atoms) {
  BeliefInterpretation out;
  for (const Interpretation& interp : wv) out.insert(restrict(interp, atoms));
  return out;
}

}  // namespace elp
