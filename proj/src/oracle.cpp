#include "elp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "elp/error.hpp"
#include "elp/stable_models.hpp"

namespace elp::oracle {

namespace {

using Knows = std::function<bool(const ObjectiveLiteral&)>;

Program reductBy(const Program& program, const Knows& knows) {
  Program out(program.sharedTable());
  for (const Rule& rule : program.rules()) {
    Rule r{rule.head, {}, rule.choice};
    for (const Literal& l : rule.body) {
      if (const auto* s = std::get_if<SubjectiveLiteral>(&l)) {
        bool holds = knows(s->inner);
        if (s->negations == 1) holds = !holds;
        r.body.emplace_back(lit(holds ? Constant::Top : Constant::Bot));
      } else {
        r.body.push_back(l);
      }
    }
    out.add(std::move(r));
  }
  return foldConstants(out);
}

std::vector<ObjectiveLiteral> subjectiveAtoms(const Program& program) {
  std::vector<ObjectiveLiteral> out;
  for (const Rule& rule : program.rules()) {
    for (const Literal& l : rule.body) {
      const auto* s = std::get_if<SubjectiveLiteral>(&l);
      if (s && std::find(out.begin(), out.end(), s->inner) == out.end()) out.push_back(s->inner);
    }
  }
  return out;
}

bool knownIn(const BeliefInterpretation& wv, const ObjectiveLiteral& l) {
  return std::all_of(wv.begin(), wv.end(), [&](const Interpretation& i) { return satisfiesExt(i, l); });
}

}  // namespace

bool satisfies(const BeliefInterpretation& wv, const SubjectiveLiteral& l) {
  bool known = knownIn(wv, l.inner);
  return l.negations == 1 ? !known : known;
}

Program subjectiveReduct(const Program& program, const BeliefInterpretation& wv) {
  return reductBy(program, [&](const ObjectiveLiteral& l) { return knownIn(wv, l); });
}

bool isWorldview(const Program& program, const BeliefInterpretation& wv) {
  if (wv.empty()) return false;
  StableModelSet models = enumerateStableModels(subjectiveReduct(program, wv));
  return BeliefInterpretation(models.models.begin(), models.models.end()) == wv;
}

std::vector<BeliefInterpretation> enumerateWorldviews(const Program& program, const OracleBudget& budget) {
  const std::vector<AtomId> atoms = atomsOf(program);
  const std::size_t interpretations = std::size_t{1} << atoms.size();
  if (atoms.size() > budget.maxAtoms || interpretations > budget.maxInterpretations || interpretations > 32) {
    throw Error(Errc::BudgetExceeded, "program has " + std::to_string(atoms.size()) + " atoms");
  }

  std::vector<Interpretation> space(interpretations);
  for (std::size_t i = 0; i < interpretations; ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (i >> j & 1) space[i].insert(atoms[j]);
    }
  }
  auto indexOf = [&](const Interpretation& interp) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (interp.contains(atoms[j])) index |= std::size_t{1} << j;
    }
    return index;
  };
  auto decode = [&](std::uint64_t mask) {
    BeliefInterpretation wv;
    for (std::size_t i = 0; i < interpretations; ++i) {
      if (mask >> i & 1) wv.insert(space[i]);
    }
    return wv;
  };

  // W |= K l  iff  W has no member outside satisfying[l].
  const std::vector<ObjectiveLiteral> inner = subjectiveAtoms(program);
  std::vector<std::uint64_t> satisfying(inner.size(), 0);
  for (std::size_t s = 0; s < inner.size(); ++s) {
    for (std::size_t i = 0; i < interpretations; ++i) {
      if (satisfiesExt(space[i], inner[s])) satisfying[s] |= std::uint64_t{1} << i;
    }
  }

  // The reduct only depends on which subjective atoms W knows.
  std::unordered_map<std::uint64_t, std::uint64_t> reductModels;
  std::vector<BeliefInterpretation> found;
  const std::uint64_t last = (std::uint64_t{1} << interpretations) - 1;
  for (std::uint64_t w = 1; w <= last; ++w) {
    std::uint64_t key = 0;
    for (std::size_t s = 0; s < inner.size(); ++s) key |= std::uint64_t{(w & ~satisfying[s]) == 0} << s;
    auto it = reductModels.find(key);
    if (it == reductModels.end()) {
      std::uint64_t models = 0;
      for (const Interpretation& m : enumerateStableModels(subjectiveReduct(program, decode(w))).models) {
        models |= std::uint64_t{1} << indexOf(m);
      }
      it = reductModels.emplace(key, models).first;
    }
    if (it->second == w) found.push_back(decode(w));
  }
  sortBeliefSets(found, program.table());
  return found;
}

std::vector<BeliefInterpretation> enumerateWorldviewsByValuation(const Program& program,
                                                                 const OracleBudget& budget) {
  const std::vector<ObjectiveLiteral> inner = subjectiveAtoms(program);
  if (inner.size() > budget.maxSubjectiveAtoms || inner.size() > 30) {
    throw Error(Errc::BudgetExceeded, "program has " + std::to_string(inner.size()) + " subjective atoms");
  }
  std::vector<BeliefInterpretation> found;
  for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << inner.size()); ++guess) {
    auto guessed = [&](const ObjectiveLiteral& l) {
      auto pos = std::find(inner.begin(), inner.end(), l) - inner.begin();
      return (guess >> pos & 1) != 0;
    };
    StableModelSet models = enumerateStableModels(reductBy(program, guessed));
    if (models.empty()) continue;
    BeliefInterpretation wv(models.models.begin(), models.models.end());
    bool reproduces = std::all_of(inner.begin(), inner.end(),
                                  [&](const ObjectiveLiteral& l) { return knownIn(wv, l) == guessed(l); });
    if (reproduces) found.push_back(std::move(wv));
  }
  sortBeliefSets(found, program.table());
  return found;
}

BeliefInterpretation canonicalBelief(const KSignature& signature, const AtomTable& table) {
  Interpretation only;
  for (AtomId k : signature) only.insert(*table.base(k));
  return {only};
}

void sortBeliefSets(std::vector<BeliefInterpretation>& sets, const AtomTable& table) {
  ModelOrder order(table);
  auto members = [&](const BeliefInterpretation& wv) {
    std::vector<Interpretation> out(wv.begin(), wv.end());
    std::sort(out.begin(), out.end(), order);
    return out;
  };
  std::sort(sets.begin(), sets.end(), [&](const BeliefInterpretation& lhs, const BeliefInterpretation& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    auto a = members(lhs);
    auto b = members(rhs);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), order);
  });
}

}  // namespace elp::oracle
