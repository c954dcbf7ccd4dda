#include "elp/transform.hpp"

#include <algorithm>
#include <unordered_set>

#include "elp/error.hpp"
#include "elp/normal_form.hpp"

namespace elp {

namespace {

void requireNormalForm(const Program& program) {
  if (!isNormalForm(program)) throw Error(Errc::NotNormalForm, "negation or constant inside K");
}

ObjectiveLiteral renamed(AtomTable& table, const SubjectiveLiteral& s) {
  return lit(freshDerivedAtom(table, AtomOrigin::K, s.inner.atom()), s.negations);
}

// "not not L" collapses to L before complementing.
ObjectiveLiteral complement(ObjectiveLiteral l) {
  l.negations = l.negations == 1 ? 0 : 1;
  return l;
}

}  // namespace

std::vector<AtomId> kAtomsOf(const Program& program) {
  requireNormalForm(program);
  std::vector<AtomId> out;
  std::unordered_set<AtomId> seen;
  for (const Rule& rule : program.rules()) {
    for (const Literal& l : rule.body) {
      if (const auto* s = std::get_if<SubjectiveLiteral>(&l)) {
        AtomId k = freshDerivedAtom(program.table(), AtomOrigin::K, s->inner.atom());
        if (seen.insert(k).second) out.push_back(k);
      }
    }
  }
  return out;
}

Program kRename(const Program& program) {
  requireNormalForm(program);
  Program out(program.sharedTable());
  for (const Rule& rule : program.rules()) {
    Rule r = rule;
    for (Literal& l : r.body) {
      if (const auto* s = std::get_if<SubjectiveLiteral>(&l)) l = renamed(program.table(), *s);
    }
    out.add(std::move(r));
  }
  return out;
}

Program buildT0(const Program& program) {
  Program out = kRename(program);
  for (AtomId k : kAtomsOf(program)) out.add(choiceRule(k));
  return out;
}

Program buildG0(const Program& program) {
  Program out = buildT0(program);
  for (AtomId k : kAtomsOf(program)) {
    out.add(Rule{{}, {lit(k), lit(*program.table().base(k), 1)}, false});
  }
  return out;
}

Program buildKp(const Program& program) {
  requireNormalForm(program);
  AtomTable& table = program.table();
  auto kp = [&](AtomId a) { return freshDerivedAtom(table, AtomOrigin::Kp, a); };
  auto kpn = [&](AtomId a) { return freshDerivedAtom(table, AtomOrigin::KpNotAtom, a); };

  Program out(program.sharedTable());
  std::vector<AtomId> ruleAtoms;
  for (std::size_t i = 0; i < program.size(); ++i) {
    const Rule& rule = program.rules()[i];
    AtomId blocked = freshDerivedAtom(table, i + 1);
    ruleAtoms.push_back(blocked);

    Rule forced{};
    std::vector<Rule> blockers;
    for (const Literal& l : rule.body) {
      if (const auto* s = std::get_if<SubjectiveLiteral>(&l)) {
        ObjectiveLiteral k = renamed(table, *s);
        forced.body.emplace_back(k);
        blockers.push_back(Rule{{blocked}, {complement(k)}, false});
        continue;
      }
      const auto& o = std::get<ObjectiveLiteral>(l);
      AtomId a = o.atom();
      if (o.negations == 1) {
        forced.body.emplace_back(lit(kpn(a)));
        blockers.push_back(Rule{{blocked}, {lit(kp(a))}, false});
      } else {
        forced.body.emplace_back(lit(kp(a)));
        blockers.push_back(Rule{{blocked}, {lit(kpn(a))}, false});
      }
    }
    if (rule.head.size() == 1) {
      forced.head = {kp(rule.head.front())};
      out.add(std::move(forced));
    }
    for (Rule& r : blockers) out.add(std::move(r));
  }

  for (AtomId a : atomsOf(program)) {
    Rule completion{{kpn(a)}, {}, false};
    for (std::size_t i = 0; i < program.size(); ++i) {
      const auto& head = program.rules()[i].head;
      if (std::find(head.begin(), head.end(), a) != head.end()) completion.body.emplace_back(lit(ruleAtoms[i]));
    }
    out.add(std::move(completion));
  }
  return out;
}

Program buildG1(const Program& program) {
  Program out = buildG0(program);
  out.append(buildKp(program));
  for (AtomId k : kAtomsOf(program)) {
    AtomId a = *program.table().base(k);
    out.add(Rule{{}, {lit(freshDerivedAtom(program.table(), AtomOrigin::Kp, a)), lit(k, 1)}, false});
  }
  return out;
}

KSignature kOfInterpretation(const Interpretation& m, const KSignature& universe) {
  KSignature out;
  for (AtomId a : m) {
    if (universe.contains(a)) out.insert(a);
  }
  return out;
}

KSignature kOfWorldview(const BeliefInterpretation& wv, const KSignature& universe, const AtomTable& table) {
  KSignature out;
  for (AtomId k : universe) {
    AtomId a = *table.base(k);
    if (std::all_of(wv.begin(), wv.end(), [&](const Interpretation& i) { return i.contains(a); })) out.insert(k);
  }
  return out;
}

Assumption signatureAssumption(const KSignature& signature, const KSignature& universe) {
  Assumption out;
  for (AtomId k : universe) (signature.contains(k) ? out.positive : out.negative).insert(k);
  return out;
}

std::size_t programSize(const Program& program) {
  std::size_t size = 0;
  for (const Rule& rule : program.rules()) size += rule.head.size() + rule.body.size();
  return size;
}

TransformBundle TransformBundle::build(const Program& normalForm) {
  auto order = kAtomsOf(normalForm);
  return TransformBundle{normalForm,
                         order,
                         KSignature(order.begin(), order.end()),
                         buildT0(normalForm),
                         buildG0(normalForm),
                         buildKp(normalForm),
                         buildG1(normalForm)};
}

}  // namespace elp
