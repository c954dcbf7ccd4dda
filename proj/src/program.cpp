#include "elp/program.hpp"

#include <algorithm>
#include <unordered_set>

namespace elp {

bool isSubjective(const Literal& l) { return std::holds_alternative<SubjectiveLiteral>(l); }

Rule choiceRule(AtomId a, std::vector<Literal> body) {
  body.emplace_back(lit(a, 2));
  return Rule{{a}, std::move(body), true};
}

Program::Program() : table_(std::make_shared<AtomTable>()) {}

Program::Program(std::shared_ptr<AtomTable> table) : table_(std::move(table)) {}

Program::Program(std::shared_ptr<AtomTable> table, std::vector<Rule> rules)
    : table_(std::move(table)), rules_(std::move(rules)) {}

void Program::append(const Program& other) {
  rules_.insert(rules_.end(), other.rules_.begin(), other.rules_.end());
}

bool Program::isObjective() const {
  return std::none_of(rules_.begin(), rules_.end(), [](const Rule& r) {
    return std::any_of(r.body.begin(), r.body.end(), isSubjective);
  });
}

bool Assumption::consistent() const {
  return std::none_of(positive.begin(), positive.end(), [&](AtomId a) { return negative.contains(a); });
}

std::vector<AtomId> atomsOf(const Program& program) {
  std::vector<AtomId> out;
  std::unordered_set<AtomId> seen;
  auto note = [&](AtomId a) {
    if (seen.insert(a).second) out.push_back(a);
  };
  auto noteObjective = [&](const ObjectiveLiteral& l) {
    if (l.isAtom()) note(l.atom());
  };
  for (const Rule& rule : program.rules()) {
    for (AtomId a : rule.head) note(a);
    for (const Literal& l : rule.body) {
      if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
        noteObjective(*o);
      } else {
        noteObjective(std::get<SubjectiveLiteral>(l).inner);
      }
    }
  }
  return out;
}

std::set<AtomId> atomSetOf(const Program& program) {
  auto atoms = atomsOf(program);
  return {atoms.begin(), atoms.end()};
}

namespace {

// nullopt: still mentions an atom
std::optional<bool> constantValue(const ObjectiveLiteral& l) {
  if (!l.isConstant()) return std::nullopt;
  bool top = l.constant() == Constant::Top;
  return l.negations % 2 == 0 ? top : !top;
}

std::optional<bool> constantValue(const Literal& l) {
  if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) return constantValue(*o);
  const auto& s = std::get<SubjectiveLiteral>(l);
  // K over a constant is the constant itself: every interpretation agrees on it.
  auto inner = constantValue(s.inner);
  if (!inner) return std::nullopt;
  return s.negations % 2 == 1 ? !*inner : *inner;
}

}  // namespace

Program foldConstants(const Program& program) {
  Program out(program.sharedTable());
  for (const Rule& rule : program.rules()) {
    Rule folded{rule.head, {}, rule.choice};
    bool dropped = false;
    for (const Literal& l : rule.body) {
      auto value = constantValue(l);
      if (!value) {
        folded.body.push_back(l);
      } else if (!*value) {
        dropped = true;
        break;
      }
    }
    if (!dropped) out.add(std::move(folded));
  }
  return out;
}

namespace {

bool sameObjective(const ObjectiveLiteral& a, const AtomTable& ta, const ObjectiveLiteral& b, const AtomTable& tb) {
  if (a.negations != b.negations || a.core.index() != b.core.index()) return false;
  if (a.isConstant()) return a.constant() == b.constant();
  return ta.symbol(a.atom()) == tb.symbol(b.atom());
}

}  // namespace

bool structurallyEqual(const Program& lhs, const Program& rhs) {
  if (lhs.size() != rhs.size()) return false;
  const AtomTable& ta = lhs.table();
  const AtomTable& tb = rhs.table();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const Rule& a = lhs.rules()[i];
    const Rule& b = rhs.rules()[i];
    if (a.choice != b.choice || a.head.size() != b.head.size() || a.body.size() != b.body.size()) return false;
    for (std::size_t j = 0; j < a.head.size(); ++j) {
      if (ta.symbol(a.head[j]) != tb.symbol(b.head[j])) return false;
    }
    for (std::size_t j = 0; j < a.body.size(); ++j) {
      if (a.body[j].index() != b.body[j].index()) return false;
      if (const auto* oa = std::get_if<ObjectiveLiteral>(&a.body[j])) {
        if (!sameObjective(*oa, ta, std::get<ObjectiveLiteral>(b.body[j]), tb)) return false;
      } else {
        const auto& sa = std::get<SubjectiveLiteral>(a.body[j]);
        const auto& sb = std::get<SubjectiveLiteral>(b.body[j]);
        if (sa.negations != sb.negations || !sameObjective(sa.inner, ta, sb.inner, tb)) return false;
      }
    }
  }
  return true;
}

Interpretation restrict(const Interpretation& interp, const std::set<AtomId>& atoms) {
  Interpretation out;
  for (AtomId a : interp) {
    if (atoms.contains(a)) out.insert(a);
  }
  return out;
}

}  // namespace elp
