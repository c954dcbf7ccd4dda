#include "elp/printer.hpp"

#include <algorithm>
#include <vector>

#include "elp/stable_models.hpp"

namespace elp {

namespace {

std::string negationPrefix(int negations) {
  std::string out;
  for (int i = 0; i < negations; ++i) out += "not ";
  return out;
}

std::string formatObjective(const ObjectiveLiteral& l, const AtomTable& table) {
  std::string core = l.isAtom() ? table.symbol(l.atom()) : (l.constant() == Constant::Top ? "#true" : "#false");
  return negationPrefix(l.negations) + core;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string formatLiteral(const Literal& l, const AtomTable& table) {
  if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) return formatObjective(*o, table);
  const auto& s = std::get<SubjectiveLiteral>(l);
  return negationPrefix(s.negations) + "K " + formatObjective(s.inner, table);
}

std::string formatRule(const Rule& rule, const AtomTable& table) {
  std::vector<Literal> body = rule.body;
  std::string head;
  bool sugared = rule.choice && rule.head.size() == 1 && !body.empty() &&
                 body.back() == Literal{lit(rule.head.front(), 2)};
  if (sugared) {
    body.pop_back();
    head = "{" + table.symbol(rule.head.front()) + "}";
  } else {
    std::vector<std::string> atoms;
    for (AtomId a : rule.head) atoms.push_back(table.symbol(a));
    head = join(atoms, " | ");
  }
  if (body.empty()) return head.empty() ? "#false." : head + ".";
  std::vector<std::string> literals;
  for (const Literal& l : body) literals.push_back(formatLiteral(l, table));
  return (head.empty() ? "" : head + " ") + ":- " + join(literals, ", ") + ".";
}

std::string formatProgram(const Program& program) {
  std::string out;
  for (const Rule& rule : program.rules()) out += formatRule(rule, program.table()) + "\n";
  return out;
}

std::string formatInterpretation(const Interpretation& interp, const AtomTable& table) {
  std::vector<std::string> atoms;
  for (AtomId a : interp) atoms.push_back(table.symbol(a));
  std::sort(atoms.begin(), atoms.end());
  return "{" + join(atoms, ",") + "}";
}

std::string formatBeliefSet(const BeliefInterpretation& wv, const AtomTable& table) {
  std::vector<Interpretation> members(wv.begin(), wv.end());
  sortModels(members, table);
  std::vector<std::string> parts;
  for (const Interpretation& m : members) parts.push_back(formatInterpretation(m, table));
  return parts.empty() ? "{ }" : "{ " + join(parts, ", ") + " }";
}

std::string formatSignature(const KSignature& signature, const AtomTable& table) {
  std::vector<std::string> parts;
  for (AtomId k : signature) {
    AtomId a = *table.base(k);
    switch (table.origin(a)) {
      case AtomOrigin::NotOnce: parts.push_back("not " + table.symbol(*table.base(a))); break;
      case AtomOrigin::NotTwice: parts.push_back("not not " + table.symbol(*table.base(a))); break;
      default: parts.push_back(table.symbol(a)); break;
    }
  }
  std::sort(parts.begin(), parts.end());
  return parts.empty() ? "{ }" : "{ " + join(parts, ", ") + " }";
}

}  // namespace elp
