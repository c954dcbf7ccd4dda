#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "elp/atoms.hpp"

namespace elp {

enum class Constant : std::uint8_t { Top, Bot };

/// An atom or truth constant under zero, one or two default negations.
struct ObjectiveLiteral {
  std::variant<AtomId, Constant> core;
  int negations = 0;

  bool isAtom() const { return std::holds_alternative<AtomId>(core); }
  AtomId atom() const { return std::get<AtomId>(core); }
  bool isConstant() const { return std::holds_alternative<Constant>(core); }
  Constant constant() const { return std::get<Constant>(core); }

  friend bool operator==(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
  friend auto operator<=>(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
};

/// K applied to an objective literal, under zero, one or two negations.
struct SubjectiveLiteral {
  ObjectiveLiteral inner;
  int negations = 0;

  friend bool operator==(const SubjectiveLiteral&, const SubjectiveLiteral&) = default;
  friend auto operator<=>(const SubjectiveLiteral&, const SubjectiveLiteral&) = default;
};

using Literal = std::variant<ObjectiveLiteral, SubjectiveLiteral>;

inline ObjectiveLiteral lit(AtomId a, int negations = 0) { return {a, negations}; }
inline ObjectiveLiteral lit(Constant c, int negations = 0) { return {c, negations}; }
inline SubjectiveLiteral know(ObjectiveLiteral inner, int negations = 0) { return {inner, negations}; }

bool isSubjective(const Literal& l);

/// Disjunctive rule; an empty head is a constraint. Choice rules are kept
/// desugared: the body already ends with "not not a" for head atom a.
struct Rule {
  std::vector<AtomId> head;
  std::vector<Literal> body;
  bool choice = false;

  bool isConstraint() const { return head.empty(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Builds the desugared form of "{a} :- body".
Rule choiceRule(AtomId a, std::vector<Literal> body = {});

/// Ordered list of rules over atoms of a shared interning table.
class Program {
 public:
  Program();
  explicit Program(std::shared_ptr<AtomTable> table);
  Program(std::shared_ptr<AtomTable> table, std::vector<Rule> rules);

  AtomTable& table() const { return *table_; }
  const std::shared_ptr<AtomTable>& sharedTable() const { return table_; }

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  void add(Rule rule) { rules_.push_back(std::move(rule)); }
  void append(const Program& other);

  bool isObjective() const;

 private:
  std::shared_ptr<AtomTable> table_;
  std::vector<Rule> rules_;
};

using Interpretation = std::set<AtomId>;
/// Nonempty set of interpretations.
using BeliefInterpretation = std::set<Interpretation>;

/// Consistent set of signed atoms.
struct Assumption {
  std::set<AtomId> positive;
  std::set<AtomId> negative;

  bool consistent() const;
  bool empty() const { return positive.empty() && negative.empty(); }
};

/// At(program) in first-occurrence order, including atoms that only occur
/// inside subjective literals.
std::vector<AtomId> atomsOf(const Program& program);
std::set<AtomId> atomSetOf(const Program& program);

/// Removes truth constants from rule bodies: true literals vanish, rules
/// with a false literal are dropped.
Program foldConstants(const Program& program);

/// Rule-by-rule comparison by atom symbols, so programs over different
/// tables can be compared.
bool structurallyEqual(const Program& lhs, const Program& rhs);

Interpretation restrict(const Interpretation& interp, const std::set<AtomId>& atoms);

}  // namespace elp
