#pragma once

#include <optional>
#include <vector>

#include "elp/program.hpp"

namespace elp {

/// Stable models in canonical order: by cardinality, then lexicographically
/// on the sorted atom symbols.
struct StableModelSet {
  std::vector<Interpretation> models;

  bool empty() const { return models.empty(); }
  std::size_t size() const { return models.size(); }
  bool contains(const Interpretation& m) const;
};

/// Intersection of all stable models, or nothing when there are none.
struct CautiousResult {
  std::optional<Interpretation> consequences;

  bool defined() const { return consequences.has_value(); }
};

/// Strict weak order used for every model listing in the library.
class ModelOrder {
 public:
  explicit ModelOrder(const AtomTable& table) : table_(&table) {}
  bool operator()(const Interpretation& lhs, const Interpretation& rhs) const;

 private:
  const AtomTable* table_;
};

void sortModels(std::vector<Interpretation>& models, const AtomTable& table);

bool satisfiesExt(const Interpretation& interp, const ObjectiveLiteral& l);
bool isModel(const Interpretation& interp, const Program& program);

/// Gelfond-Lifschitz reduct: drops rules with an unsatisfied negated literal
/// and strips negated literals from the rest.
Program reduct(const Program& program, const Interpretation& interp);

bool isStableModel(const Program& program, const Interpretation& interp);
StableModelSet enumerateStableModels(const Program& program);

/// program plus ":- not a." for positive and ":- a." for negative assumptions.
Program withAssumption(const Program& program, const Assumption& assumption);
StableModelSet stableModelsUnderAssumption(const Program& program, const Assumption& assumption);
CautiousResult cautiousConsequences(const Program& program, const Assumption& assumption = {});

/// Least fixpoint of the immediate-consequence operator of a definite program.
Interpretation leastModelHorn(const Program& program);

}  // namespace elp
