#include "elp/stable_models.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "elp/error.hpp"

namespace elp {

bool StableModelSet::contains(const Interpretation& m) const {
  return std::find(models.begin(), models.end(), m) != models.end();
}

bool ModelOrder::operator()(const Interpretation& lhs, const Interpretation& rhs) const {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  auto symbols = [this](const Interpretation& m) {
    std::vector<std::string_view> out;
    out.reserve(m.size());
    for (AtomId a : m) out.emplace_back(table_->symbol(a));
    std::sort(out.begin(), out.end());
    return out;
  };
  return symbols(lhs) < symbols(rhs);
}

void sortModels(std::vector<Interpretation>& models, const AtomTable& table) {
  std::sort(models.begin(), models.end(), ModelOrder(table));
}

bool satisfiesExt(const Interpretation& interp, const ObjectiveLiteral& l) {
  bool base = l.isConstant() ? l.constant() == Constant::Top : interp.contains(l.atom());
  return l.negations % 2 == 0 ? base : !base;
}

namespace {

void requireObjective(const Program& program) {
  if (!program.isObjective()) throw Error(Errc::NotObjective, "subjective literal in an objective-only operation");
}

bool bodyHolds(const Interpretation& interp, const Rule& rule) {
  return std::all_of(rule.body.begin(), rule.body.end(), [&](const Literal& l) {
    return satisfiesExt(interp, std::get<ObjectiveLiteral>(l));
  });
}

// ---------------------------------------------------------------------------
// Compiled objective program over dense variable indices.

enum class Sign : std::uint8_t { Pos, Neg, DNeg };

struct CLit {
  int var;
  Sign sign;
};

struct CRule {
  std::vector<int> head;
  std::vector<CLit> body;
};

// -1 false, 0 unassigned, 1 true
using Assignment = std::vector<signed char>;

inline int value(const Assignment& v, CLit l) { return l.sign == Sign::Neg ? -v[l.var] : v[l.var]; }

struct Compiled {
  std::vector<AtomId> atoms;
  std::unordered_map<AtomId, int> index;
  std::vector<CRule> rules;
  std::vector<std::vector<int>> headOccurrences;

  explicit Compiled(const Program& input) {
    requireObjective(input);
    Program program = foldConstants(input);
    atoms = atomsOf(program);
    for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], static_cast<int>(i));
    headOccurrences.resize(atoms.size());
    for (const Rule& rule : program.rules()) {
      CRule c;
      for (AtomId a : rule.head) {
        int v = index.at(a);
        if (std::find(c.head.begin(), c.head.end(), v) == c.head.end()) c.head.push_back(v);
      }
      for (const Literal& l : rule.body) {
        const auto& o = std::get<ObjectiveLiteral>(l);
        Sign s = o.negations == 0 ? Sign::Pos : (o.negations == 1 ? Sign::Neg : Sign::DNeg);
        c.body.push_back({index.at(o.atom()), s});
      }
      for (int h : c.head) headOccurrences[h].push_back(static_cast<int>(rules.size()));
      rules.push_back(std::move(c));
    }
  }

  Assignment encode(const Interpretation& interp) const {
    Assignment v(atoms.size(), -1);
    for (AtomId a : interp) v[index.at(a)] = 1;
    return v;
  }

  Interpretation decode(const Assignment& v) const {
    Interpretation out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (v[i] > 0) out.insert(atoms[i]);
    }
    return out;
  }
};

// Is there a model of the clause set? Literals are var+1 / -(var+1).
bool satisfiable(const std::vector<std::vector<int>>& clauses, Assignment& v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : clauses) {
      int open = 0, last = 0;
      bool sat = false;
      for (int l : clause) {
        int val = l > 0 ? v[l - 1] : -v[-l - 1];
        if (val > 0) {
          sat = true;
          break;
        }
        if (val == 0) {
          ++open;
          last = l;
        }
      }
      if (sat) continue;
      if (open == 0) return false;
      if (open == 1) {
        v[std::abs(last) - 1] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
  }
  auto it = std::find(v.begin(), v.end(), 0);
  if (it == v.end()) return true;
  for (signed char choice : {-1, 1}) {
    Assignment next = v;
    next[it - v.begin()] = choice;
    if (satisfiable(clauses, next)) return true;
  }
  return false;
}

bool isModelAssignment(const Compiled& c, const Assignment& v) {
  for (const CRule& r : c.rules) {
    bool body = std::all_of(r.body.begin(), r.body.end(), [&](CLit l) { return value(v, l) > 0; });
    if (!body) continue;
    if (std::none_of(r.head.begin(), r.head.end(), [&](int h) { return v[h] > 0; })) return false;
  }
  return true;
}

// v is total. Stable iff v is a model of the reduct and no proper subset is.
bool isStableAssignment(const Compiled& c, const Assignment& v) {
  if (!isModelAssignment(c, v)) return false;

  // Reduct rules that can fire inside subsets of v, heads cut down to v.
  struct Restricted {
    std::vector<int> pos;
    std::vector<int> head;
  };
  std::vector<Restricted> rules;
  bool definite = true;
  for (const CRule& r : c.rules) {
    bool keep = true;
    Restricted rr;
    for (CLit l : r.body) {
      if (l.sign == Sign::Pos) {
        if (v[l.var] < 0) keep = false;
        rr.pos.push_back(l.var);
      } else if (value(v, l) < 0) {
        keep = false;
      }
      if (!keep) break;
    }
    if (!keep) continue;
    for (int h : r.head) {
      if (v[h] > 0) rr.head.push_back(h);
    }
    if (rr.head.size() > 1) definite = false;
    rules.push_back(std::move(rr));
  }

  std::size_t trueCount = static_cast<std::size_t>(std::count(v.begin(), v.end(), 1));
  if (definite) {
    // Least model of the (now Horn) restricted reduct must be v itself.
    std::vector<std::size_t> missing(rules.size());
    std::vector<std::vector<int>> watch(v.size());
    std::vector<int> queue;
    std::vector<char> derived(v.size(), 0);
    for (std::size_t i = 0; i < rules.size(); ++i) {
      missing[i] = rules[i].pos.size();
      for (int p : rules[i].pos) watch[p].push_back(static_cast<int>(i));
      if (missing[i] == 0 && !derived[rules[i].head[0]]) {
        derived[rules[i].head[0]] = 1;
        queue.push_back(rules[i].head[0]);
      }
    }
    std::size_t count = queue.size();
    while (!queue.empty()) {
      int a = queue.back();
      queue.pop_back();
      for (int ri : watch[a]) {
        if (--missing[ri] == 0) {
          int h = rules[ri].head[0];
          if (!derived[h]) {
            derived[h] = 1;
            ++count;
            queue.push_back(h);
          }
        }
      }
    }
    return count == trueCount;
  }

  // Disjunctive: search for a model of the reduct strictly inside v.
  std::vector<int> local(v.size(), -1);
  int k = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) local[i] = k++;
  }
  std::vector<std::vector<int>> clauses;
  for (const Restricted& r : rules) {
    std::vector<int> clause;
    for (int p : r.pos) clause.push_back(-(local[p] + 1));
    for (int h : r.head) clause.push_back(local[h] + 1);
    clauses.push_back(std::move(clause));
  }
  std::vector<int> smaller;
  for (int i = 0; i < k; ++i) smaller.push_back(-(i + 1));
  clauses.push_back(std::move(smaller));
  Assignment sub(static_cast<std::size_t>(k), 0);
  return !satisfiable(clauses, sub);
}

// ---------------------------------------------------------------------------
// Backtracking enumeration. Propagation is sound for stable models: every
// stable model is a model in which each true atom has a rule with a true
// body whose head contains no other true atom.

class Enumerator {
 public:
  explicit Enumerator(const Compiled& c) : c_(c) {}

  std::vector<Interpretation> run() {
    Assignment v(c_.atoms.size(), 0);
    search(v);
    return std::move(found_);
  }

 private:
  bool propagate(Assignment& v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const CRule& r : c_.rules) {
        int open = 0;
        const CLit* openLit = nullptr;
        bool bodyFalse = false;
        for (const CLit& l : r.body) {
          int val = value(v, l);
          if (val < 0) {
            bodyFalse = true;
            break;
          }
          if (val == 0) {
            ++open;
            openLit = &l;
          }
        }
        if (bodyFalse) continue;
        int headOpen = 0, openHead = -1;
        bool headTrue = false;
        for (int h : r.head) {
          if (v[h] > 0) {
            headTrue = true;
            break;
          }
          if (v[h] == 0) {
            ++headOpen;
            openHead = h;
          }
        }
        if (headTrue) continue;
        if (open == 0) {
          if (headOpen == 0) return false;
          if (headOpen == 1) {
            v[openHead] = 1;
            changed = true;
          }
        } else if (open == 1 && headOpen == 0) {
          v[openLit->var] = openLit->sign == Sign::Neg ? 1 : -1;
          changed = true;
        }
      }

      for (std::size_t a = 0; a < c_.atoms.size(); ++a) {
        if (v[a] < 0) continue;
        int supports = 0, only = -1;
        for (int ri : c_.headOccurrences[a]) {
          const CRule& r = c_.rules[ri];
          if (std::any_of(r.body.begin(), r.body.end(), [&](CLit l) { return value(v, l) < 0; })) continue;
          if (std::any_of(r.head.begin(), r.head.end(),
                          [&](int h) { return h != static_cast<int>(a) && v[h] > 0; })) {
            continue;
          }
          ++supports;
          only = ri;
          if (supports > 1) break;
        }
        if (supports == 0) {
          if (v[a] > 0) return false;
          v[a] = -1;
          changed = true;
        } else if (supports == 1 && v[a] > 0) {
          const CRule& r = c_.rules[only];
          for (CLit l : r.body) {
            if (value(v, l) == 0) {
              v[l.var] = l.sign == Sign::Neg ? -1 : 1;
              changed = true;
            }
          }
          for (int h : r.head) {
            if (h != static_cast<int>(a) && v[h] == 0) {
              v[h] = -1;
              changed = true;
            }
          }
        }
      }
    }
    return true;
  }

  void search(Assignment& v) {
    if (!propagate(v)) return;
    auto it = std::find(v.begin(), v.end(), 0);
    if (it == v.end()) {
      if (isStableAssignment(c_, v)) found_.push_back(c_.decode(v));
      return;
    }
    std::size_t pos = static_cast<std::size_t>(it - v.begin());
    for (signed char choice : {-1, 1}) {
      Assignment next = v;
      next[pos] = choice;
      search(next);
    }
  }

  const Compiled& c_;
  std::vector<Interpretation> found_;
};

}  // namespace

bool isModel(const Interpretation& interp, const Program& program) {
  requireObjective(program);
  for (const Rule& rule : program.rules()) {
    if (!bodyHolds(interp, rule)) continue;
    if (std::none_of(rule.head.begin(), rule.head.end(), [&](AtomId a) { return interp.contains(a); })) {
      return false;
    }
  }
  return true;
}

Program reduct(const Program& program, const Interpretation& interp) {
  requireObjective(program);
  Program out(program.sharedTable());
  for (const Rule& rule : program.rules()) {
    Rule positive{rule.head, {}, false};
    bool keep = true;
    for (const Literal& l : rule.body) {
      const auto& o = std::get<ObjectiveLiteral>(l);
      if (o.negations == 0) {
        positive.body.push_back(o);
      } else if (!satisfiesExt(interp, o)) {
        keep = false;
        break;
      }
    }
    if (keep) out.add(std::move(positive));
  }
  return foldConstants(out);
}

bool isStableModel(const Program& program, const Interpretation& interp) {
  Compiled c(program);
  for (AtomId a : interp) {
    if (!c.index.contains(a)) return false;
  }
  return isStableAssignment(c, c.encode(interp));
}

StableModelSet enumerateStableModels(const Program& program) {
  Compiled c(program);
  StableModelSet out{Enumerator(c).run()};
  sortModels(out.models, program.table());
  return out;
}

Program withAssumption(const Program& program, const Assumption& assumption) {
  if (!assumption.consistent()) throw Error(Errc::InconsistentAssumption, "assumption contains a and not a");
  Program out = program;
  for (AtomId a : assumption.positive) out.add(Rule{{}, {lit(a, 1)}, false});
  for (AtomId a : assumption.negative) out.add(Rule{{}, {lit(a)}, false});
  return out;
}

StableModelSet stableModelsUnderAssumption(const Program& program, const Assumption& assumption) {
  requireObjective(program);
  return enumerateStableModels(withAssumption(program, assumption));
}

CautiousResult cautiousConsequences(const Program& program, const Assumption& assumption) {
  StableModelSet models = stableModelsUnderAssumption(program, assumption);
  if (models.empty()) return {};
  Interpretation common = models.models.front();
  for (const Interpretation& m : models.models) {
    std::erase_if(common, [&](AtomId a) { return !m.contains(a); });
  }
  return {std::move(common)};
}

Interpretation leastModelHorn(const Program& input) {
  requireObjective(input);
  Program program = foldConstants(input);
  for (const Rule& rule : program.rules()) {
    bool positive = std::all_of(rule.body.begin(), rule.body.end(),
                                [](const Literal& l) { return std::get<ObjectiveLiteral>(l).negations == 0; });
    if (rule.head.size() != 1 || !positive) throw Error(Errc::NotHorn, "rule is not a definite Horn clause");
  }
  Interpretation model;
  std::vector<std::size_t> missing(program.size());
  std::unordered_map<AtomId, std::vector<std::size_t>> watch;
  std::vector<AtomId> queue;
  auto derive = [&](AtomId a) {
    if (model.insert(a).second) queue.push_back(a);
  };
  for (std::size_t i = 0; i < program.size(); ++i) {
    const Rule& rule = program.rules()[i];
    missing[i] = rule.body.size();
    for (const Literal& l : rule.body) watch[std::get<ObjectiveLiteral>(l).atom()].push_back(i);
    if (missing[i] == 0) derive(rule.head.front());
  }
  while (!queue.empty()) {
    AtomId a = queue.back();
    queue.pop_back();
    for (std::size_t ri : watch[a]) {
      if (--missing[ri] == 0) derive(program.rules()[ri].head.front());
    }
  }
  return model;
}

}  // namespace elp
