#include "elp/family.hpp"

#include <string>
#include <vector>

#include "elp/error.hpp"

namespace elp {

Program generatePropagationFamily(std::size_t n, std::shared_ptr<AtomTable> table) {
  if (n == 0) throw Error(Errc::InvalidArgument, "the family is defined for n >= 1");
  if (!table) table = std::make_shared<AtomTable>();
  Program program(table);
  std::vector<AtomId> as, nots;
  for (std::size_t i = 1; i <= n; ++i) {
    as.push_back(table->intern("a" + std::to_string(i)));
    nots.push_back(freshDerivedAtom(*table, AtomOrigin::NotOnce, as.back()));
  }
  AtomId g = table->intern("g");
  for (std::size_t i = 0; i < n; ++i) program.add(Rule{{as[i]}, {know(lit(nots[i]), 1)}, false});
  for (std::size_t i = 0; i < n; ++i) program.add(Rule{{nots[i]}, {lit(as[i], 1)}, false});
  for (std::size_t i = 0; i < n; ++i) program.add(Rule{{g}, {lit(as[i])}, false});
  program.add(Rule{{}, {know(lit(g))}, false});
  return program;
}

}  // namespace elp
