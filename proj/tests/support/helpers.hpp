#pragma once

#include <doctest.h>

#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "elp/parser.hpp"
#include "elp/program.hpp"

namespace elp::testing {

inline Program parse(std::string_view text, std::shared_ptr<AtomTable> table = nullptr, bool reserved = false) {
  ParseOptions options;
  options.allowReservedPrefixes = reserved;
  ParseResult result = parseProgram(text, std::move(table), options);
  if (!result.ok()) {
    for (const auto& d : result.diagnostics) MESSAGE(toString(d));
  }
  REQUIRE(result.ok());
  return *result.program;
}

/// Interpretation from atom symbols; symbols must already be interned.
inline Interpretation interp(const AtomTable& table, std::initializer_list<std::string_view> symbols) {
  Interpretation out;
  for (auto s : symbols) {
    auto id = table.find(s);
    const std::string missing = "unknown atom " + std::string(s);
    REQUIRE_MESSAGE(id.has_value(), missing);
    out.insert(*id);
  }
  return out;
}

inline std::set<Interpretation> asSet(const std::vector<Interpretation>& models) {
  return {models.begin(), models.end()};
}

}  // namespace elp::testing
