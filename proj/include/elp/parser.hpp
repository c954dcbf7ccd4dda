#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elp/program.hpp"

namespace elp {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  Severity severity = Severity::Error;
};

std::string toString(const ParseDiagnostic& d);

struct ParseOptions {
  /// Accept k_, kp_, kpn_, not1_ and not2_ atoms (emitted companion programs).
  bool allowReservedPrefixes = false;
  bool foldConstants = true;
};

struct ParseResult {
  std::optional<Program> program;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

/// Parses the ground ELP text format:
///
///   rule    := ( head [ ":-" body ] | ":-" body ) "."
///   head    := atom { ("|" | ";") atom } | "{" atom "}" | "#false"
///   literal := [ "not" [ "not" ] ] ( atom | "#true" | "#false" | "K" ... )
///
/// Choice rules are desugared on the fly. The first error stops parsing;
/// warnings (duplicate rules) do not.
ParseResult parseProgram(std::string_view text, std::shared_ptr<AtomTable> table = nullptr,
                         const ParseOptions& options = {});

}  // namespace elp
