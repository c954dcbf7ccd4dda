#pragma once

#include <stdexcept>
#include <string>

namespace elp {

enum class Errc {
  ReservedPrefix,
  Collision,
  NotObjective,
  NotNormalForm,
  NotHorn,
  InconsistentAssumption,
  BudgetExceeded,
  GeneratorMismatch,
  EmptyWorldview,
  InvalidArgument,
};

const char* describe(Errc code) noexcept;

/// Exception type thrown by every library entry point. The code identifies
/// the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace elp
