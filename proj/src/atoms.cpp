#include "elp/atoms.hpp"

#include <array>

#include "elp/error.hpp"

namespace elp {

const char* describe(Errc code) noexcept {
  switch (code) {
    case Errc::ReservedPrefix: return "reserved prefix";
    case Errc::Collision: return "atom collision";
    case Errc::NotObjective: return "program is not objective";
    case Errc::NotNormalForm: return "program is not in normal form";
    case Errc::NotHorn: return "program is not definite Horn";
    case Errc::InconsistentAssumption: return "inconsistent assumption";
    case Errc::BudgetExceeded: return "oracle budget exceeded";
    case Errc::GeneratorMismatch: return "generator mismatch";
    case Errc::EmptyWorldview: return "empty worldview";
    case Errc::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

namespace {
constexpr std::array kReserved = {std::string_view{"k_"}, std::string_view{"kp_"}, std::string_view{"kpn_"},
                                  std::string_view{"not1_"}, std::string_view{"not2_"}};
}  // namespace

bool AtomTable::hasReservedPrefix(std::string_view symbol) {
  for (auto prefix : kReserved) {
    if (symbol.starts_with(prefix)) return true;
  }
  return false;
}

std::string_view AtomTable::prefix(AtomOrigin kind) {
  switch (kind) {
    case AtomOrigin::User: return "";
    case AtomOrigin::NotOnce: return "not1_";
    case AtomOrigin::NotTwice: return "not2_";
    case AtomOrigin::K: return "k_";
    case AtomOrigin::Kp: return "kp_";
    case AtomOrigin::KpNotAtom: return "kpn_";
    case AtomOrigin::KpNotRule: return "kpn_r";
  }
  return "";
}

AtomId AtomTable::insertLocked(std::string symbol, AtomOrigin origin, std::optional<AtomId> base,
                               std::size_t ruleNumber) {
  AtomId id{static_cast<std::uint32_t>(atoms_.size())};
  bySymbol_.emplace(symbol, id);
  atoms_.push_back(AtomInfo{std::move(symbol), origin, base, ruleNumber});
  return id;
}

const AtomInfo& AtomTable::infoLocked(AtomId id) const {
  if (id.value >= atoms_.size()) throw Error(Errc::InvalidArgument, "unknown atom id " + std::to_string(id.value));
  return atoms_[id.value];
}

AtomId AtomTable::intern(std::string_view symbol) {
  if (hasReservedPrefix(symbol)) {
    throw Error(Errc::ReservedPrefix, "atom '" + std::string(symbol) + "' uses a reserved prefix");
  }
  return internVerbatim(symbol);
}

AtomId AtomTable::internVerbatim(std::string_view symbol) {
  std::lock_guard lock(mutex_);
  if (auto it = bySymbol_.find(std::string(symbol)); it != bySymbol_.end()) return it->second;
  return insertLocked(std::string(symbol), AtomOrigin::User, std::nullopt, 0);
}

AtomId AtomTable::derive(AtomOrigin kind, AtomId base) {
  if (kind == AtomOrigin::User || kind == AtomOrigin::KpNotRule) {
    throw Error(Errc::InvalidArgument, "derive() needs an atom-derived origin");
  }
  std::lock_guard lock(mutex_);
  std::string symbol = std::string(prefix(kind)) + infoLocked(base).symbol;
  if (auto it = bySymbol_.find(symbol); it != bySymbol_.end()) {
    const AtomInfo& existing = atoms_[it->second.value];
    if (existing.origin != kind || existing.base != base) {
      throw Error(Errc::Collision, "derived atom '" + symbol + "' clashes with an existing atom");
    }
    return it->second;
  }
  return insertLocked(std::move(symbol), kind, base, 0);
}

AtomId AtomTable::deriveRule(std::size_t ruleNumber) {
  std::lock_guard lock(mutex_);
  std::string symbol = std::string(prefix(AtomOrigin::KpNotRule)) + std::to_string(ruleNumber);
  if (auto it = bySymbol_.find(symbol); it != bySymbol_.end()) {
    const AtomInfo& existing = atoms_[it->second.value];
    if (existing.origin != AtomOrigin::KpNotRule || existing.ruleNumber != ruleNumber) {
      throw Error(Errc::Collision, "derived atom '" + symbol + "' clashes with an existing atom");
    }
    return it->second;
  }
  return insertLocked(std::move(symbol), AtomOrigin::KpNotRule, std::nullopt, ruleNumber);
}

std::optional<AtomId> AtomTable::find(std::string_view symbol) const {
  std::lock_guard lock(mutex_);
  if (auto it = bySymbol_.find(std::string(symbol)); it != bySymbol_.end()) return it->second;
  return std::nullopt;
}

std::optional<AtomId> AtomTable::findDerived(AtomOrigin kind, AtomId base) const {
  std::lock_guard lock(mutex_);
  std::string symbol = std::string(prefix(kind)) + infoLocked(base).symbol;
  auto it = bySymbol_.find(symbol);
  if (it == bySymbol_.end()) return std::nullopt;
  const AtomInfo& existing = atoms_[it->second.value];
  if (existing.origin != kind || existing.base != base) return std::nullopt;
  return it->second;
}

const std::string& AtomTable::symbol(AtomId id) const {
  std::lock_guard lock(mutex_);
  return infoLocked(id).symbol;
}

AtomOrigin AtomTable::origin(AtomId id) const {
  std::lock_guard lock(mutex_);
  return infoLocked(id).origin;
}

std::optional<AtomId> AtomTable::base(AtomId id) const {
  std::lock_guard lock(mutex_);
  return infoLocked(id).base;
}

AtomId AtomTable::root(AtomId id) const {
  std::lock_guard lock(mutex_);
  while (infoLocked(id).base) id = *infoLocked(id).base;
  return id;
}

std::size_t AtomTable::size() const {
  std::lock_guard lock(mutex_);
  return atoms_.size();
}

AtomId freshDerivedAtom(AtomTable& table, AtomOrigin kind, AtomId base) { return table.derive(kind, base); }

AtomId freshDerivedAtom(AtomTable& table, std::size_t ruleNumber) { return table.deriveRule(ruleNumber); }

}  // namespace elp
