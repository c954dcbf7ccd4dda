#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace elp {

/// Where an atom comes from. Everything except User is introduced by a
/// program transformation and carries the atom (or rule number) it was
/// derived from.
enum class AtomOrigin : std::uint8_t {
  User,
  NotOnce,    // not1_a, stands for "not a" under K
  NotTwice,   // not2_a, stands for "not not a" under K
  K,          // k_a, the guess for "K a"
  Kp,         // kp_a, "K a" propagated
  KpNotAtom,  // kpn_a, "K not a" propagated
  KpNotRule,  // kpn_rI, body of rule I false in every interpretation
};

struct AtomId {
  std::uint32_t value{};

  friend auto operator<=>(AtomId, AtomId) = default;
};

struct AtomInfo {
  std::string symbol;
  AtomOrigin origin = AtomOrigin::User;
  std::optional<AtomId> base;
  std::size_t ruleNumber = 0;
};

/// Append-only interning table shared by a program and everything derived
/// from it. Equal symbols map to equal ids. All members are thread-safe.
class AtomTable {
 public:
  AtomTable() = default;
  AtomTable(const AtomTable&) = delete;
  AtomTable& operator=(const AtomTable&) = delete;

  /// Interns a user atom. Throws Errc::ReservedPrefix for symbols that start
  /// with a prefix reserved for derived atoms.
  AtomId intern(std::string_view symbol);
  /// Interns without the reserved-prefix check (the atom is recorded as a
  /// user atom). Used when reading back emitted companion programs.
  AtomId internVerbatim(std::string_view symbol);

  /// Returns the derived atom for (kind, base), creating it on first use.
  /// Throws Errc::Collision if the symbol is already taken by an atom with a
  /// different origin.
  AtomId derive(AtomOrigin kind, AtomId base);
  AtomId deriveRule(std::size_t ruleNumber);

  std::optional<AtomId> find(std::string_view symbol) const;
  /// Looks up a derived atom without creating it.
  std::optional<AtomId> findDerived(AtomOrigin kind, AtomId base) const;

  const std::string& symbol(AtomId id) const;
  AtomOrigin origin(AtomId id) const;
  std::optional<AtomId> base(AtomId id) const;
  /// Follows base links down to the originating user atom.
  AtomId root(AtomId id) const;
  std::size_t size() const;

  static bool hasReservedPrefix(std::string_view symbol);
  static std::string_view prefix(AtomOrigin kind);

 private:
  AtomId insertLocked(std::string symbol, AtomOrigin origin, std::optional<AtomId> base,
                      std::size_t ruleNumber);
  const AtomInfo& infoLocked(AtomId id) const;

  mutable std::mutex mutex_;
  std::deque<AtomInfo> atoms_;
  std::unordered_map<std::string, AtomId> bySymbol_;
};

/// "k_" + base symbol and friends; idempotent.
AtomId freshDerivedAtom(AtomTable& table, AtomOrigin kind, AtomId base);
/// "kpn_r" + rule number.
AtomId freshDerivedAtom(AtomTable& table, std::size_t ruleNumber);

}  // namespace elp

template <>
struct std::hash<elp::AtomId> {
  std::size_t operator()(elp::AtomId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
