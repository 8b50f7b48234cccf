#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charnlg {

/// The closed 8-slot universe of the restaurant domain, in canonical order.
enum class SlotType : int {
  Name = 0,
  EatType,
  Food,
  PriceRange,
  CustomerRating,
  Area,
  FamilyFriendly,
  Near,
};

inline constexpr int kSlotCount = 8;

/// Slot keys exactly as spelled in the data (note the space in "customer rating").
std::string_view slot_key(SlotType type);

/// Inverse of slot_key; nullopt for keys outside the universe. Matching is byte-exact.
std::optional<SlotType> slot_from_key(std::string_view key);

/// All slot types in canonical order.
const std::array<SlotType, kSlotCount>& canonical_slots();

/// An ordered slot -> value mapping. Iteration follows canonical order restricted
/// to present slots; values are non-empty after trimming.
class MeaningRepresentation {
 public:
  MeaningRepresentation() = default;

  bool has(SlotType type) const { return values_[static_cast<int>(type)].has_value(); }
  const std::string& value(SlotType type) const;
  int size() const;
  bool empty() const { return size() == 0; }

  /// Sets or replaces a slot value. Throws MrError(MalformedItem) if the value
  /// trims to empty.
  void set(SlotType type, std::string value);
  void erase(SlotType type) { values_[static_cast<int>(type)].reset(); }

  /// Present (slot, value) items in canonical order.
  std::vector<std::pair<SlotType, std::string>> items() const;

  friend bool operator==(const MeaningRepresentation&, const MeaningRepresentation&) = default;

 private:
  std::array<std::optional<std::string>, kSlotCount> values_;
};

/// Parses `key[value]` items joined by commas. Values may contain any character
/// except brackets; items are split on `]` + `,` boundaries so commas inside
/// values survive. Whitespace around items is tolerated.
MeaningRepresentation parse_mr(std::string_view text);

/// Canonical serialization: `key[value]` joined by ", " in canonical order.
/// parse_mr(serialize_mr(mr)) == mr.
std::string serialize_mr(const MeaningRepresentation& mr);

/// Empirical value distribution per slot type over a corpus.
class SlotCatalog {
 public:
  void add(SlotType type, const std::string& value);

  bool has(SlotType type) const;
  /// Value -> count, ordered by value for deterministic iteration.
  const std::map<std::string, long>& counts(SlotType type) const;
  long total(SlotType type) const;
  /// count / total for the slot type; 0 for unseen values.
  double probability(SlotType type, const std::string& value) const;

 private:
  std::array<std::map<std::string, long>, kSlotCount> counts_;
  std::array<long, kSlotCount> totals_ = {};
};

/// Counts each (slot, value) occurrence across the corpus MRs.
/// Throws MrError(EmptyCorpus) on an empty corpus.
SlotCatalog build_slot_catalog(const std::vector<std::pair<MeaningRepresentation, std::string>>& pairs);

struct SlotDiff {
  std::vector<std::pair<SlotType, std::string>> added;
  std::vector<std::pair<SlotType, std::string>> removed;
  std::vector<std::tuple<SlotType, std::string, std::string>> changed;  // (type, old, new)

  bool empty() const { return added.empty() && removed.empty() && changed.empty(); }
};

/// Set difference by slot type: in b only -> added, in a only -> removed,
/// value mismatch on shared types -> changed.
SlotDiff diff_slots(const MeaningRepresentation& a, const MeaningRepresentation& b);

}  // namespace charnlg
