#include "charnlg/mr.hpp"

#include <tuple>

#include "charnlg/errors.hpp"
#include "charnlg/text.hpp"

namespace charnlg {

namespace {

constexpr std::string_view kSlotKeys[kSlotCount] = {
    "name", "eatType", "food", "priceRange", "customer rating", "area", "familyFriendly", "near",
};

}  // namespace

std::string_view slot_key(SlotType type) { return kSlotKeys[static_cast<int>(type)]; }

std::optional<SlotType> slot_from_key(std::string_view key) {
  for (int i = 0; i < kSlotCount; ++i) {
    if (key == kSlotKeys[i]) return static_cast<SlotType>(i);
  }
  return std::nullopt;
}

const std::array<SlotType, kSlotCount>& canonical_slots() {
  static const std::array<SlotType, kSlotCount> order = {
      SlotType::Name,           SlotType::EatType, SlotType::Food,
      SlotType::PriceRange,     SlotType::CustomerRating, SlotType::Area,
      SlotType::FamilyFriendly, SlotType::Near,
  };
  return order;
}

const std::string& MeaningRepresentation::value(SlotType type) const {
  const auto& slot = values_[static_cast<int>(type)];
  if (!slot) throw MrError(MrError::Kind::MalformedItem, "slot not present: " + std::string(slot_key(type)));
  return *slot;
}

int MeaningRepresentation::size() const {
  int n = 0;
  for (const auto& v : values_) n += v.has_value() ? 1 : 0;
  return n;
}

void MeaningRepresentation::set(SlotType type, std::string value) {
  if (trim(value).empty())
    throw MrError(MrError::Kind::MalformedItem, "empty value for slot " + std::string(slot_key(type)));
  values_[static_cast<int>(type)] = std::move(value);
}

std::vector<std::pair<SlotType, std::string>> MeaningRepresentation::items() const {
  std::vector<std::pair<SlotType, std::string>> out;
  for (SlotType type : canonical_slots()) {
    if (has(type)) out.emplace_back(type, value(type));
  }
  return out;
}

MeaningRepresentation parse_mr(std::string_view text) {
  const std::string trimmed = trim(text);
  if (trimmed.empty()) throw MrError(MrError::Kind::EmptyInput, "empty meaning representation");

  MeaningRepresentation mr;
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    const std::size_t open = trimmed.find('[', pos);
    if (open == std::string::npos)
      throw MrError(MrError::Kind::MalformedItem, "missing '[' in item: " + trimmed.substr(pos));
    const std::size_t close = trimmed.find(']', open + 1);
    if (close == std::string::npos)
      throw MrError(MrError::Kind::MalformedItem, "missing ']' in item: " + trimmed.substr(pos));

    const std::string key = trim(trimmed.substr(pos, open - pos));
    const std::string value = trimmed.substr(open + 1, close - open - 1);
    if (value.find('[') != std::string::npos)
      throw MrError(MrError::Kind::MalformedItem, "nested '[' in value of " + key);

    const auto type = slot_from_key(key);
    if (!type) throw MrError(MrError::Kind::UnknownSlot, "unknown slot key: \"" + key + "\"");
    if (mr.has(*type)) throw MrError(MrError::Kind::DuplicateSlot, "duplicate slot: " + key);
    if (trim(value).empty())
      throw MrError(MrError::Kind::MalformedItem, "empty value for slot " + key);
    mr.set(*type, value);

    pos = close + 1;
    while (pos < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[pos]))) ++pos;
    if (pos == trimmed.size()) break;
    if (trimmed[pos] != ',')
      throw MrError(MrError::Kind::MalformedItem,
                    "expected ',' between items near: " + trimmed.substr(pos, 16));
    ++pos;
    while (pos < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[pos]))) ++pos;
    if (pos == trimmed.size())
      throw MrError(MrError::Kind::MalformedItem, "trailing ',' without an item");
  }
  return mr;
}

std::string serialize_mr(const MeaningRepresentation& mr) {
  std::string out;
  bool first = true;
  for (const auto& [type, value] : mr.items()) {
    if (!first) out += ", ";
    first = false;
    out += slot_key(type);
    out += '[';
    out += value;
    out += ']';
  }
  return out;
}

void SlotCatalog::add(SlotType type, const std::string& value) {
  ++counts_[static_cast<int>(type)][value];
  ++totals_[static_cast<int>(type)];
}

bool SlotCatalog::has(SlotType type) const { return totals_[static_cast<int>(type)] > 0; }

const std::map<std::string, long>& SlotCatalog::counts(SlotType type) const {
  return counts_[static_cast<int>(type)];
}

long SlotCatalog::total(SlotType type) const { return totals_[static_cast<int>(type)]; }

double SlotCatalog::probability(SlotType type, const std::string& value) const {
  const long total = totals_[static_cast<int>(type)];
  if (total == 0) return 0.0;
  const auto& per_slot = counts_[static_cast<int>(type)];
  const auto it = per_slot.find(value);
  return it == per_slot.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

SlotCatalog build_slot_catalog(const std::vector<std::pair<MeaningRepresentation, std::string>>& pairs) {
  if (pairs.empty()) throw MrError(MrError::Kind::EmptyCorpus, "cannot build a slot catalog from an empty corpus");
  SlotCatalog catalog;
  for (const auto& [mr, rf] : pairs) {
    for (const auto& [type, value] : mr.items()) catalog.add(type, value);
  }
  return catalog;
}

SlotDiff diff_slots(const MeaningRepresentation& a, const MeaningRepresentation& b) {
  SlotDiff diff;
  for (SlotType type : canonical_slots()) {
    const bool in_a = a.has(type);
    const bool in_b = b.has(type);
    if (in_a && in_b) {
      if (a.value(type) != b.value(type)) diff.changed.emplace_back(type, a.value(type), b.value(type));
    } else if (in_b) {
      diff.added.emplace_back(type, b.value(type));
    } else if (in_a) {
      diff.removed.emplace_back(type, a.value(type));
    }
  }
  return diff;
}

}  // namespace charnlg
