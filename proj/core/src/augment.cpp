#include "charnlg/augment.hpp"

#include <fstream>

#include "charnlg/errors.hpp"
#include "charnlg/text.hpp"

namespace charnlg {

std::string sample_value(const SlotCatalog& catalog, SlotType type, Rng& rng) {
  if (!catalog.has(type))
    throw AugmentError(AugmentError::Kind::CatalogMissingSlot,
                       "catalog has no values for slot " + std::string(slot_key(type)));
  const auto& counts = catalog.counts(type);
  const double total = static_cast<double>(catalog.total(type));
  const double u = rng.uniform01();
  double cum = 0.0;
  for (const auto& [value, count] : counts) {
    cum += static_cast<double>(count) / total;
    if (u < cum) return value;
  }
  return counts.rbegin()->first;  // u landed on accumulated rounding slack
}

std::vector<Triplet> make_omission_dataset(const std::vector<CorpusPair>& pairs,
                                           const SlotCatalog& catalog, const AugmentConfig& cfg,
                                           AugmentStats* stats) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    Rng rng(derive_seed(cfg.seed, i));
    out.push_back(Triplet{pair.mr, pair.rf, 1});
    if (stats) ++stats->positives;
    for (SlotType type : canonical_slots()) {
      if (type == SlotType::Name || pair.mr.has(type)) continue;
      const std::string value = sample_value(catalog, type, rng);
      MeaningRepresentation edited = pair.mr;
      edited.set(type, value);
      out.push_back(Triplet{std::move(edited), pair.rf, 0});
      if (stats) {
        ++stats->negatives;
        if (contains_ci(pair.rf, value)) ++stats->value_collisions;
      }
    }
  }
  return out;
}

std::vector<Triplet> make_addition_dataset(const std::vector<CorpusPair>& pairs,
                                           const AugmentConfig& cfg) {
  (void)cfg;  // removal needs no sampling; kept for interface symmetry
  std::vector<Triplet> out;
  for (const auto& pair : pairs) {
    int removable = 0;
    for (SlotType type : canonical_slots()) {
      if (type != SlotType::Name && pair.mr.has(type)) ++removable;
    }
    if (removable == 0)
      throw AugmentError(AugmentError::Kind::TooFewSlots,
                         "no removable slot in MR: " + serialize_mr(pair.mr));
    out.push_back(Triplet{pair.mr, pair.rf, 1});
    for (SlotType type : canonical_slots()) {
      if (type == SlotType::Name || !pair.mr.has(type)) continue;
      MeaningRepresentation edited = pair.mr;
      edited.erase(type);
      out.push_back(Triplet{std::move(edited), pair.rf, 0});
    }
  }
  return out;
}

std::vector<Triplet> balance(const std::vector<Triplet>& triplets) {
  std::vector<Triplet> out;
  std::size_t i = 0;
  while (i < triplets.size()) {
    if (triplets[i].label != 1) {  // orphan negatives pass through untouched
      out.push_back(triplets[i]);
      ++i;
      continue;
    }
    const Triplet& positive = triplets[i];
    std::size_t j = i + 1;
    while (j < triplets.size() && triplets[j].label == 0) ++j;
    const std::size_t negatives = j - (i + 1);
    const std::size_t copies = negatives == 0 ? 1 : negatives;
    for (std::size_t k = 0; k < copies; ++k) out.push_back(positive);
    for (std::size_t k = i + 1; k < j; ++k) out.push_back(triplets[k]);
    i = j;
  }
  return out;
}

void save_triplets_csv(const std::filesystem::path& path, const std::vector<Triplet>& triplets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError(DatasetError::Kind::Io, "cannot write " + path.string());
  write_csv_row(out, {"mr", "ref", "label"});
  for (const auto& t : triplets)
    write_csv_row(out, {serialize_mr(t.mr), t.rf, std::to_string(t.label)});
}

std::vector<Triplet> load_triplets_csv(const std::filesystem::path& path) {
  const auto rows = read_csv(path);
  if (rows.empty())
    throw DatasetError(DatasetError::Kind::MissingHeader, "empty triplet CSV: " + path.string());
  const auto& header = rows.front();
  if (header != std::vector<std::string>{"mr", "ref", "label"})
    throw DatasetError(DatasetError::Kind::MissingHeader, "triplet CSV header must be mr,ref,label");
  std::vector<Triplet> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const long line = static_cast<long>(r + 1);
    if (rows[r].size() != 3)
      throw DatasetError(DatasetError::Kind::RowParse, "expected 3 fields", line);
    Triplet t;
    try {
      t.mr = parse_mr(rows[r][0]);
    } catch (const MrError& e) {
      throw DatasetError(DatasetError::Kind::MrParse, std::string("bad MR: ") + e.what(), line);
    }
    t.rf = rows[r][1];
    if (rows[r][2] == "0") t.label = 0;
    else if (rows[r][2] == "1") t.label = 1;
    else throw DatasetError(DatasetError::Kind::RowParse, "label must be 0 or 1", line);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace charnlg
