#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "charnlg/dataset.hpp"
#include "charnlg/mr.hpp"
#include "charnlg/rng.hpp"

namespace charnlg {

/// (MR, RF, label) instance: 1 = original/adequate pair, 0 = artificial mismatch.
struct Triplet {
  MeaningRepresentation mr;
  std::string rf;
  int label = 1;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

enum class AugmentMode { Omission, Addition };

struct AugmentConfig {
  std::uint64_t seed = 0;
  AugmentMode mode = AugmentMode::Omission;
};

struct AugmentStats {
  /// Sampled added values whose literal already occurs in the RF (not filtered,
  /// only counted).
  long value_collisions = 0;
  long negatives = 0;
  long positives = 0;
};

/// Draws a value for `type` from the catalog's empirical distribution by
/// inverse CDF over the value-ordered counts. Throws AugmentError
/// (CatalogMissingSlot) if the catalog has no entries for the type.
std::string sample_value(const SlotCatalog& catalog, SlotType type, Rng& rng);

/// Omission-detection dataset: per pair, the original with label 1 followed by
/// one label-0 triplet per absent slot type (name is never added), each adding
/// that slot with a catalog-sampled value and keeping the RF unchanged.
/// Deterministic given cfg.seed; per-pair streams derive from (seed, index).
std::vector<Triplet> make_omission_dataset(const std::vector<CorpusPair>& pairs,
                                           const SlotCatalog& catalog, const AugmentConfig& cfg,
                                           AugmentStats* stats = nullptr);

/// Addition-detection dataset: per pair, the original with label 1 followed by
/// one label-0 triplet per removable slot (every present slot except name).
/// Throws AugmentError(TooFewSlots) when nothing can be removed.
std::vector<Triplet> make_addition_dataset(const std::vector<CorpusPair>& pairs,
                                           const AugmentConfig& cfg);

/// Class balancing: within each group (a label-1 triplet and the label-0
/// triplets that follow it), the positive is replicated max(1, #negatives)
/// times. Output keeps group order, positives first.
std::vector<Triplet> balance(const std::vector<Triplet>& triplets);

/// Triplet CSV interchange: columns mr,ref,label with the same MR syntax as
/// the training data.
void save_triplets_csv(const std::filesystem::path& path, const std::vector<Triplet>& triplets);
std::vector<Triplet> load_triplets_csv(const std::filesystem::path& path);

}  // namespace charnlg
