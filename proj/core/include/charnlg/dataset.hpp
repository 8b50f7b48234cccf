#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charnlg/model_config.hpp"
#include "charnlg/mr.hpp"

namespace charnlg {

/// One (MR, reference utterance) training example. `mr_text` keeps the raw
/// source field; `mr` is its parsed, canonicalized form.
struct CorpusPair {
  MeaningRepresentation mr;
  std::string mr_text;
  std::string rf;

  friend bool operator==(const CorpusPair&, const CorpusPair&) = default;
};

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// RFC-4180 reader: quoted fields, embedded commas/newlines, doubled quotes.
/// Returns one row per record. Throws DatasetError(RowParse) with a line number
/// on structural problems.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

/// Writes one RFC-4180 row (quoting only where needed) terminated by '\n'.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Loads (mr, ref) pairs. The header must contain both column names.
std::vector<CorpusPair> load_csv(const std::filesystem::path& path,
                                 const std::string& mr_column = "mr",
                                 const std::string& ref_column = "ref");

void save_csv(const std::filesystem::path& path, const std::vector<CorpusPair>& pairs,
              const std::string& mr_column = "mr", const std::string& ref_column = "ref");

/// Groups references by canonical MR string, preserving first-appearance key
/// order and per-key reference order.
std::vector<std::pair<std::string, std::vector<std::string>>> group_references(
    const std::vector<CorpusPair>& pairs);

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

/// Character vocabulary over Unicode scalar values with four reserved ids.
/// Non-reserved ids are assigned in first-occurrence order over the corpus,
/// so a fixed corpus always produces the same mapping.
class Vocabulary {
 public:
  static constexpr int kPad = 0;
  static constexpr int kBos = 1;
  static constexpr int kEos = 2;
  static constexpr int kUnk = 3;
  static constexpr int kReserved = 4;

  static Vocabulary build(const std::vector<std::string>& texts);
  /// Rebuilds from the id-ordered character list of a checkpoint.
  static Vocabulary from_chars(const std::vector<char32_t>& chars);

  int size() const { return kReserved + static_cast<int>(chars_.size()); }
  /// id for a character; kUnk for characters unseen at build time.
  int id_of(char32_t c) const;
  /// Character for a non-reserved id. Throws NeuralError(IdOutOfRange) otherwise.
  char32_t char_of(int id) const;

  /// UTF-8 text -> ids (no BOS/EOS added; unseen characters map to kUnk).
  std::vector<int> encode(std::string_view text) const;
  /// ids -> UTF-8 text; reserved ids are skipped.
  std::string decode(const std::vector<int>& ids) const;

  /// Non-reserved characters in id order (id = kReserved + index).
  const std::vector<char32_t>& chars() const { return chars_; }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<char32_t> chars_;
  std::map<char32_t, int> ids_;
};

// ---------------------------------------------------------------------------
// Checkpoints
// ---------------------------------------------------------------------------

inline constexpr int kCheckpointVersion = 1;

/// A named parameter tensor: row-major values, value count == product(shape).
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<double> values;

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// Versioned structured-text model snapshot. Values are serialized as C hex
/// floats so a load(save(cp)) round trip is bit-exact while staying diffable.
struct Checkpoint {
  int format_version = kCheckpointVersion;
  ModelConfig config;
  std::map<std::string, std::string> meta;  // e.g. kind=seq2seq|logreg, direction=forward|reverse
  Vocabulary vocab;
  std::map<std::string, Tensor> tensors;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path);

/// Throws DatasetError: Io if unreadable, VersionMismatch on unknown version,
/// CorruptCheckpoint on malformed structure or shape/value-count mismatch.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace charnlg
