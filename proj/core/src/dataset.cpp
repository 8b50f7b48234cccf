#include "charnlg/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "charnlg/errors.hpp"
#include "charnlg/text.hpp"

namespace charnlg {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError(DatasetError::Kind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

/// Lossless double <-> text via C hex floats.
std::string double_to_hex(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double hex_to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw DatasetError(DatasetError::Kind::CorruptCheckpoint, "bad float literal: " + s);
  return v;
}

json config_to_json(const ModelConfig& c) {
  return json{{"vocab_size", c.vocab_size},
              {"embed_dim", c.embed_dim},
              {"hidden_dim", c.hidden_dim},
              {"encoder_layers", c.encoder_layers},
              {"decoder_layers", c.decoder_layers},
              {"cell", c.cell},
              {"attention", c.attention},
              {"precision", c.precision},
              {"max_decode_len", c.max_decode_len}};
}

ModelConfig config_from_json(const json& j) {
  ModelConfig c;
  c.vocab_size = j.at("vocab_size").get<int>();
  c.embed_dim = j.at("embed_dim").get<int>();
  c.hidden_dim = j.at("hidden_dim").get<int>();
  c.encoder_layers = j.at("encoder_layers").get<int>();
  c.decoder_layers = j.at("decoder_layers").get<int>();
  c.cell = j.at("cell").get<std::string>();
  c.attention = j.at("attention").get<std::string>();
  c.precision = j.at("precision").get<std::string>();
  c.max_decode_len = j.at("max_decode_len").get<int>();
  return c;
}

}  // namespace

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
  const std::string data = read_file(path);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  long line = 1;
  long record_line = 1;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // Skip records that are entirely empty (blank lines between rows).
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(row);
    row.clear();
    record_line = line;
  };

  std::size_t i = 0;
  while (i < data.size()) {
    const char c = data[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"') {
      if (field_started && !field.empty())
        throw DatasetError(DatasetError::Kind::RowParse, "stray '\"' inside unquoted field", record_line);
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r') {
      // swallowed; \r\n handled at \n
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (in_quotes) throw DatasetError(DatasetError::Kind::RowParse, "unterminated quoted field", record_line);
  if (field_started || !row.empty()) end_record();
  return rows;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const std::string& f = fields[i];
    if (needs_quoting(f)) {
      out << '"';
      for (char c : f) {
        if (c == '"') out << "\"\"";
        else out << c;
      }
      out << '"';
    } else {
      out << f;
    }
  }
  out << '\n';
}

std::vector<CorpusPair> load_csv(const std::filesystem::path& path, const std::string& mr_column,
                                 const std::string& ref_column) {
  const auto rows = read_csv(path);
  if (rows.empty())
    throw DatasetError(DatasetError::Kind::MissingHeader, "empty CSV file: " + path.string());

  const auto& header = rows.front();
  const auto mr_it = std::find(header.begin(), header.end(), mr_column);
  const auto ref_it = std::find(header.begin(), header.end(), ref_column);
  if (mr_it == header.end() || ref_it == header.end())
    throw DatasetError(DatasetError::Kind::MissingHeader,
                       "header must contain columns '" + mr_column + "' and '" + ref_column + "'");
  const std::size_t mr_idx = static_cast<std::size_t>(mr_it - header.begin());
  const std::size_t ref_idx = static_cast<std::size_t>(ref_it - header.begin());

  std::vector<CorpusPair> pairs;
  pairs.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const long line = static_cast<long>(r + 1);  // header-relative, good enough for flat files
    const auto& row = rows[r];
    if (row.size() != header.size())
      throw DatasetError(DatasetError::Kind::RowParse,
                         "row has " + std::to_string(row.size()) + " fields, header has " +
                             std::to_string(header.size()),
                         line);
    CorpusPair pair;
    pair.mr_text = row[mr_idx];
    pair.rf = row[ref_idx];
    if (pair.rf.empty())
      throw DatasetError(DatasetError::Kind::RowParse, "empty reference utterance", line);
    try {
      pair.mr = parse_mr(pair.mr_text);
    } catch (const MrError& e) {
      throw DatasetError(DatasetError::Kind::MrParse, std::string("bad MR: ") + e.what(), line);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

void save_csv(const std::filesystem::path& path, const std::vector<CorpusPair>& pairs,
              const std::string& mr_column, const std::string& ref_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError(DatasetError::Kind::Io, "cannot write " + path.string());
  write_csv_row(out, {mr_column, ref_column});
  for (const auto& p : pairs) write_csv_row(out, {p.mr_text, p.rf});
}

std::vector<std::pair<std::string, std::vector<std::string>>> group_references(
    const std::vector<CorpusPair>& pairs) {
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  std::map<std::string, std::size_t> index;
  for (const auto& p : pairs) {
    const std::string key = serialize_mr(p.mr);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, groups.size());
      groups.push_back({key, {p.rf}});
    } else {
      groups[it->second].second.push_back(p.rf);
    }
  }
  return groups;
}

Vocabulary Vocabulary::build(const std::vector<std::string>& texts) {
  Vocabulary v;
  for (const auto& text : texts) {
    for (char32_t cp : utf8_decode(text)) {
      if (v.ids_.emplace(cp, kReserved + static_cast<int>(v.chars_.size())).second) {
        v.chars_.push_back(cp);
      }
    }
  }
  return v;
}

Vocabulary Vocabulary::from_chars(const std::vector<char32_t>& chars) {
  Vocabulary v;
  for (char32_t cp : chars) {
    if (!v.ids_.emplace(cp, kReserved + static_cast<int>(v.chars_.size())).second)
      throw DatasetError(DatasetError::Kind::CorruptCheckpoint, "duplicate character in vocabulary");
    v.chars_.push_back(cp);
  }
  return v;
}

int Vocabulary::id_of(char32_t c) const {
  const auto it = ids_.find(c);
  return it == ids_.end() ? kUnk : it->second;
}

char32_t Vocabulary::char_of(int id) const {
  const int idx = id - kReserved;
  if (idx < 0 || idx >= static_cast<int>(chars_.size()))
    throw NeuralError(NeuralError::Kind::IdOutOfRange, "no character for id " + std::to_string(id));
  return chars_[static_cast<std::size_t>(idx)];
}

std::vector<int> Vocabulary::encode(std::string_view text) const {
  std::vector<int> ids;
  for (char32_t cp : utf8_decode(text)) ids.push_back(id_of(cp));
  return ids;
}

std::string Vocabulary::decode(const std::vector<int>& ids) const {
  std::string out;
  for (int id : ids) {
    if (id < kReserved) continue;
    out += utf8_encode(char_of(id));
  }
  return out;
}

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path) {
  json j;
  j["format_version"] = cp.format_version;
  j["config"] = config_to_json(cp.config);
  j["meta"] = cp.meta;
  std::vector<std::uint32_t> chars;
  chars.reserve(cp.vocab.chars().size());
  for (char32_t c : cp.vocab.chars()) chars.push_back(static_cast<std::uint32_t>(c));
  j["vocab"] = chars;
  json tensors = json::object();
  for (const auto& [name, tensor] : cp.tensors) {
    std::size_t count = 1;
    for (auto d : tensor.shape) count *= static_cast<std::size_t>(d);
    if (count != tensor.values.size())
      throw DatasetError(DatasetError::Kind::CorruptCheckpoint,
                         "tensor " + name + " has inconsistent shape before save");
    json values = json::array();
    for (double v : tensor.values) values.push_back(double_to_hex(v));
    tensors[name] = json{{"shape", tensor.shape}, {"values", std::move(values)}};
  }
  j["tensors"] = std::move(tensors);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError(DatasetError::Kind::Io, "cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw DatasetError(DatasetError::Kind::Io, "write failed: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  const std::string data = read_file(path);
  json j;
  try {
    j = json::parse(data);
  } catch (const json::exception& e) {
    throw DatasetError(DatasetError::Kind::CorruptCheckpoint,
                       "checkpoint is not valid JSON: " + std::string(e.what()));
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kCheckpointVersion)
      throw DatasetError(DatasetError::Kind::VersionMismatch,
                         "unsupported checkpoint version " + std::to_string(version));
    Checkpoint cp;
    cp.format_version = version;
    cp.config = config_from_json(j.at("config"));
    cp.meta = j.at("meta").get<std::map<std::string, std::string>>();
    std::vector<char32_t> chars;
    for (const auto& c : j.at("vocab")) chars.push_back(static_cast<char32_t>(c.get<std::uint32_t>()));
    cp.vocab = Vocabulary::from_chars(chars);
    for (const auto& [name, tj] : j.at("tensors").items()) {
      Tensor t;
      t.shape = tj.at("shape").get<std::vector<std::int64_t>>();
      std::size_t count = 1;
      for (auto d : t.shape) {
        if (d < 0) throw DatasetError(DatasetError::Kind::CorruptCheckpoint, "negative dim in " + name);
        count *= static_cast<std::size_t>(d);
      }
      for (const auto& v : tj.at("values")) t.values.push_back(hex_to_double(v.get<std::string>()));
      if (t.values.size() != count)
        throw DatasetError(DatasetError::Kind::CorruptCheckpoint,
                           "tensor " + name + ": " + std::to_string(t.values.size()) +
                               " values for shape product " + std::to_string(count));
      cp.tensors.emplace(name, std::move(t));
    }
    return cp;
  } catch (const DatasetError&) {
    throw;
  } catch (const json::exception& e) {
    throw DatasetError(DatasetError::Kind::CorruptCheckpoint,
                       "checkpoint structure: " + std::string(e.what()));
  }
}

}  // namespace charnlg
