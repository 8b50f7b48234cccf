#pragma once

#include <stdexcept>
#include <string>

namespace charnlg {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or command line usage (CLI exit code 1).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (CLI exit code 2).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure inside a kernel, e.g. a non-finite loss (CLI exit code 3).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Meaning-representation parsing and catalog errors.
class MrError : public DataError {
 public:
  enum class Kind { EmptyInput, UnknownSlot, MalformedItem, DuplicateSlot, EmptyCorpus };

  MrError(Kind kind, const std::string& message) : DataError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// CSV and checkpoint I/O errors. `line` is 1-based where applicable, 0 otherwise.
class DatasetError : public DataError {
 public:
  enum class Kind { MissingHeader, RowParse, MrParse, VersionMismatch, CorruptCheckpoint, Io };

  DatasetError(Kind kind, const std::string& message, long line = 0)
      : DataError(message), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  long line() const { return line_; }

 private:
  Kind kind_;
  long line_;
};

class AugmentError : public DataError {
 public:
  enum class Kind { CatalogMissingSlot, TooFewSlots };

  AugmentError(Kind kind, const std::string& message) : DataError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class AdequacyError : public DataError {
 public:
  enum class Kind { LexiconMissingValue, DegenerateLabels };

  AdequacyError(Kind kind, const std::string& message) : DataError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class RerankError : public DataError {
 public:
  enum class Kind { EmptyNBest };

  RerankError(Kind kind, const std::string& message) : DataError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class EvalError : public DataError {
 public:
  enum class Kind { LengthMismatch, EmptyReferences };

  EvalError(Kind kind, const std::string& message) : DataError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Neural kernel failures (CLI exit code 3).
class NeuralError : public NumericError {
 public:
  enum class Kind { IdOutOfRange, NonFiniteLoss };

  NeuralError(Kind kind, const std::string& message) : NumericError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace charnlg
