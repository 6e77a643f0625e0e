#pragma once

#include <stdexcept>
#include <string>

namespace lognq {

// Error classes map onto CLI exit codes: 1 usage, 2 data, 3 numeric.
enum class ErrorClass { usage = 1, data = 2, numeric = 3 };

class LognqError : public std::runtime_error {
 public:
  LognqError(ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

struct UsageError : LognqError {
  explicit UsageError(const std::string& msg) : LognqError(ErrorClass::usage, msg) {}
};

struct DataError : LognqError {
  explicit DataError(const std::string& msg) : LognqError(ErrorClass::data, msg) {}
};

struct NumericError : LognqError {
  explicit NumericError(const std::string& msg) : LognqError(ErrorClass::numeric, msg) {}
};

// corpus
struct EmptyInputError : DataError {
  explicit EmptyInputError(const std::string& msg) : DataError(msg) {}
};
struct AllDegenerateError : DataError {
  explicit AllDegenerateError(const std::string& msg) : DataError(msg) {}
};
struct DeadEndError : DataError {
  explicit DeadEndError(const std::string& msg) : DataError(msg) {}
};
struct InsufficientGraphError : DataError {
  explicit InsufficientGraphError(const std::string& msg) : DataError(msg) {}
};

// embeddings
struct MalformedLineError : DataError {
  explicit MalformedLineError(const std::string& msg) : DataError(msg) {}
};
struct EmptyFileError : DataError {
  explicit EmptyFileError(const std::string& msg) : DataError(msg) {}
};

// engine / eval
struct ConfigMismatchError : DataError {
  explicit ConfigMismatchError(const std::string& msg) : DataError(msg) {}
};
struct DigestMismatchError : DataError {
  explicit DigestMismatchError(const std::string& msg) : DataError(msg) {}
};
struct NonFiniteLossError : NumericError {
  explicit NonFiniteLossError(const std::string& msg) : NumericError(msg) {}
};
struct DegenerateGateError : NumericError {
  explicit DegenerateGateError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace lognq
