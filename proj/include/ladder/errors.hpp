#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladder {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument or violated precondition.
struct ParameterError : Error {
  using Error::Error;
};

// Work refused because it would exceed a configured bound.
struct ResourceError : Error {
  using Error::Error;
};

// Revenue target not reachable within the search bracket.
struct CalibrationError : Error {
  using Error::Error;
};

struct NotFoundError : Error {
  using Error::Error;
};

// State conflict, e.g. gifting a good the giver does not own.
struct ConflictError : Error {
  using Error::Error;
};

// Append failed or the store is not writable; the operation was not applied.
struct PersistenceError : Error {
  using Error::Error;
};

// A ledger file failed validation during replay.
struct CorruptLedgerError : Error {
  CorruptLedgerError(std::size_t line, const std::string& what)
      : Error("ledger line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ladder
