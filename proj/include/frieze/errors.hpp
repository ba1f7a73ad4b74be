#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

// Mathematical failures on well-formed input (exit code 1 in the CLI).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that violates an operation's contract (bad lengths, bad shapes).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (exit code 2 in the CLI).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A zero showed up where a chart needs to divide. Row and column are
// frieze lattice coordinates: row r = i - j, column h = i + j.
class ChartBoundaryError : public DomainError {
 public:
  ChartBoundaryError(long row, long col, const std::string& what)
      : DomainError(what + " at row " + std::to_string(row) + ", column " + std::to_string(col)),
        row_(row),
        col_(col) {}
  long row() const { return row_; }
  long col() const { return col_; }

 private:
  long row_;
  long col_;
};

}  // namespace frieze
