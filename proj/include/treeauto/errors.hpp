#pragma once

#include <stdexcept>
#include <string>

namespace treeauto {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit before the computation finished.
struct BudgetError : Error {
  using Error::Error;
};

// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed presentation / word / vertex text.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}

  int line;
  int column;
};

}  // namespace treeauto
