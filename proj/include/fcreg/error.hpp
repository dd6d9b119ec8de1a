#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter that is not part of the automaton's or expression's alphabet.
class ForeignLetter : public Error {
 public:
  explicit ForeignLetter(char c)
      : Error(std::string("letter '") + c + "' is not in the alphabet"), letter_(c) {}
  char letter() const noexcept { return letter_; }

 private:
  char letter_;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("operands are over different alphabets") {}
};

/// Syntax errors in any of the textual formats. `position` is a 0-based
/// character offset for expressions and a 1-based line number for DFA files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an exponential procedure would exceed a configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace fcreg
