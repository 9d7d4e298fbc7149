#pragma once

#include <stdexcept>
#include <string>

namespace amr {

// Penman reading errors.
enum class ParseErrc {
  UnbalancedInput,
  DuplicateVariable,
  DanglingReference,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
  ParseErrc code;
};

// Token-sequence errors (delinearization of unrepaired input).
enum class LinErrc {
  Unbalanced,
  EmptySequence,
};

class LinearizeError : public std::runtime_error {
 public:
  LinearizeError(LinErrc c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
  LinErrc code;
};

// Alignment / reference-attention errors.
enum class AlignErrc {
  MalformedAlignment,
  IndexOutOfRange,
  NodeNotInSequence,
  LengthMismatch,
};

class AlignError : public std::runtime_error {
 public:
  AlignError(AlignErrc c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
  AlignErrc code;
};

// Neural model errors.
enum class NnErrc {
  EmptyInput,
  LengthMismatch,
  NonFiniteLoss,
};

class NnError : public std::runtime_error {
 public:
  NnError(NnErrc c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
  NnErrc code;
};

// Smatch errors.
enum class SmatchErrc {
  TooLarge,
  LengthMismatch,
};

class SmatchError : public std::runtime_error {
 public:
  SmatchError(SmatchErrc c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
  SmatchErrc code;
};

// File / format errors raised by the pipeline, carrying a location.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace amr
