#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace affb {

enum class Errc {
  DivisionByZero,
  ParseError,
  DimensionMismatch,
  SingularMatrix,
  IndexError,
  NotRootOfUnity,
  NotPureWord,
  ZeroScale,
  LinearPartFirstTrivial,
  InvalidLinearPart,
  NotFiniteCase,
  BoundExceeded,
  ThetaOneZero,
  DegenerateParameters,
  IntegrationFailure,
  PoleTooClose,
  AmbiguousMatch,
  CacheFormat,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Position is a 0-based byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t pos, std::vector<std::string> expected, const std::string& text);
  std::size_t position() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t pos_;
  std::vector<std::string> expected_;
};

}  // namespace affb
