#ifndef BTRES_ERRORS_HPP
#define BTRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace btres {

// Process exit codes, shared between the library error classes and the CLI.
enum class errc : int {
  ok = 0,
  parse = 2,
  validation = 3,
  no_positive_grading = 4,
  verification = 5,
};

class Error : public std::runtime_error {
public:
  Error(errc code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}

  errc code() const { return code_; }
  // Stable machine-readable tag, e.g. "RankDeficient", "NotAComplex".
  const std::string& kind() const { return kind_; }

private:
  errc code_;
  std::string kind_;
};

struct ParseError : Error {
  ParseError(const std::string& what) : Error(errc::parse, "ParseError", what) {}
};

struct ValidationError : Error {
  ValidationError(std::string kind, const std::string& what)
      : Error(errc::validation, std::move(kind), what) {}
};

struct NoPositiveGradingError : Error {
  NoPositiveGradingError(const std::string& what)
      : Error(errc::no_positive_grading, "NoPositiveGrading", what) {}
};

struct VerificationError : Error {
  VerificationError(std::string kind, const std::string& what)
      : Error(errc::verification, std::move(kind), what) {}
};

} // namespace btres

#endif
