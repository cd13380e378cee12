#ifndef TRISYS_ERROR_HPP
#define TRISYS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trisys {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing rationals with GF(p), or two different moduli.
struct KindMismatch : Error {
  explicit KindMismatch(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// A documented precondition failed; `witness` names the offending input.
struct PreconditionError : Error {
  std::string witness;
  PreconditionError(const std::string& msg, std::string w)
      : Error(msg + " [witness: " + w + "]"), witness(std::move(w)) {}
};

// DSL front-end errors carry a location and a category.
struct DslError : Error {
  enum class Code { Syntax, Multilinearity, Subscript, MixedArity, MixedRegime };
  Code code;
  int line, col;
  DslError(Code c, int ln, int cl, const std::string& msg)
      : Error("line " + std::to_string(ln) + ", col " + std::to_string(cl) + ": " + msg),
        code(c), line(ln), col(cl) {}
};

}  // namespace trisys

#endif
