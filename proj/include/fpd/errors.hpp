#ifndef FPD_ERRORS_HPP
#define FPD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpd {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidModulus : Error {
  explicit InvalidModulus(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " (at byte " + std::to_string(at) + ")"), offset(at) {}
};

struct UnknownVariable : Error {
  std::string name;
  UnknownVariable(const std::string& var, std::size_t at)
      : Error("unknown variable '" + var + "' (at byte " + std::to_string(at) + ")"),
        name(var) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

struct ExponentOverflow : Error {
  explicit ExponentOverflow(const std::string& what) : Error(what) {}
};

struct NotCommutative : Error {
  explicit NotCommutative(const std::string& what) : Error(what) {}
};

struct NotAssociative : Error {
  explicit NotAssociative(const std::string& what) : Error(what) {}
};

struct BadUnit : Error {
  explicit BadUnit(const std::string& what) : Error(what) {}
};

struct InfiniteDimensional : Error {
  explicit InfiniteDimensional(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
  std::size_t required;
  BudgetExceeded(const std::string& what, std::size_t need)
      : Error(what + " (requires budget >= " + std::to_string(need) + ")"),
        required(need) {}
};

struct EmptySequence : Error {
  explicit EmptySequence(const std::string& what) : Error(what) {}
};

struct BackendMismatch : Error {
  explicit BackendMismatch(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct ResolutionTooLarge : Error {
  explicit ResolutionTooLarge(const std::string& what) : Error(what) {}
};

struct CutoffInconclusive : Error {
  explicit CutoffInconclusive(const std::string& what) : Error(what) {}
};

struct NotMaximal : Error {
  explicit NotMaximal(const std::string& what) : Error(what) {}
};

struct ImproperIdeal : Error {
  explicit ImproperIdeal(const std::string& what) : Error(what) {}
};

struct SchemaError : Error {
  std::string path;
  SchemaError(const std::string& what, const std::string& json_path)
      : Error(what + " (at " + json_path + ")"), path(json_path) {}
};

}  // namespace fpd

#endif  // FPD_ERRORS_HPP
