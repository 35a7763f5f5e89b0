#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotARoot : Error {
  explicit NotARoot(const std::string& what) : Error(what) {}
};

struct SameLine : Error {
  explicit SameLine(const std::string& what) : Error(what) {}
};

struct NotSkew : Error {
  explicit NotSkew(const std::string& what) : Error(what) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& what) : Error(what) {}
};

struct NotEmbeddable : Error {
  explicit NotEmbeddable(const std::string& what) : Error(what) {}
};

struct RankTooLarge : Error {
  explicit RankTooLarge(const std::string& what) : Error(what) {}
};

struct NotSimpleSystem : Error {
  explicit NotSimpleSystem(const std::string& what) : Error(what) {}
};

struct NotAnOrbit : Error {
  explicit NotAnOrbit(const std::string& what) : Error(what) {}
};

struct ConfigParseError : Error {
  explicit ConfigParseError(const std::string& what) : Error(what) {}
};

// Conditions that cannot occur unless the library itself is broken
// (unrecognized Dynkin diagram, failed isometry reconstruction, ...).
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace atlas
