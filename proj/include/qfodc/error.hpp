#pragma once

#include <stdexcept>
#include <string>

namespace qfodc {

// Base error for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Requested operation is meaningful but not provided for this group family
// (e.g. a PBW normal form for the orthogonal series).
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(what) {}
};

}  // namespace qfodc
