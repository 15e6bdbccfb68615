#pragma once

#include <stdexcept>
#include <string>

namespace qdepth {

// Malformed input: bad JSON, missing fields, invalid sequence data.
class SchemaError : public std::invalid_argument {
 public:
  explicit SchemaError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input outside an operation's domain (k > d, size caps, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qdepth
