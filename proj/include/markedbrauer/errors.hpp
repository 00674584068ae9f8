#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace markedbrauer {

/// Raised for mathematically invalid requests: arity or parameter mismatch,
/// out-of-range indices, bad superspace dimensions.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Element or word text. `where` names the offending location.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& where, const std::string& cause)
      : DomainError("parse error at " + where + ": " + cause), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class SizeCapExceeded : public DomainError {
 public:
  SizeCapExceeded(std::size_t needed, std::size_t cap)
      : DomainError("size cap exceeded: problem needs " + std::to_string(needed) +
                    " entries, cap is " + std::to_string(cap)),
        needed_(needed), cap_(cap) {}
  std::size_t needed() const { return needed_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t needed_, cap_;
};

}  // namespace markedbrauer
