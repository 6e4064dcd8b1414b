#pragma once

#include <stdexcept>
#include <string>

namespace csx {

enum class ErrorKind {
  InvalidArgument,  // index out of range, size mismatch, malformed input
  NotSimplicial,    // a map or table violates the simplicial identities
  Overflow,         // fixed-width integer arithmetic overflowed
  ResourceCap,      // requested truncation exceeds the configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace csx
