#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swcalc {

// Base class for every error the library throws on bad input or exhausted
// resources. Internal invariant violations use InternalError instead.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (non-coprime pair, n < 2, r < 1, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A surgery asked for a fiber, node or sphere the manifold no longer has.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// Malformed mapping-class-group word text. Carries the offending position.
class WordParseError : public Error {
public:
  WordParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Index or window outside a word.
class RangeError : public Error {
public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

// A rewriting move whose window does not match the required pattern.
class RewriteError : public Error {
public:
  explicit RewriteError(const std::string& what) : Error(what) {}
};

// A word whose block structure is not a recognizable fiber decomposition.
class UnclassifiableError : public Error {
public:
  explicit UnclassifiableError(const std::string& what) : Error(what) {}
};

// A broken internal invariant; always a bug, never a caller mistake.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace swcalc
