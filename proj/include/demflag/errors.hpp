#pragma once

#include <stdexcept>
#include <string>

namespace demflag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flag level below what the module allows (m_to < m_from, m < xi0, m < 1).
class InvalidLevel : public Error {
 public:
  using Error::Error;
};

// A partition tuple that does not fit the (xi0, (xi+1)^a, xi^p, tail) template.
class InvalidShape : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

// Raised when the memo table would grow past DEMFLAG_MEMO_LIMIT.
class MemoLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A recursion step that should have been strictly decreasing was not,
// or two algebraically equal routes disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace demflag
