#pragma once

#include <stdexcept>
#include <string>

namespace recon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text.
class Graph6Error : public Error {
 public:
  using Error::Error;
};

/// A multiset of cards that cannot be the deck of any graph, or a malformed
/// deck file.
class DeckError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside the regime where it is defined.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace recon
