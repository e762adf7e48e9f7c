#pragma once

#include <stdexcept>
#include <string>

namespace twinreduce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph6, edge lists, partitions, traces, cycles).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violated an operation's precondition (vertex out of range,
/// self-loop, u == v, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two partitions, or a graph and a partition, live on different ground sets.
class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle was asked to run on an input above its hard size cap.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Group enumeration failures: cap exceeded, degree mismatch, bad generator.
class GroupError : public Error {
 public:
  using Error::Error;
};

}  // namespace twinreduce
