#pragma once

#include <stdexcept>
#include <string>

namespace rotposet {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit code 1; anything else is a bug or a usage error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input relation contains a directed cycle, so its closure is not a
/// strict order.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// An element label lies outside 0..n-1.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded (enumeration, canonical forms, BFS, storage).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Two structures that must share a domain have different sizes.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A relation handed to a checked constructor is not a strict partial order.
class InvalidPoset : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotDownset : public Error {
 public:
  using Error::Error;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

class NotAnEmbedding : public Error {
 public:
  using Error::Error;
};

}  // namespace rotposet
