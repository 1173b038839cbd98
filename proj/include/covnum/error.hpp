#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Enumeration of a group was requested above the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, unsigned long long needed, unsigned long long cap)
      : Error(std::move(what)), needed_(needed), cap_(cap) {}
  unsigned long long needed() const { return needed_; }
  unsigned long long cap() const { return cap_; }

 private:
  unsigned long long needed_;
  unsigned long long cap_;
};

/// A lattice / subgroup budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IngestInvalid : public Error {
 public:
  using Error::Error;
};

class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

class NoSupplement : public Error {
 public:
  using Error::Error;
};

class NotACover : public Error {
 public:
  using Error::Error;
};

/// Some element class meets no maximal subgroup class.
class Unbounded : public Error {
 public:
  using Error::Error;
};

/// Some universe element lies in no column.
class Infeasible : public Error {
 public:
  Infeasible(std::string what, std::size_t witness)
      : Error(std::move(what)), witness_(witness) {}
  std::size_t witness() const { return witness_; }

 private:
  std::size_t witness_;
};

/// Cyclic groups have infinite covering number.
class CyclicGroup : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class Undecided : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace covnum
