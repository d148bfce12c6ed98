#pragma once

#include <stdexcept>
#include <string>

namespace rigorkit {

/// Operation applied outside its mathematical domain (division by an
/// interval containing zero, square root of a negative interval, ...).
/// `certain` distinguishes a violation that holds for every point of the
/// argument intervals from one that interval overestimation cannot rule
/// out; the latter can be resolved by subdivision.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what, bool certain = false)
      : std::runtime_error(what), certain_(certain) {}

  bool certain() const { return certain_; }

private:
  bool certain_ = false;
};

/// Edge lengths do not certify a nondegenerate Euclidean simplex.
class DegenerateSimplex : public DomainError {
public:
  explicit DegenerateSimplex(const std::string& what) : DomainError(what) {}
};

/// A box coordinate has zero width where positive width is required.
class DegenerateBox : public std::invalid_argument {
public:
  explicit DegenerateBox(const std::string& what)
      : std::invalid_argument(what) {}
};

class ArityMismatch : public std::invalid_argument {
public:
  explicit ArityMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An internal construction produced a structurally impossible value.
/// Signals an implementation bug, not a data condition.
class ConstructionError : public std::logic_error {
public:
  explicit ConstructionError(const std::string& what)
      : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// External solver interaction failed (malformed output, nonzero exit).
/// Never unsound: a bad certificate simply fails verification.
class BridgeError : public std::runtime_error {
public:
  explicit BridgeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rigorkit
