#pragma once

#include <stdexcept>
#include <string>

namespace blockscope {

/// Malformed input: a sequence that is not a partition, a bad modulus, a
/// literal that does not parse.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The object lies outside the ribbon/belt scope (repeated residues or a
/// component that is not a ribbon).
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search that a proved statement guarantees to succeed came back empty.
/// `report()` holds a JSON document with the offending partitions, shapes and
/// distances.
class TheoremCounterexample : public std::runtime_error {
 public:
  TheoremCounterexample(const std::string& what, std::string report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const std::string& report() const noexcept { return report_; }

 private:
  std::string report_;
};

}  // namespace blockscope
