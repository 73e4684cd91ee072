#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lexhyp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge list, generator DSL, product spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates a structural requirement
/// (loop, duplicate edge, disconnected, not a tree, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Geodesic enumeration between `from` and `to` produced more paths than allowed.
/// `lower_bound_quarters` carries the best lower bound on delta known when the
/// enumeration gave up (-1 when none is available).
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint32_t from, std::uint32_t to, std::int64_t lower_bound_quarters = -1)
      : Error("geodesic cap exceeded between grid vertices " + std::to_string(from) + " and " +
              std::to_string(to)),
        from_(from),
        to_(to),
        lower_bound_quarters_(lower_bound_quarters) {}

  std::uint32_t from() const noexcept { return from_; }
  std::uint32_t to() const noexcept { return to_; }
  std::int64_t lower_bound_quarters() const noexcept { return lower_bound_quarters_; }

  CapExceeded with_lower_bound(std::int64_t quarters) const { return {from_, to_, quarters}; }

 private:
  std::uint32_t from_;
  std::uint32_t to_;
  std::int64_t lower_bound_quarters_;
};

}  // namespace lexhyp
