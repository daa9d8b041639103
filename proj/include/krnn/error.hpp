#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace krnn {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ----- Instance parsing -----

class UnsupportedFormat : public Error {
 public:
  UnsupportedFormat(std::string key, std::string value)
      : Error("unsupported " + key + ": " + value),
        key_(std::move(key)),
        value_(std::move(value)) {}
  const std::string& key() const { return key_; }
  const std::string& value() const { return value_; }

 private:
  std::string key_;
  std::string value_;
};

class MalformedFile : public Error {
 public:
  MalformedFile(int line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(int vertex)
      : Error("cost of self loop requested for vertex " +
              std::to_string(vertex)) {}
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(int vertex, int dimension)
      : Error("vertex " + std::to_string(vertex) + " outside [0, " +
              std::to_string(dimension) + ")") {}
};

// ----- Solvers -----

class KOutOfRange : public Error {
 public:
  KOutOfRange(int k, int lo, int hi)
      : Error("k = " + std::to_string(k) + " outside [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "]") {}
};

// Raised when a run would evaluate more starts, or expand more partial
// tours, than its configured limit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t amount, std::uint64_t limit)
      : Error(what + " " + std::to_string(amount) + " exceeds budget " +
              std::to_string(limit)),
        amount_(amount),
        limit_(limit) {}
  std::uint64_t amount() const { return amount_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t amount_;
  std::uint64_t limit_;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::int64_t claimed, std::int64_t recomputed)
      : Error("tour length " + std::to_string(claimed) +
              " does not match recomputed " + std::to_string(recomputed)),
        claimed_(claimed),
        recomputed_(recomputed) {}
  std::int64_t claimed() const { return claimed_; }
  std::int64_t recomputed() const { return recomputed_; }

 private:
  std::int64_t claimed_;
  std::int64_t recomputed_;
};

// ----- Exact oracles -----

class TooLarge : public Error {
 public:
  TooLarge(int n, int cap)
      : Error("instance with " + std::to_string(n) +
              " vertices exceeds exact-solver cap " + std::to_string(cap)) {}
};

// ----- Benchmark harness -----

class NonPositiveOptimum : public Error {
 public:
  explicit NonPositiveOptimum(std::int64_t optimum)
      : Error("optimum must be positive, got " + std::to_string(optimum)) {}
};

class MissingOptimum : public Error {
 public:
  explicit MissingOptimum(const std::string& dataset)
      : Error("no optimum known for dataset " + dataset) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Solver failure annotated with the dataset it happened on.
class SolverError : public Error {
 public:
  SolverError(const std::string& dataset, const std::string& what)
      : Error(dataset + ": " + what) {}
};

}  // namespace krnn
