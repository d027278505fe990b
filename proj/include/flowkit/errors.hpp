#ifndef FLOWKIT_ERRORS_HPP
#define FLOWKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowkit {

// Raised by the smart constructors / signature algebra when two circuits do
// not fit together. Carries enough structure for callers that want more than
// the rendered message.
enum class CompositionErrorKind {
  ArityMismatch,
  PortMismatch,
  InvalidPort,
  InnerShapeError,
};

class CompositionError : public std::runtime_error {
public:
  CompositionError(CompositionErrorKind kind, std::string message, int position = -1)
      : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

  CompositionErrorKind kind() const { return kind_; }
  // zero-based port index for PortMismatch, -1 otherwise
  int position() const { return position_; }

private:
  CompositionErrorKind kind_;
  int position_;
};

enum class StoreErrorKind {
  NotFound,
  DecodeError,
  TypeMismatch,
  AlreadySaved,
  IoError,
  UnsupportedValueType,
  UnknownKind,
};

class StoreError : public std::runtime_error {
public:
  StoreError(StoreErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  StoreErrorKind kind() const { return kind_; }

private:
  StoreErrorKind kind_;
};

enum class WriteErrorKind { DuplicateJob, ArityMismatch, PortMismatch };

class WriteError : public std::runtime_error {
public:
  WriteError(WriteErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  WriteErrorKind kind() const { return kind_; }

private:
  WriteErrorKind kind_;
};

class NetworkStopped : public std::runtime_error {
public:
  NetworkStopped() : std::runtime_error("network is stopped") {}
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Per-job failure. Flows through pipes as ordinary data; one failed job never
// takes the network down or touches any other job.
struct JobError {
  std::string task_name;
  std::string cause;

  bool operator==(const JobError&) const = default;

  std::string to_string() const { return "job failed in " + task_name + ": " + cause; }
};

}  // namespace flowkit

#endif
