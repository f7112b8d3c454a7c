#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace topress {

/// Node, element and DOF indices. 32-bit to bound the memory of the
/// incidence tables and sparse patterns on laptop-sized meshes.
using Index = std::int32_t;

using Vector = Eigen::VectorXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Linear solve failed (singular or indefinite system).
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Configuration could not be turned into a valid RunConfig. `field()` names
/// the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Input/output failure (unwritable path, malformed file).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace topress
