#pragma once

#include <stdexcept>
#include <string>

namespace sg {

/// Base for every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector length or field shape does not match what an operator expects.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two fields live on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A sampled function returned a non-finite value.
class SamplingError : public Error {
 public:
  SamplingError(const std::string& what, std::size_t j, std::size_t k)
      : Error(what), j_(j), k_(k) {}
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t j_;
  std::size_t k_;
};

/// Non-finite value or vanishing derivative inside an iteration.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A time step could not enforce its energy constraint.
class StepError : public Error {
 public:
  StepError(const std::string& what, double residual, double iterate, int iterations)
      : Error(what), residual_(residual), iterate_(iterate), iterations_(iterations) {}
  double residual() const { return residual_; }
  double iterate() const { return iterate_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  double iterate_;
  int iterations_;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Requested study needs an exact solution the case does not provide.
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sg
