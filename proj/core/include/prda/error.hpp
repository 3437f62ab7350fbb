// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace prda {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is outside the domain of the operation. `field`
/// names the offending parameter using its request/flag spelling.
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)), detail_(message) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& detail() const noexcept { return detail_; }

 protected:
  InvalidParameter(std::string field, std::string detail, const std::string& what)
      : Error(what), field_(std::move(field)), detail_(std::move(detail)) {}

 private:
  std::string field_;
  std::string detail_;
};

/// The sample-size search could not reach the requested power inside its range.
class UnreachablePower : public Error {
 public:
  UnreachablePower(int n_upper, double achieved_power, double target_power);

  int n_upper() const noexcept { return n_upper_; }
  double achieved_power() const noexcept { return achieved_power_; }
  double target_power() const noexcept { return target_power_; }

 private:
  int n_upper_;
  double achieved_power_;
  double target_power_;
};

class NumericFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace prda
