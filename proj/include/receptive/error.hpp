/*
 * Copyright (c) 2026, The receptive-entropy authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace receptive {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or configuration. `field` names the offending field path
/// when one is known (e.g. "measure.p").
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// An enumeration or search exceeded its configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t requested,
              std::uint64_t budget)
      : Error(what + " (requested " + std::to_string(requested) +
              ", budget " + std::to_string(budget) + ")"),
        requested_(requested),
        budget_(budget) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

/// A computation was asked for outside the domain where it is defined:
/// index past n_max, truncation window too short, dyadic epsilon, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A finite approximation is too short for the requested (n, epsilon).
/// `required_length` is the smallest window length L that would do.
class WindowError : public DomainError {
 public:
  WindowError(const std::string& what, int required_length)
      : DomainError(what + " (required L = " +
                    std::to_string(required_length) + ")"),
        required_length_(required_length) {}

  int required_length() const noexcept { return required_length_; }

 private:
  int required_length_;
};

}  // namespace receptive
