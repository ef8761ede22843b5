// Copyright 2026 The tilecount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tilecount {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-integral binomial-basis coefficient: the polynomial does not count
/// anything.
class NotACountPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. `pointer` is a JSON pointer (or "line N" for
/// text formats) to the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : std::runtime_error(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// A configured budget (structures visited, table entries, memory) ran out.
/// Counts for n <= largest_completed_n are still exact and are carried along
/// (index 0 holds n = 1).
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, int largest_completed_n,
                     std::vector<mpz_class> partial = {})
      : std::runtime_error(what),
        largest_completed_n_(largest_completed_n),
        partial_(std::move(partial)) {}
  int largest_completed_n() const { return largest_completed_n_; }
  const std::vector<mpz_class>& partial_counts() const { return partial_; }

 private:
  int largest_completed_n_;
  std::vector<mpz_class> partial_;
};

}  // namespace tilecount
