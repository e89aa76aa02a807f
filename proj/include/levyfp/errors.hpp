// Copyright 2026 The levyfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace levyfp {

// Invalid parameters or inputs outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative special-function evaluation ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Too many paths hit the simulation horizon for an estimator to be trusted.
class CensoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection sampling fell below its configured acceptance-rate floor.
class AcceptanceRateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levyfp
