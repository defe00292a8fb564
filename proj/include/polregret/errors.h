// Copyright 2026 The polregret Authors
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

#ifndef POLREGRET_ERRORS_H_
#define POLREGRET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace polregret {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGameError : public Error {
 public:
  using Error::Error;
};

class InvalidPolicyError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive scan over the policy class would exceed the configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Every surviving candidate assigns zero probability to observed data.
class RealizabilityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace polregret

#endif  // POLREGRET_ERRORS_H_
