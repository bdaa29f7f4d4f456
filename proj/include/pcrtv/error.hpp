// Copyright 2026 The pcrtv Authors
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

#ifndef PCRTV_ERROR_HPP
#define PCRTV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pcrtv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected: malformed data or a violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Reaching this is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Iterative solver hit its iteration cap before the requested gap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ValidationError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace pcrtv

#endif  // PCRTV_ERROR_HPP
