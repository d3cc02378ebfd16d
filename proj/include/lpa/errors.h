// Copyright 2026 The lpa-ideals Authors
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

#ifndef LPA_ERRORS_H_
#define LPA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The graph document is malformed or violates a DirectedGraph invariant.
class GraphError : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition: unknown vertex, a set
// that is not hereditary saturated, an inadmissible pair, a foreign edge in a
// path, and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap, or the graph is too large
// for exact enumeration.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::size_t limit)
      : Error(what), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace lpa

#endif  // LPA_ERRORS_H_
