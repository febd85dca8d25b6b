// Copyright 2026 The sptc Authors
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

#ifndef SPTC_ERROR_HPP_
#define SPTC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sptc {

enum class ErrorKind {
  kInvalidArgument,  // malformed input or violated precondition
  kParse,            // unreadable document or notation
  kInvariant,        // a structural invariant does not hold
  kBudget,           // an exhaustive sweep would exceed its budget
};

// All library failures are reported through this type; the C API maps the
// kind onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}
[[noreturn]] inline void throw_parse(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}
[[noreturn]] inline void throw_invariant(const std::string& what) {
  throw Error(ErrorKind::kInvariant, what);
}
[[noreturn]] inline void throw_budget(const std::string& what) {
  throw Error(ErrorKind::kBudget, what);
}

}  // namespace sptc

#endif  // SPTC_ERROR_HPP_
