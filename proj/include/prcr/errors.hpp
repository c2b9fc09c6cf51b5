// Copyright 2026 The prcr Authors.
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

#ifndef PRCR_ERRORS_HPP_
#define PRCR_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prcr {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed .mon / .sts input. Line numbers are 1-based, 0 when unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A construction request that the algorithms do not cover.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  class BudgetExhausted : public Error {
   public:
    using Error::Error;
  };

  // Broken internal invariant (e.g. a non-associative table slipped through).
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace prcr

#endif  // PRCR_ERRORS_HPP_
