/*
 * Copyright 2026 The blendaug Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BLENDAUG_ERROR_H_
#define BLENDAUG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blendaug {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. When the input is line oriented, `line()` holds the
// 1-based line number and the message is prefixed with "line N: ".
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

  // Same error with `prefix` (typically a file name) prepended.
  FormatError WithPrefix(const std::string& prefix) const {
    FormatError e(prefix + ": " + what());
    e.line_ = line_;
    return e;
  }

 private:
  std::size_t line_ = 0;
};

// Precondition on argument values violated (bad span, rate mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Donor segment has zero energy and cannot be normalized.
class SilentDonorError : public Error {
 public:
  SilentDonorError() : Error("silent donor segment") {}
};

}  // namespace blendaug

#endif  // BLENDAUG_ERROR_H_
