// Copyright 2026 The Framesum Authors.
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

#ifndef FRAMESUM_ERRORS_H_
#define FRAMESUM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace framesum {

// Error categories. The numeric values are the CLI exit codes.
enum class ErrorKind {
  kUsage = 1,    // bad flags or configuration values
  kParse = 2,    // malformed frame input
  kLexicon = 3,  // missing or malformed WordNet database
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &message)
      : Error(ErrorKind::kUsage, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string &message)
      : Error(ErrorKind::kParse, message) {}
};

class LexiconError : public Error {
 public:
  explicit LexiconError(const std::string &message)
      : Error(ErrorKind::kLexicon, message) {}
};

}  // namespace framesum

#endif  // FRAMESUM_ERRORS_H_
