// Copyright 2026 The meo Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meo {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t pos, std::string expected)
      : std::runtime_error(msg), pos_(pos), expected_(std::move(expected)) {}
  std::size_t position() const { return pos_; }
  const std::string &expected() const { return expected_; }

private:
  std::size_t pos_;
  std::string expected_;
};

class UnsupportedGroup : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string &msg, std::uint64_t reached)
      : std::runtime_error(msg), reached_(reached) {}
  std::uint64_t reached() const { return reached_; }

private:
  std::uint64_t reached_;
};

}  // namespace meo
