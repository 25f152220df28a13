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

#include <iosfwd>
#include <string>

#include "meo/builders.hpp"

namespace meo {

// Generator files: one element per line. Matrices are written
// `d q p f : e11 e12 ... edd` with each entry a comma-joined coefficient list
// (low degree first); permutations are space-separated 0-based image lists.
// Blank lines and lines starting with '#' are ignored. ParseError positions
// are 1-based line numbers.
GroupSource parse_generators(std::istream &in, const std::string &name = {});
GroupSource read_generator_file(const std::string &path);
void write_generators(std::ostream &out, const GroupSource &src);

// MEO_ATLAS_DATA if set, otherwise the build-time data directory.
std::string data_directory();

}  // namespace meo
