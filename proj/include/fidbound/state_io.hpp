// Copyright 2026 The fidbound Authors
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

#include <filesystem>
#include <iosfwd>

#include "fidbound/density_matrix.hpp"

namespace fidbound {

// Text format: line 1 holds N, followed by 2^N rows of 2^N whitespace
// separated entries written as "re,im".

/// Parses and fully validates a state. Throws ParseError for malformed text
/// (with line and column) and InvalidState for a failed invariant.
DensityMatrix parse_state(std::istream& in, DenseLimit limit = {});

DensityMatrix read_state_file(const std::filesystem::path& path,
                              DenseLimit limit = {});

/// Writes `rho` in the format accepted by parse_state, 17 significant digits.
void write_state(std::ostream& out, const DensityMatrix& rho);

}  // namespace fidbound
